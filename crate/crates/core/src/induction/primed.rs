//! The groupoid model of the coset space and of the induced algebra.
//!
//! Here `G'_H = {t = g p : p an atom of the projection lattice of H, t*t = p}`
//! inside the semigroup ring, with `t ≡ s` iff `t h = s` for some `h ∈ H`.
//! The bijection `δ(g p) = g σ(p)` identifies it with `G_H`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{GAlgebra, Violation};
use crate::induction::coset::CosetTable;
use crate::induction::induce::IndAlgebra;
use crate::isg::{Isg, SubIsg};
use crate::lattice::ProjLattice;
use crate::linalg::{self, Echelon, Matrix, Vector};
use crate::ring::RingElem;
use crate::scalar::Scalar;

pub struct PrimedCosets {
    pub elements: Vec<RingElem>,
    index: BTreeMap<RingElem, usize>,
    /// `δ(t)` as a host element.
    pub delta: Vec<usize>,
    /// Groupoid elements `k p` (k ∈ H, p an atom), nonzero.
    pub groupoid: Vec<RingElem>,
    /// Atom of each idempotent of `H` (host index), expanded.
    atoms: BTreeMap<usize, RingElem>,
}

impl PrimedCosets {
    pub fn index_of(&self, t: &RingElem) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `δ⁻¹(x) = x · p_{x*x}`.
    pub fn delta_inv(&self, g: &Isg, x: usize) -> Option<RingElem> {
        let p = self.atoms.get(&g.domain_idem(x))?;
        Some(RingElem::basis(x).mul(p, g))
    }
}

/// Builds `G'_H` and checks that `δ` is a class-preserving bijection onto `G_H`.
pub fn delta_bijection(g: &Isg, sub: &SubIsg, cosets: &CosetTable) -> (PrimedCosets, Vec<Violation>) {
    let mut out = Vec::new();
    let idems_h: Vec<usize> = sub.isg.idempotents().iter().map(|&l| sub.to_host(l)).collect();
    let lat = ProjLattice::of_idempotents(Arc::new(g.clone()), idems_h.clone()).expect("E_H is a semilattice");
    let mut atoms = BTreeMap::new();
    for &e in &idems_h {
        atoms.insert(e, lat.expand(&lat.atom(e).expect("label of its own atom")).expect("atom words expand"));
    }
    let mut index: BTreeMap<RingElem, usize> = BTreeMap::new();
    let mut delta_of: BTreeMap<RingElem, usize> = BTreeMap::new();
    for x in 0..g.len() {
        for (&e, p) in &atoms {
            let t = RingElem::basis(x).mul(p, g);
            if t.is_zero() || t.star(g).mul(&t, g) != *p {
                continue;
            }
            let d = g.mul(x, e);
            match delta_of.get(&t) {
                Some(&prev) if prev != d => {
                    out.push(Violation::new("δ well defined", format!("g={x}, atom {e}: {prev} vs {d}")));
                }
                Some(_) => {}
                None => {
                    delta_of.insert(t, d);
                }
            }
        }
    }
    let elements: Vec<RingElem> = delta_of.keys().cloned().collect();
    for (i, t) in elements.iter().enumerate() {
        index.insert(t.clone(), i);
    }
    let delta: Vec<usize> = elements.iter().map(|t| delta_of[t]).collect();
    let mut groupoid: Vec<RingElem> = Vec::new();
    for &k in sub.members() {
        for p in atoms.values() {
            let h = RingElem::basis(k).mul(p, g);
            if !h.is_zero() && !groupoid.contains(&h) {
                groupoid.push(h);
            }
        }
    }
    groupoid.sort();
    let primed = PrimedCosets { elements, index, delta, groupoid, atoms };

    if primed.len() != cosets.members().len() {
        out.push(Violation::new("|G'_H| = |G_H|", format!("{} vs {}", primed.len(), cosets.members().len())));
    }
    for (i, t) in primed.elements.iter().enumerate() {
        let d = primed.delta[i];
        if !cosets.contains(d) {
            out.push(Violation::new("δ lands in G_H", format!("t #{i}")));
            continue;
        }
        if primed.delta_inv(g, d).as_ref() != Some(t) {
            out.push(Violation::new("δ⁻¹ δ = id", format!("t #{i}")));
        }
    }
    for &x in cosets.members() {
        match primed.delta_inv(g, x).and_then(|t| primed.index_of(&t)) {
            Some(i) if primed.delta[i] == x => {}
            _ => out.push(Violation::new("δ δ⁻¹ = id", format!("g={x}"))),
        }
    }
    let related = |a: usize, b: usize| {
        sub.members().iter().any(|&h| primed.elements[a].mul(&RingElem::basis(h), g) == primed.elements[b])
    };
    for a in 0..primed.len() {
        for b in 0..primed.len() {
            let primed_rel = related(a, b) || related(b, a);
            let coset_rel = cosets.class_of(primed.delta[a]) == cosets.class_of(primed.delta[b]);
            if primed_rel != coset_rel {
                out.push(Violation::new("δ respects the equivalences", format!("t #{a}, t #{b}")));
            }
        }
    }
    (primed, out)
}

/// Builds the primed induced algebra and checks that `φ(f)(t) = f(δ(t))` is
/// a G-equivariant linear bijection onto it.
pub fn primed_comparison(g: &Arc<Isg>, sub: &SubIsg, a: &GAlgebra, ind: &IndAlgebra, primed: &PrimedCosets) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = a.dim();
    let m = primed.len();
    let to_local = |r: &RingElem| r.map_indices(|x| sub.to_local(x).expect("groupoid terms lie in H"));
    // constraints f(th) = h*(f(t))
    let mut constraints: Vec<(usize, usize, Matrix)> = Vec::new();
    for t in 0..m {
        for h in &primed.groupoid {
            let th = primed.elements[t].mul(h, g);
            if let Some(s) = primed.index_of(&th) {
                constraints.push((t, s, a.ring_matrix(&to_local(&h.star(g)))));
            }
        }
    }
    // components of the constraint graph, each solved on its own
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (t, s, _) in &constraints {
        let (x, y) = (find(&mut parent, *t), find(&mut parent, *s));
        parent[x] = y;
    }
    let mut primed_dim = 0;
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for t in 0..m {
        let r = find(&mut parent, t);
        comps.entry(r).or_default().push(t);
    }
    let mut all_rows: Vec<Vector> = Vec::new();
    for members in comps.values() {
        let pos = |t: usize| members.iter().position(|&x| x == t);
        let cols = members.len() * n;
        let mut rows = Vec::new();
        for (t, s, mat) in &constraints {
            let (Some(pt), Some(ps)) = (pos(*t), pos(*s)) else { continue };
            for i in 0..n {
                let mut row = linalg::zeros(cols);
                row[ps * n + i] += &Scalar::one();
                for j in 0..n {
                    row[pt * n + j] -= &mat[(i, j)];
                }
                let mut full = linalg::zeros(m * n);
                for (c, x) in row.iter().enumerate() {
                    full[members[c / n] * n + c % n] = x.clone();
                }
                all_rows.push(full);
                rows.push(row);
            }
        }
        let mut ech = Echelon::new(cols);
        for r in rows {
            ech.insert(r);
        }
        primed_dim += cols - ech.rank();
    }
    if primed_dim != ind.dim() {
        out.push(Violation::new("dim Ind' = dim Ind", format!("{primed_dim} vs {}", ind.dim())));
    }
    let phi = |f: &[Scalar]| -> Vector {
        let mut v = Vec::with_capacity(m * n);
        for t in 0..m {
            v.extend(ind.value_at(f, primed.delta[t]));
        }
        v
    };
    let images: Vec<Vector> = (0..ind.dim()).map(|j| phi(&ind.algebra.alg.basis_vector(j))).collect();
    for (j, img) in images.iter().enumerate() {
        if all_rows.iter().any(|row| !row.iter().zip(img).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y)).is_zero()) {
            out.push(Violation::new("φ lands in Ind'", format!("basis {j}")));
            break;
        }
    }
    if ind.dim() > 0 && Matrix::from_columns(m * n, &images).rank() != ind.dim() {
        out.push(Violation::new("φ injective", "rank deficit".to_string()));
    }
    // (k F)(t) = F(k* t) [kk* ≥ tt*]
    for k in 0..g.len() {
        let kk = RingElem::basis(g.range_idem(k));
        let kstar = RingElem::basis(g.inv(k));
        for (j, img) in images.iter().enumerate() {
            let moved = phi(&ind.algebra.act(k, &ind.algebra.alg.basis_vector(j)));
            let mut expected = linalg::zeros(m * n);
            for t in 0..m {
                let tt = primed.elements[t].mul(&primed.elements[t].star(g), g);
                if kk.mul(&tt, g) != tt {
                    continue;
                }
                let Some(s) = primed.index_of(&kstar.mul(&primed.elements[t], g)) else {
                    out.push(Violation::new("k* t lies in G'_H", format!("k={k}, t #{t}")));
                    continue;
                };
                for i in 0..n {
                    expected[t * n + i] = img[s * n + i].clone();
                }
            }
            if moved != expected {
                out.push(Violation::new("φ equivariant", format!("k={k}, basis {j}")));
                return out;
            }
        }
    }
    out
}
