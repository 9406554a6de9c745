//! Concrete G-algebras: function algebras on finite G-sets and random
//! instances built from them.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{GAlgebra, StarAlgebra};
use crate::error::{Error, Result};
use crate::isg::Isg;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A finite set with a partial bijection `ρ(g)` per semigroup element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    labels: Vec<String>,
    maps: Vec<Vec<Option<usize>>>,
}

impl GSet {
    /// Checks that `maps` is a homomorphism into partial bijections and that
    /// every point lies in the domain of some idempotent.
    pub fn new(s: &Isg, labels: Vec<String>, maps: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = labels.len();
        if maps.len() != s.len() || maps.iter().any(|m| m.len() != n) {
            return Err(Error::InvalidAction("G-set maps have the wrong shape".into()));
        }
        for (g, m) in maps.iter().enumerate() {
            let mut hit = vec![false; n];
            for y in m.iter().flatten() {
                if *y >= n || hit[*y] {
                    return Err(Error::InvalidAction(format!("map of element {g} is not a partial bijection")));
                }
                hit[*y] = true;
            }
        }
        for g in 0..s.len() {
            for h in 0..s.len() {
                let gh = s.mul(g, h);
                for y in 0..n {
                    if maps[gh][y] != maps[h][y].and_then(|z| maps[g][z]) {
                        return Err(Error::InvalidAction(format!("G-set maps are not multiplicative at ({g},{h})")));
                    }
                }
            }
        }
        for y in 0..n {
            if !s.idempotents().iter().any(|&e| maps[e][y].is_some()) {
                return Err(Error::InvalidAction(format!("point {} is not covered by any idempotent", labels[y])));
            }
        }
        Ok(GSet { labels, maps })
    }

    /// Idempotents with `g: a ↦ g a g*` on `a ≤ g*g`.
    pub fn epsilon(s: &Isg) -> GSet {
        let idems = s.idempotents();
        let pos = |e: usize| idems.binary_search(&e).expect("conjugate of an idempotent is idempotent");
        let maps = (0..s.len())
            .map(|g| {
                let dom = s.domain_idem(g);
                idems.iter().map(|&a| if s.leq(a, dom) { Some(pos(s.conj(g, a))) } else { None }).collect()
            })
            .collect();
        GSet { labels: idems.iter().map(|e| format!("1_{e}")).collect(), maps }
    }

    /// The semigroup itself with `k: x ↦ kx` on `xx* ≤ k*k`.
    pub fn regular(s: &Isg) -> GSet {
        let maps = (0..s.len())
            .map(|k| {
                let dom = s.domain_idem(k);
                (0..s.len()).map(|x| if s.leq(s.range_idem(x), dom) { Some(s.mul(k, x)) } else { None }).collect()
            })
            .collect();
        GSet { labels: (0..s.len()).map(|x| format!("1_{x}")).collect(), maps }
    }

    /// Points moved by the defining partial permutations.
    pub fn defining(s: &Isg) -> GSet {
        let covered: Vec<usize> =
            (0..s.degree()).filter(|&i| s.elements().iter().any(|g| g.apply(i).is_some())).collect();
        let pos = |i: usize| covered.binary_search(&i).ok();
        let maps = s
            .elements()
            .iter()
            .map(|g| covered.iter().map(|&i| g.apply(i).and_then(pos)).collect())
            .collect();
        GSet { labels: covered.iter().map(|i| format!("pt{}", i + 1)).collect(), maps }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn apply(&self, g: usize, y: usize) -> Option<usize> {
        self.maps[g][y]
    }

    /// The smallest invariant subset containing `y`.
    pub fn orbit(&self, y: usize) -> Vec<usize> {
        let mut member = vec![false; self.len()];
        member[y] = true;
        let mut stack = vec![y];
        while let Some(x) = stack.pop() {
            for m in &self.maps {
                if let Some(z) = m[x] {
                    if !member[z] {
                        member[z] = true;
                        stack.push(z);
                    }
                }
            }
        }
        (0..self.len()).filter(|&i| member[i]).collect()
    }

    /// Restriction to an invariant subset.
    pub fn restrict(&self, subset: &[usize]) -> Result<GSet> {
        let pos = |y: usize| subset.iter().position(|&z| z == y);
        let mut maps = Vec::with_capacity(self.maps.len());
        for m in &self.maps {
            let mut row = Vec::with_capacity(subset.len());
            for &y in subset {
                match m[y] {
                    Some(z) => row.push(Some(pos(z).ok_or_else(|| Error::InvalidAction("subset is not invariant".into()))?)),
                    None => row.push(None),
                }
            }
            maps.push(row);
        }
        Ok(GSet { labels: subset.iter().map(|&y| self.labels[y].clone()).collect(), maps })
    }

    /// `c_0(Y)` with `α_k(1_y) = 1_{ρ(k) y}` (zero off the domain).
    pub fn algebra(&self, s: Arc<Isg>) -> GAlgebra {
        let n = self.len();
        let alg = StarAlgebra::diagonal(n, "").with_labels(self.labels.clone());
        let action = self
            .maps
            .iter()
            .map(|m| {
                let mut a = Matrix::zeros(n, n);
                for (y, z) in m.iter().enumerate() {
                    if let Some(z) = z {
                        a[(*z, y)] = Scalar::one();
                    }
                }
                a
            })
            .collect();
        GAlgebra::new(alg, s, action).expect("G-set maps match the semigroup")
    }
}

/// `ε(E)`: functions on the idempotents with the conjugation action.
pub fn epsilon_algebra(s: Arc<Isg>) -> GAlgebra {
    GSet::epsilon(&s).algebra(s)
}

/// `c_0(G)` with `(k f)(g) = f(k* g) [kk* ≥ gg*]`.
pub fn c0_semigroup(s: Arc<Isg>) -> GAlgebra {
    GSet::regular(&s).algebra(s)
}

/// A random nondegenerate G-algebra of dimension at most `max_dim`:
/// a direct sum of blocks `c_0(Y) ⊗ M_k` over invariant pieces `Y` of the
/// given G-sets, with `g` acting as `ρ(g) ⊗ id`.
pub fn random_galgebra<R: Rng>(rng: &mut R, s: &Arc<Isg>, gsets: &[GSet], max_dim: usize) -> GAlgebra {
    let mut pieces: Vec<GSet> = Vec::new();
    for gs in gsets {
        for y in 0..gs.len() {
            let orbit = gs.orbit(y);
            if let Ok(sub) = gs.restrict(&orbit) {
                if !pieces.contains(&sub) {
                    pieces.push(sub);
                }
            }
        }
        if !pieces.contains(gs) {
            pieces.push(gs.clone());
        }
    }
    pieces.retain(|p| !p.is_empty() && p.len() <= max_dim);
    let mut parts: Vec<GAlgebra> = Vec::new();
    let mut used = 0;
    let blocks = rng.gen_range(1..=3);
    for _ in 0..blocks {
        let fitting: Vec<&GSet> = pieces.iter().filter(|p| used + p.len() <= max_dim).collect();
        let Some(piece) = fitting.choose(rng) else { break };
        let base = piece.algebra(s.clone());
        let k = if used + 4 * piece.len() <= max_dim && rng.gen_bool(0.3) { 2 } else { 1 };
        used += piece.len() * k * k;
        parts.push(if k == 1 { base } else { base.tensor_with(&StarAlgebra::matrix(k)) });
    }
    if parts.is_empty() {
        let smallest = pieces.iter().min_by_key(|p| p.len()).cloned().unwrap_or_else(|| GSet::epsilon(s));
        parts.push(smallest.algebra(s.clone()));
    }
    GAlgebra::direct_sum(&parts.iter().collect::<Vec<_>>()).expect("parts share the semigroup")
}

/// The standard pool of G-sets used for random algebras.
pub fn standard_gsets(s: &Isg) -> Vec<GSet> {
    let mut out = vec![GSet::epsilon(s), GSet::defining(s)];
    if s.len() <= 16 {
        out.push(GSet::regular(s));
    }
    out.retain(|g| !g.is_empty());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial_perm::PartialPerm;
    use rand::SeedableRng;

    fn semilattice() -> (Arc<Isg>, usize, usize) {
        let s = Arc::new(
            Isg::close_generators(&[PartialPerm::identity(2), PartialPerm::partial_identity(2, &[0])], 10).unwrap(),
        );
        let one = s.unit().unwrap();
        let e = s.index_of(&PartialPerm::partial_identity(2, &[0])).unwrap();
        (s, one, e)
    }

    #[test]
    fn epsilon_of_two_element_semilattice() {
        let (s, one, e) = semilattice();
        let a = epsilon_algebra(s.clone());
        let idx = |x: usize| s.idempotents().iter().position(|&f| f == x).unwrap();
        let v_e = a.alg.basis_vector(idx(e));
        let v_1 = a.alg.basis_vector(idx(one));
        assert_eq!(a.act(e, &v_e), v_e);
        assert!(crate::linalg::is_zero(&a.act(e, &v_1)));
        assert!(a.validate().is_empty());
    }

    #[test]
    fn function_algebras_are_valid() {
        let s = Arc::new(
            Isg::close_generators(
                &[PartialPerm::new(vec![Some(1), Some(0)]).unwrap(), PartialPerm::new(vec![Some(0), None]).unwrap()],
                100,
            )
            .unwrap(),
        );
        for a in [epsilon_algebra(s.clone()), c0_semigroup(s.clone()), GSet::defining(&s).algebra(s.clone())] {
            assert!(a.validate().is_empty());
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let a = random_galgebra(&mut rng, &s, &standard_gsets(&s), 6);
            assert!(a.dim() <= 6 && a.dim() >= 1);
            assert!(a.validate().is_empty());
        }
    }
}
