//! The two triangle identities of the induction/restriction adjunction,
//! checked both in closed form and on the Hilbert-module level.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{GAlgebra, Violation};
use crate::error::Result;
use crate::fibers::FiberedDecomposition;
use crate::induction::coset::CosetTable;
use crate::induction::isos::{mu_iso, unit_iota};
use crate::induction::restriction::Restriction;
use crate::isg::{Isg, SubIsg};
use crate::linalg::{self, Vector};
use crate::scalar::Scalar;
use crate::tensor::BalancedTensor;

#[derive(Clone, Debug, Serialize)]
pub struct TriangleCheck {
    pub name: String,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangleReport {
    pub checks: Vec<TriangleCheck>,
}

impl TriangleReport {
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(|c| c.violations.is_empty())
    }

    fn push(&mut self, name: &str, violations: Vec<Violation>) {
        self.checks.push(TriangleCheck { name: name.to_string(), violations });
    }
}

/// Writes `v ∈ c_0(G_H/H) ⊗ B` as `Σ_C 1_C ⊗ w_C`.
fn split_by_class(t: &BalancedTensor, classes: usize, v: &[Scalar]) -> Vec<Vector> {
    let dim_b = t.right.total_dim();
    let mut out = vec![linalg::zeros(dim_b); classes];
    for blk in t.blocks() {
        for i in 0..blk.left_dim {
            let x = t.left.basis(blk.atom).vector(i);
            for k in 0..blk.right_dim {
                let coeff = &v[blk.offset + i * blk.right_dim + k];
                if coeff.is_zero() {
                    continue;
                }
                let y = t.right.basis(blk.atom).vector(k);
                for (c, xc) in x.iter().enumerate() {
                    if !xc.is_zero() {
                        linalg::axpy(&mut out[c], &(coeff * xc), y);
                    }
                }
            }
        }
    }
    out
}

pub fn triangle_identities(g: Arc<Isg>, sub: &SubIsg, a: &GAlgebra, b: &GAlgebra) -> Result<TriangleReport> {
    let cosets = CosetTable::new(&g, sub)?;
    let mut report = TriangleReport { checks: Vec::new() };
    induction_side(&g, sub, a, &cosets, &mut report)?;
    restriction_side(&g, sub, b, &cosets, &mut report)?;
    Ok(report)
}

/// `μ_{Ind A} ∘ Ind(ι_A)` against `f ↦ Σ_C 1_C ⊗ f|_C`, and the module
/// `⊕_C δ_C ⊗ Ind(A)_{e_C}` with its copy of `Ind(A)`.
fn induction_side(g: &Arc<Isg>, sub: &SubIsg, a: &GAlgebra, cosets: &CosetTable, report: &mut TriangleReport) -> Result<()> {
    let ua = unit_iota(g.clone(), sub, a, Some(cosets.clone()))?;
    let x = &ua.induced;
    let mu = mu_iso(g.clone(), sub, &x.algebra, Some(cosets.clone()))?;
    let ind_iota = x.induce_map(&mu.induced, &ua.matrix)?;
    let comp = mu.matrix.mul(&ind_iota);
    let ncls = cosets.len();

    let mut closed = Vec::new();
    for j in 0..x.dim() {
        let f = x.algebra.alg.basis_vector(j);
        let mut expected = linalg::zeros(mu.target.dim());
        for c in 0..ncls {
            let piece = x.from_rep_values(&[(c, x.rep_value(&f, c))])?;
            linalg::axpy(&mut expected, &Scalar::one(), &mu.target.pure(&linalg::unit(ncls, c), &piece));
        }
        if comp.column(j) != expected {
            closed.push(Violation::new("μ Ind(ι) f = Σ 1_C ⊗ f|_C", format!("basis {j}")));
        }
    }
    report.push("induction triangle, closed form", closed);

    // module ⊕_C δ_C ⊗ X_{e_C} and its submodule of class-supported functions
    let fib = &mu.target.right;
    let mut module = Vec::new();
    let in_class = |c: usize, w: &[Scalar]| -> Result<bool> { Ok(x.from_rep_values(&[(c, x.rep_value(w, c))])? == w) };
    let mut h0: Vec<(usize, Vector)> = Vec::new();
    for c in 0..ncls {
        let e = g.range_idem(cosets.rep(c));
        let p = fib.index_of(e).map(|i| fib.projection(i).clone());
        for k in 0..x.block_dim(c) {
            let w = linalg::unit(x.dim(), x.block_offset(c) + k);
            if p.as_ref().map(|p| p.apply(&w)) != Some(w.clone()) {
                module.push(Violation::new("H_0 ⊆ M", format!("class {c}")));
            }
            h0.push((c, w));
        }
    }
    if h0.len() != x.dim() {
        module.push(Violation::new("u bijective", format!("{} vs {}", h0.len(), x.dim())));
    }
    for (i, (c, w)) in h0.iter().enumerate() {
        for (c2, w2) in &h0[i..] {
            let ip = x.algebra.alg.mul(&x.algebra.alg.star(w), w2);
            if c != c2 && !linalg::is_zero(&ip) {
                module.push(Violation::new("u isometric", format!("classes {c}, {c2}")));
            }
        }
        for j in 0..x.dim() {
            let wb = x.algebra.alg.mul(w, &x.algebra.alg.basis_vector(j));
            if !in_class(*c, &wb)? {
                module.push(Violation::new("u right module map", format!("class {c}, basis {j}")));
            }
        }
        let e = g.range_idem(cosets.rep(*c));
        for k in 0..g.len() {
            let moved = x.algebra.act(k, w);
            let ok = if g.leq(e, g.domain_idem(k)) {
                match cosets.class_of(g.mul(k, cosets.rep(*c))) {
                    Some(kc) => in_class(kc, &moved)?,
                    None => false,
                }
            } else {
                linalg::is_zero(&moved)
            };
            if !ok {
                module.push(Violation::new("u equivariant", format!("k={k}, class {c}")));
            }
        }
    }
    for j in 0..x.dim() {
        let parts = split_by_class(&mu.target, ncls, &comp.column(j));
        let bj = x.algebra.alg.basis_vector(j);
        for (c, w) in &h0 {
            if x.algebra.alg.mul(&parts[*c], w) != x.algebra.alg.mul(&bj, w) {
                module.push(Violation::new("u intertwines ρ(μ Ind(ι) b) with b", format!("basis {j}, class {c}")));
            }
        }
    }
    report.push("induction triangle, module", module);
    Ok(())
}

/// `R(μ_B) ∘ ι_{R(B)}` against `b ↦ Σ_{C ⊆ H} 1_C ⊗ b_{e_C}`, and the module
/// `⊕_{C ⊆ H} δ_C ⊗ R(B)_{e_C}`.
fn restriction_side(g: &Arc<Isg>, sub: &SubIsg, b: &GAlgebra, cosets: &CosetTable, report: &mut TriangleReport) -> Result<()> {
    let rb = Restriction::new(b, sub)?;
    let ub = unit_iota(g.clone(), sub, &rb.algebra, Some(cosets.clone()))?;
    let mu = mu_iso(g.clone(), sub, b, Some(cosets.clone()))?;
    let r_target = Restriction::new(&mu.target.algebra, sub)?;
    let comp = ub.restriction.restrict_map(&r_target, &mu.matrix).mul(&ub.matrix);
    let hfib = FiberedDecomposition::new(&rb.algebra);
    let ncls = cosets.len();
    let inner: Vec<usize> = (0..ncls).filter(|&c| sub.contains(cosets.rep(c))).collect();
    let fiber_of = |c: usize| {
        let e = g.range_idem(cosets.rep(c));
        hfib.index_of(sub.to_local(e).expect("idempotent of H"))
    };

    let mut closed = Vec::new();
    for j in 0..rb.dim() {
        let bj = rb.algebra.alg.basis_vector(j);
        let mut expected = linalg::zeros(mu.target.dim());
        for &c in &inner {
            let Some(i) = fiber_of(c) else { continue };
            let part = rb.include(&hfib.projection(i).apply(&bj));
            linalg::axpy(&mut expected, &Scalar::one(), &mu.target.pure(&linalg::unit(ncls, c), &part));
        }
        if comp.column(j) != r_target.project(&expected) {
            closed.push(Violation::new("R(μ) ι b = Σ 1_C ⊗ b_{e_C}", format!("basis {j}")));
        }
    }
    report.push("restriction triangle, closed form", closed);

    let mut module = Vec::new();
    let mut n0: Vec<(usize, Vector)> = Vec::new();
    for &c in &inner {
        if let Some(i) = fiber_of(c) {
            for w in hfib.basis(i).vectors() {
                n0.push((c, w.clone()));
            }
        }
    }
    if n0.len() != rb.dim() {
        module.push(Violation::new("v bijective", format!("{} vs {}", n0.len(), rb.dim())));
    }
    let alg = &rb.algebra.alg;
    let in_fiber = |c: usize, w: &[Scalar]| fiber_of(c).is_some_and(|i| hfib.projection(i).apply(w) == w);
    for (i, (c, w)) in n0.iter().enumerate() {
        for (c2, w2) in &n0[i..] {
            if c != c2 && !linalg::is_zero(&alg.mul(&alg.star(w), w2)) {
                module.push(Violation::new("v isometric", format!("classes {c}, {c2}")));
            }
        }
        for j in 0..rb.dim() {
            if !in_fiber(*c, &alg.mul(w, &alg.basis_vector(j))) {
                module.push(Violation::new("v right module map", format!("class {c}, basis {j}")));
            }
        }
        let e = g.range_idem(cosets.rep(*c));
        for hl in 0..sub.isg.len() {
            let h = sub.to_host(hl);
            let moved = rb.algebra.act(hl, w);
            let ok = if g.leq(e, g.domain_idem(h)) {
                cosets.class_of(g.mul(h, cosets.rep(*c))).is_some_and(|hc| in_fiber(hc, &moved))
            } else {
                linalg::is_zero(&moved)
            };
            if !ok {
                module.push(Violation::new("v equivariant", format!("h={h}, class {c}")));
            }
        }
    }
    for j in 0..rb.dim() {
        let parts = split_by_class(&mu.target, ncls, &r_target.include(&comp.column(j)));
        let bj = rb.include(&alg.basis_vector(j));
        for (c, w) in &n0 {
            let w = rb.include(w);
            if b.alg.mul(&parts[*c], &w) != b.alg.mul(&bj, &w) {
                module.push(Violation::new("v intertwines ρ(R(μ) ι b) with b", format!("basis {j}, class {c}")));
            }
        }
    }
    report.push("restriction triangle, module", module);
    Ok(())
}
