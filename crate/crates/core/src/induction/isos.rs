//! The comparison maps between induction, restriction and balanced tensors.

use std::sync::Arc;

use crate::algebra::{GAlgebra, Violation};
use crate::error::Result;
use crate::induction::coset::CosetTable;
use crate::induction::induce::IndAlgebra;
use crate::induction::restriction::Restriction;
use crate::isg::{Isg, SubIsg};
use crate::linalg::{self, Matrix, Vector};
use crate::models::GSet;
use crate::morphism::{check_map, Equivariance, MapReport};
use crate::scalar::Scalar;
use crate::tensor::BalancedTensor;

/// `c_0(G_H/H)` with `k: C ↦ class(k·rep(C))` when `rep(C) rep(C)* ≤ k*k`.
pub fn coset_gset(g: &Isg, cosets: &CosetTable) -> GSet {
    let labels = cosets.reps().iter().map(|r| format!("1_[{r}]")).collect();
    let maps = (0..g.len())
        .map(|k| {
            let dom = g.domain_idem(k);
            cosets
                .reps()
                .iter()
                .map(|&r| {
                    if g.leq(g.range_idem(r), dom) {
                        cosets.class_of(g.mul(k, r))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    GSet::new(g, labels, maps).expect("coset action is a G-set")
}

/// Everything needed to evaluate `μ: Ind R(B) → c_0(G_H/H) ⊗ B`.
pub struct MuIso {
    pub restriction: Restriction,
    pub induced: IndAlgebra,
    pub cosets_algebra: GAlgebra,
    pub target: BalancedTensor,
    pub matrix: Matrix,
    pub report: MapReport,
}

pub fn mu_iso(g: Arc<Isg>, sub: &SubIsg, b: &GAlgebra, cosets: Option<CosetTable>) -> Result<MuIso> {
    let restriction = Restriction::new(b, sub)?;
    let cosets = match cosets {
        Some(c) => c,
        None => CosetTable::new(&g, sub)?,
    };
    let induced = IndAlgebra::with_cosets(g.clone(), sub, &restriction.algebra, cosets)?;
    let cosets_algebra = coset_gset(&g, &induced.cosets).algebra(g.clone());
    let target = BalancedTensor::new(&cosets_algebra, b)?;
    let mut cols = Vec::with_capacity(induced.dim());
    for j in 0..induced.dim() {
        let f = induced.algebra.alg.basis_vector(j);
        let mut img = linalg::zeros(target.dim());
        for c in 0..induced.cosets.len() {
            let r = induced.cosets.rep(c);
            let value = restriction.include(&induced.rep_value(&f, c));
            if linalg::is_zero(&value) {
                continue;
            }
            let term = target.pure(&linalg::unit(induced.cosets.len(), c), &b.act(r, &value));
            linalg::axpy(&mut img, &Scalar::one(), &term);
        }
        cols.push(img);
    }
    let matrix = Matrix::from_columns(target.dim(), &cols);
    let report = check_map(&induced.algebra, &target.algebra, &matrix, Equivariance::Same, true);
    Ok(MuIso { restriction, induced, cosets_algebra, target, matrix, report })
}

/// `τ: Ind(A ⊗ R(B)) → Ind(A) ⊗ B`.
pub struct TauIso {
    pub restriction: Restriction,
    pub inner: BalancedTensor,
    pub source: IndAlgebra,
    pub induced_a: IndAlgebra,
    pub target: BalancedTensor,
    pub matrix: Matrix,
    pub report: MapReport,
}

pub fn tau_iso(g: Arc<Isg>, sub: &SubIsg, a: &GAlgebra, b: &GAlgebra, cosets: Option<CosetTable>) -> Result<TauIso> {
    let restriction = Restriction::new(b, sub)?;
    let inner = BalancedTensor::new(a, &restriction.algebra)?;
    let cosets = match cosets {
        Some(c) => c,
        None => CosetTable::new(&g, sub)?,
    };
    let source = IndAlgebra::with_cosets(g.clone(), sub, &inner.algebra, cosets.clone())?;
    let induced_a = IndAlgebra::with_cosets(g.clone(), sub, a, cosets)?;
    let target = BalancedTensor::new(&induced_a.algebra, b)?;
    let mut cols = Vec::with_capacity(source.dim());
    for j in 0..source.dim() {
        let f = source.algebra.alg.basis_vector(j);
        let mut img = linalg::zeros(target.dim());
        for c in 0..source.cosets.len() {
            let r = source.cosets.rep(c);
            let t = source.rep_value(&f, c);
            for blk in inner.blocks() {
                for i in 0..blk.left_dim {
                    for k in 0..blk.right_dim {
                        let coeff = &t[blk.offset + i * blk.right_dim + k];
                        if coeff.is_zero() {
                            continue;
                        }
                        let x = inner.left.basis(blk.atom).vector(i);
                        let y = restriction.include(inner.right.basis(blk.atom).vector(k));
                        let fx = induced_a.from_rep_values(&[(c, x.clone())])?;
                        let term = target.pure(&fx, &b.act(r, &y));
                        linalg::axpy(&mut img, coeff, &term);
                    }
                }
            }
        }
        cols.push(img);
    }
    let matrix = Matrix::from_columns(target.dim(), &cols);
    let report = check_map(&source.algebra, &target.algebra, &matrix, Equivariance::Same, true);
    Ok(TauIso { restriction, inner, source, induced_a, target, matrix, report })
}

/// `R(A ⊗ B) ≅ R(A) ⊗ R(B)` via `x ⊗ y ↦ x ⊗ y` on matching fibers.
pub fn restriction_of_tensor(a: &GAlgebra, b: &GAlgebra, sub: &SubIsg) -> Result<MapReport> {
    let ab = BalancedTensor::new(a, b)?;
    let r_ab = Restriction::new(&ab.algebra, sub)?;
    let r_a = Restriction::new(a, sub)?;
    let r_b = Restriction::new(b, sub)?;
    let rr = BalancedTensor::new(&r_a.algebra, &r_b.algebra)?;
    // an element of R(A ⊗ B) is a combination of pure tensors of fiber vectors
    let inc = r_ab.inclusion_matrix();
    let mut cols = Vec::with_capacity(r_ab.dim());
    for j in 0..r_ab.dim() {
        let v = inc.column(j);
        let mut img = linalg::zeros(rr.dim());
        for blk in ab.blocks() {
            for i in 0..blk.left_dim {
                for k in 0..blk.right_dim {
                    let coeff = &v[blk.offset + i * blk.right_dim + k];
                    if coeff.is_zero() {
                        continue;
                    }
                    let x = r_a.project(ab.left.basis(blk.atom).vector(i));
                    let y = r_b.project(ab.right.basis(blk.atom).vector(k));
                    linalg::axpy(&mut img, coeff, &rr.pure(&x, &y));
                }
            }
        }
        cols.push(img);
    }
    let m = Matrix::from_columns(rr.dim(), &cols);
    Ok(check_map(&r_ab.algebra, &rr.algebra, &m, Equivariance::Same, true))
}

/// The unit `ι_A: A → R(Ind(A))`, `ι(a)(x) = [x ∈ H] p_{x*x} x*(a)`.
pub struct Unit {
    pub induced: IndAlgebra,
    pub restriction: Restriction,
    pub matrix: Matrix,
    pub report: MapReport,
}

pub fn unit_iota(g: Arc<Isg>, sub: &SubIsg, a: &GAlgebra, cosets: Option<CosetTable>) -> Result<Unit> {
    let cosets = match cosets {
        Some(c) => c,
        None => CosetTable::new(&g, sub)?,
    };
    let induced = IndAlgebra::with_cosets(g.clone(), sub, a, cosets)?;
    let restriction = Restriction::new(&induced.algebra, sub)?;
    let mut cols = Vec::with_capacity(a.dim());
    for j in 0..a.dim() {
        let x = a.alg.basis_vector(j);
        let f = iota_function(&g, sub, &induced, &x)?;
        cols.push(restriction.project(&f));
    }
    let matrix = Matrix::from_columns(restriction.dim(), &cols);
    let report = check_map(a, &restriction.algebra, &matrix, Equivariance::Same, false);
    Ok(Unit { induced, restriction, matrix, report })
}

/// `ι(a)` as an element of `Ind(A)`.
pub fn iota_function(g: &Isg, sub: &SubIsg, induced: &IndAlgebra, a: &[Scalar]) -> Result<Vector> {
    induced.from_function(|r| match sub.to_local(r) {
        Some(_) => {
            let rs = sub.to_local(g.inv(r)).expect("H is closed under inverses");
            induced.base_projection(g.domain_idem(r)).apply(&induced.base.act(rs, a))
        }
        None => linalg::zeros(induced.base.dim()),
    })
}

/// `ι_{A'} ∘ φ = R(Ind(φ)) ∘ ι_A` for an H-equivariant `φ: A → A'`.
pub fn check_naturality(g: Arc<Isg>, sub: &SubIsg, a: &GAlgebra, a2: &GAlgebra, phi: &Matrix) -> Result<Vec<Violation>> {
    let u1 = unit_iota(g.clone(), sub, a, None)?;
    let u2 = unit_iota(g, sub, a2, None)?;
    let ind_phi = u1.induced.induce_map(&u2.induced, phi)?;
    let r_ind_phi = u1.restriction.restrict_map(&u2.restriction, &ind_phi);
    let lhs = u2.matrix.mul(phi);
    let rhs = r_ind_phi.mul(&u1.matrix);
    Ok(if lhs == rhs { vec![] } else { vec![Violation::new("naturality of the unit", "ι' φ ≠ R(Ind φ) ι")] })
}

/// Sum of atom projections of `H` acting on `A` is the identity.
pub fn atoms_sum_to_identity(a: &GAlgebra) -> bool {
    let d = crate::fibers::FiberedDecomposition::new(a);
    let mut sum = Matrix::zeros(a.dim(), a.dim());
    for i in 0..d.len() {
        sum = sum.add(d.projection(i));
    }
    sum.is_identity()
}
