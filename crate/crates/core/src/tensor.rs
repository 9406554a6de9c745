//! Balanced tensor products over the idempotent structure, computed fiberwise.

use crate::algebra::{GAlgebra, StarAlgebra, Violation};
use crate::error::{Error, Result};
use crate::fibers::FiberedDecomposition;
use crate::lattice::ProjLattice;
use crate::linalg::{self, Echelon, Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct TensorBlock {
    /// Local atom index.
    pub atom: usize,
    pub offset: usize,
    pub left_dim: usize,
    pub right_dim: usize,
}

/// `⊕_e A_e ⊗ B_e` with the diagonal action.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    pub algebra: GAlgebra,
    pub left: FiberedDecomposition,
    pub right: FiberedDecomposition,
    blocks: Vec<TensorBlock>,
}

impl BalancedTensor {
    pub fn new(a: &GAlgebra, b: &GAlgebra) -> Result<Self> {
        if **a.semigroup() != **b.semigroup() {
            return Err(Error::InvalidAction("balanced tensor of algebras over different semigroups".into()));
        }
        let lat = ProjLattice::of_isg(a.semigroup().clone());
        let left = FiberedDecomposition::over(a, lat.clone())?;
        let right = FiberedDecomposition::over(b, lat)?;
        let mut blocks = Vec::new();
        let mut offset = 0;
        for atom in 0..left.len() {
            let (da, db) = (left.fiber_dim(atom), right.fiber_dim(atom));
            if da * db == 0 {
                continue;
            }
            blocks.push(TensorBlock { atom, offset, left_dim: da, right_dim: db });
            offset += da * db;
        }
        let dim = offset;
        let mut labels = Vec::with_capacity(dim);
        let mut products = vec![vec![linalg::zeros(dim); dim]; dim];
        let mut stars = vec![linalg::zeros(dim); dim];
        for blk in &blocks {
            let (xa, xb) = (left.basis(blk.atom), right.basis(blk.atom));
            let e = left.lattice.label(blk.atom);
            for i in 0..blk.left_dim {
                for j in 0..blk.right_dim {
                    labels.push(format!("[{e}]{}⊗{}", i, j));
                    let p = blk.offset + i * blk.right_dim + j;
                    let sa = xa.coords(&a.alg.star(xa.vector(i))).expect("fibers are *-closed");
                    let sb = xb.coords(&b.alg.star(xb.vector(j))).expect("fibers are *-closed");
                    place(&mut stars[p], blk.offset, &linalg::kron(&sa, &sb));
                    for k in 0..blk.left_dim {
                        let pa = xa.coords(&a.alg.mul(xa.vector(i), xa.vector(k))).expect("fibers are ideals");
                        for l in 0..blk.right_dim {
                            let pb = xb.coords(&b.alg.mul(xb.vector(j), xb.vector(l))).expect("fibers are ideals");
                            let q = blk.offset + k * blk.right_dim + l;
                            place(&mut products[p][q], blk.offset, &linalg::kron(&pa, &pb));
                        }
                    }
                }
            }
        }
        let alg = StarAlgebra::new(labels, products, stars)?;
        let mut out = BalancedTensor { algebra: GAlgebra::zero(a.semigroup().clone()), left, right, blocks };
        let action = (0..a.semigroup().len())
            .map(|g| {
                let mut cols = Vec::with_capacity(dim);
                for blk in &out.blocks {
                    for i in 0..blk.left_dim {
                        for j in 0..blk.right_dim {
                            let x = a.act(g, out.left.basis(blk.atom).vector(i));
                            let y = b.act(g, out.right.basis(blk.atom).vector(j));
                            cols.push(out.pure_with_dim(dim, &x, &y));
                        }
                    }
                }
                Matrix::from_columns(dim, &cols)
            })
            .collect();
        out.algebra = GAlgebra::new(alg, a.semigroup().clone(), action)?;
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn blocks(&self) -> &[TensorBlock] {
        &self.blocks
    }

    /// Image of `x ⊗ y`: `Σ_e p_e(x) ⊗ p_e(y)`.
    pub fn pure(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.pure_with_dim(self.dim(), x, y)
    }

    fn pure_with_dim(&self, dim: usize, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = linalg::zeros(dim);
        for blk in &self.blocks {
            let cx = self.left.fiber_coords(blk.atom, x);
            if linalg::is_zero(&cx) {
                continue;
            }
            let cy = self.right.fiber_coords(blk.atom, y);
            place(&mut out, blk.offset, &linalg::kron(&cx, &cy));
        }
        out
    }

    /// The matrix of `x ⊗ y ↦ pure(x, y)` on the full tensor product basis.
    pub fn quotient_map(&self, a: &GAlgebra, b: &GAlgebra) -> Matrix {
        let mut cols = Vec::with_capacity(a.dim() * b.dim());
        for i in 0..a.dim() {
            for j in 0..b.dim() {
                cols.push(self.pure(&a.alg.basis_vector(i), &b.alg.basis_vector(j)));
            }
        }
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Compares against the quotient of `A ⊗ B` by the span of
    /// `e(a) ⊗ b - a ⊗ e(b)`, which is already an ideal.
    pub fn quotient_cross_check(&self, a: &GAlgebra, b: &GAlgebra) -> Vec<Violation> {
        let mut out = Vec::new();
        let full = StarAlgebra::tensor(&a.alg, &b.alg);
        let mut ideal = Echelon::new(full.dim());
        let mut gens = Vec::new();
        for &e in a.semigroup().idempotents() {
            for i in 0..a.dim() {
                let ea = a.act(e, &a.alg.basis_vector(i));
                for j in 0..b.dim() {
                    let eb = b.act(e, &b.alg.basis_vector(j));
                    let g = linalg::sub(&linalg::kron(&ea, &b.alg.basis_vector(j)), &linalg::kron(&a.alg.basis_vector(i), &eb));
                    if ideal.insert(g.clone()) {
                        gens.push(g);
                    }
                }
            }
        }
        for g in &gens {
            for k in 0..full.dim() {
                let bk = full.basis_vector(k);
                if !ideal.contains(&full.mul(g, &bk)) || !ideal.contains(&full.mul(&bk, g)) {
                    out.push(Violation::new("relation span is an ideal", format!("basis {k}")));
                    return out;
                }
            }
        }
        let q = self.quotient_map(a, b);
        for g in &gens {
            if !linalg::is_zero(&q.apply(g)) {
                out.push(Violation::new("fiberwise map kills relations", "relation not annihilated".to_string()));
                break;
            }
        }
        let quotient_dim = full.dim() - ideal.rank();
        if quotient_dim != self.dim() || q.rank() != self.dim() {
            out.push(Violation::new(
                "quotient dimension",
                format!("quotient {quotient_dim}, fiberwise {}, map rank {}", self.dim(), q.rank()),
            ));
        }
        'mult: for p in 0..full.dim() {
            for r in 0..full.dim() {
                let lhs = q.apply(&full.basis_product(p, r));
                let rhs = self.algebra.alg.mul(&q.apply(&full.basis_vector(p)), &q.apply(&full.basis_vector(r)));
                if lhs != rhs {
                    out.push(Violation::new("fiberwise map multiplicative", format!("({p}, {r})")));
                    break 'mult;
                }
            }
        }
        out
    }
}

fn place(target: &mut [Scalar], offset: usize, v: &[Scalar]) {
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            target[offset + i] += x;
        }
    }
}

/// `ε(E) ⊗ A` together with the comparison map `a ↦ Σ_e 1_e ⊗ a`.
pub struct FiberedModel {
    pub tensor: BalancedTensor,
    pub comparison: Matrix,
    pub report: crate::morphism::MapReport,
}

impl FiberedModel {
    pub fn is_fibered(&self) -> bool {
        self.report.bijective && self.report.is_ok()
    }
}

pub fn fibered_model(a: &GAlgebra) -> Result<FiberedModel> {
    let eps = crate::models::epsilon_algebra(a.semigroup().clone());
    let tensor = BalancedTensor::new(&eps, a)?;
    let ones = vec![Scalar::one(); eps.dim()];
    let cols: Vec<Vector> = (0..a.dim()).map(|i| tensor.pure(&ones, &a.alg.basis_vector(i))).collect();
    let comparison = Matrix::from_columns(tensor.dim(), &cols);
    let report = crate::morphism::check_map(a, &tensor.algebra, &comparison, crate::morphism::Equivariance::Same, true);
    Ok(FiberedModel { tensor, comparison, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isg::Isg;
    use crate::models::{c0_semigroup, epsilon_algebra};
    use crate::partial_perm::PartialPerm;
    use std::sync::Arc;

    fn semilattice() -> Arc<Isg> {
        Arc::new(Isg::close_generators(&[PartialPerm::identity(2), PartialPerm::partial_identity(2, &[0])], 10).unwrap())
    }

    #[test]
    fn epsilon_squared_has_dimension_two() {
        let s = semilattice();
        let eps = epsilon_algebra(s);
        let t = BalancedTensor::new(&eps, &eps).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(t.algebra.validate().is_empty());
        assert!(t.quotient_cross_check(&eps, &eps).is_empty());
    }

    #[test]
    fn function_algebras_are_fibered() {
        let s = semilattice();
        for a in [epsilon_algebra(s.clone()), c0_semigroup(s.clone())] {
            let m = fibered_model(&a).unwrap();
            assert!(m.is_fibered(), "{:?}", m.report);
        }
    }

    #[test]
    fn zero_factor_gives_zero_algebra() {
        let s = semilattice();
        let z = GAlgebra::zero(s.clone());
        let t = BalancedTensor::new(&epsilon_algebra(s), &z).unwrap();
        assert_eq!(t.dim(), 0);
    }
}
