//! The fibered restriction `R_G^H(A) = ⊕_{e ∈ E_H} A_e`.

use crate::algebra::{GAlgebra, Violation};
use crate::error::Result;
use crate::fibers::FiberedDecomposition;
use crate::isg::SubIsg;
use crate::linalg::{self, Basis, Matrix, Vector};
use crate::models::GSet;
use crate::morphism::{check_map, Equivariance};
use crate::scalar::Scalar;
use crate::tensor::BalancedTensor;

#[derive(Clone, Debug)]
pub struct Restriction {
    /// The H-algebra.
    pub algebra: GAlgebra,
    pub sub: SubIsg,
    fibers: FiberedDecomposition,
    /// `(host idempotent e ∈ E_H, offset, fiber dimension)` in basis order.
    blocks: Vec<(usize, usize, usize)>,
    basis: Basis,
}

impl Restriction {
    pub fn new(a: &GAlgebra, sub: &SubIsg) -> Result<Self> {
        let fibers = FiberedDecomposition::new(a);
        let mut vectors = Vec::new();
        let mut blocks = Vec::new();
        for &el in sub.isg.idempotents() {
            let e = sub.to_host(el);
            let atom = fibers.index_of(e).expect("idempotents of H are idempotents of G");
            blocks.push((e, vectors.len(), fibers.fiber_dim(atom)));
            vectors.extend(fibers.basis(atom).vectors().iter().cloned());
        }
        let basis = Basis::new(a.dim(), vectors).expect("distinct fibers are independent");
        let labels = blocks
            .iter()
            .flat_map(|&(e, _, d)| (0..d).map(move |i| format!("[{e}]{i}")))
            .collect();
        let alg = a.alg.subalgebra(&basis, labels)?;
        let action = (0..sub.isg.len())
            .map(|l| {
                let h = sub.to_host(l);
                let cols: Vec<Vector> = basis
                    .vectors()
                    .iter()
                    .map(|v| basis.coords(&a.act(h, v)).expect("H permutes the fibers over E_H"))
                    .collect();
                Matrix::from_columns(basis.len(), &cols)
            })
            .collect();
        let algebra = GAlgebra::new(alg, sub.isg.clone(), action)?;
        Ok(Restriction { algebra, sub: sub.clone(), fibers, blocks, basis })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn blocks(&self) -> &[(usize, usize, usize)] {
        &self.blocks
    }

    /// Inclusion into the ambient algebra.
    pub fn include(&self, x: &[Scalar]) -> Vector {
        self.basis.combine(x)
    }

    pub fn inclusion_matrix(&self) -> Matrix {
        Matrix::from_columns(self.basis.ambient_dim(), self.basis.vectors())
    }

    /// Projection of the ambient algebra onto the restriction.
    pub fn project(&self, a: &[Scalar]) -> Vector {
        let mut y = linalg::zeros(self.basis.ambient_dim());
        for &(e, _, _) in &self.blocks {
            let p = self.fibers.projection(self.fibers.index_of(e).expect("fiber exists"));
            linalg::axpy(&mut y, &Scalar::one(), &p.apply(a));
        }
        self.basis.coords(&y).expect("projection lands in the restriction")
    }

    /// `R(φ)` for a G-equivariant map `φ: A → B`.
    pub fn restrict_map(&self, target: &Restriction, phi: &Matrix) -> Matrix {
        let cols: Vec<Vector> = self.basis.vectors().iter().map(|v| target.project(&phi.apply(v))).collect();
        Matrix::from_columns(target.dim(), &cols)
    }

    /// Compares with `Res(ε(E_H) ⊗ Res_{H·E}(A))` computed over the
    /// subsemigroup generated by `H` and the idempotents.
    pub fn cross_check(&self, a: &GAlgebra) -> Vec<Violation> {
        let g = a.semigroup();
        let mut out = Vec::new();
        let mut seed: Vec<usize> = self.sub.members().to_vec();
        seed.extend_from_slice(g.idempotents());
        let he = match g.restrict(&g.generated_by(&seed)) {
            Ok(he) => he,
            Err(e) => return vec![Violation::new("H·E is an inverse subsemigroup", e.to_string())],
        };
        let eps = GSet::epsilon(&he.isg);
        let keep: Vec<usize> = eps
            .labels()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.sub.contains(he.to_host(he.isg.idempotents()[*i])))
            .map(|(i, _)| i)
            .collect();
        let eps_h = match eps.restrict(&keep) {
            Ok(s) => s.algebra(he.isg.clone()),
            Err(_) => return vec![Violation::new("ε(E_H) is H·E-invariant", "subset not invariant".to_string())],
        };
        let res_a = a.restrict(&he);
        let tensor = match BalancedTensor::new(&eps_h, &res_a) {
            Ok(t) => t,
            Err(e) => return vec![Violation::new("balanced tensor", e.to_string())],
        };
        if tensor.dim() != self.dim() {
            out.push(Violation::new("restriction dimension", format!("{} vs {}", tensor.dim(), self.dim())));
            return out;
        }
        // x in the fiber at e maps to 1_e ⊗ x
        let mut cols = Vec::with_capacity(self.dim());
        for &(e, off, d) in &self.blocks {
            let pos = keep
                .iter()
                .position(|&i| he.to_host(he.isg.idempotents()[i]) == e)
                .expect("every idempotent of H is kept");
            let one_e = linalg::unit(keep.len(), pos);
            for i in 0..d {
                cols.push(tensor.pure(&one_e, self.basis.vector(off + i)));
            }
        }
        let m = Matrix::from_columns(tensor.dim(), &cols);
        // compare as H-algebras: restrict the tensor along H ⊆ H·E
        let h_in_he: Vec<usize> = self.sub.members().iter().map(|&x| he.to_local(x).expect("H ⊆ H·E")).collect();
        let he_sub = he.isg.restrict(&h_in_he).expect("H is closed");
        let tensor_h = tensor.algebra.restrict(&he_sub);
        let report = check_map(&self.algebra, &tensor_h, &m, Equivariance::Same, true);
        out.extend(report.violations);
        out
    }
}
