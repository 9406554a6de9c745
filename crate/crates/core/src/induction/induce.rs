//! Induced algebras `Ind_H^G(D)`.
//!
//! An element is a function on `G_H` with `f(gh) = p_{h*h} h*(f(g))`; it is
//! stored by its values on the transversal, where `f(r)` ranges over the
//! fiber of `D` at `r*r`.

use std::sync::Arc;

use crate::algebra::{GAlgebra, StarAlgebra, Violation};
use crate::error::{Error, Result};
use crate::fibers::FiberedDecomposition;
use crate::induction::coset::CosetTable;
use crate::isg::{Isg, SubIsg};
use crate::lattice::ProjLattice;
use crate::linalg::{self, Basis, Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct IndAlgebra {
    pub algebra: GAlgebra,
    pub base: GAlgebra,
    pub sub: SubIsg,
    pub cosets: CosetTable,
    base_fibers: FiberedDecomposition,
    offsets: Vec<usize>,
}

impl IndAlgebra {
    pub fn new(g: Arc<Isg>, sub: &SubIsg, base: &GAlgebra) -> Result<Self> {
        let cosets = CosetTable::new(&g, sub)?;
        IndAlgebra::with_cosets(g, sub, base, cosets)
    }

    /// Builds on a given transversal.
    pub fn with_cosets(g: Arc<Isg>, sub: &SubIsg, base: &GAlgebra, cosets: CosetTable) -> Result<Self> {
        if **base.semigroup() != *sub.isg {
            return Err(Error::InvalidAction("base algebra is not over the subsemigroup".into()));
        }
        let lat = ProjLattice::of_isg(sub.isg.clone());
        let base_fibers = FiberedDecomposition::over(base, lat)?;
        let mut offsets = Vec::with_capacity(cosets.len());
        let mut dim = 0;
        for &r in cosets.reps() {
            offsets.push(dim);
            dim += base_fibers.fiber_dim(Self::atom_for(&base_fibers, sub, g.domain_idem(r)));
        }
        let mut out = IndAlgebra {
            algebra: GAlgebra::zero(g.clone()),
            base: base.clone(),
            sub: sub.clone(),
            cosets,
            base_fibers,
            offsets,
        };
        let labels = (0..out.cosets.len())
            .flat_map(|c| (0..out.block_dim(c)).map(move |i| format!("[{}]{}", c, i)))
            .collect::<Vec<_>>();
        let mut products = vec![vec![linalg::zeros(dim); dim]; dim];
        let mut stars = vec![linalg::zeros(dim); dim];
        for c in 0..out.cosets.len() {
            let b = out.block_basis(c);
            let off = out.offsets[c];
            for i in 0..b.len() {
                let s = b.coords(&base.alg.star(b.vector(i))).expect("fibers are *-closed");
                place(&mut stars[off + i], off, &s);
                for j in 0..b.len() {
                    let p = b.coords(&base.alg.mul(b.vector(i), b.vector(j))).expect("fibers are subalgebras");
                    place(&mut products[off + i][off + j], off, &p);
                }
            }
        }
        let alg = StarAlgebra::new(labels, products, stars)?;
        let action = (0..g.len()).map(|k| out.action_matrix(k)).collect();
        out.algebra = GAlgebra::new(alg, g, action)?;
        Ok(out)
    }

    fn atom_for(fibers: &FiberedDecomposition, sub: &SubIsg, host_idem: usize) -> usize {
        let local = sub.to_local(host_idem).expect("domain idempotent lies in H");
        fibers.index_of(local).expect("idempotent of H labels an atom")
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn semigroup(&self) -> &Arc<Isg> {
        self.algebra.semigroup()
    }

    pub fn block_offset(&self, c: usize) -> usize {
        self.offsets[c]
    }

    pub fn block_dim(&self, c: usize) -> usize {
        self.block_basis(c).len()
    }

    /// Basis of the fiber of the base algebra holding `f(rep(c))`.
    pub fn block_basis(&self, c: usize) -> &Basis {
        let g = self.semigroup();
        self.base_fibers.basis(Self::atom_for(&self.base_fibers, &self.sub, g.domain_idem(self.cosets.rep(c))))
    }

    /// Projection of the base algebra onto its fiber at the host idempotent `e ∈ H`.
    pub fn base_projection(&self, e: usize) -> &Matrix {
        self.base_fibers.projection(Self::atom_for(&self.base_fibers, &self.sub, e))
    }

    pub fn base_fibers(&self) -> &FiberedDecomposition {
        &self.base_fibers
    }

    /// Value `f(x)` in the base algebra, zero off `G_H`.
    pub fn value_at(&self, f: &[Scalar], x: usize) -> Vector {
        let Some(c) = self.cosets.class_of(x) else {
            return linalg::zeros(self.base.dim());
        };
        let g = self.semigroup();
        let h = self.cosets.witness(x).expect("every member has a witness");
        let at_rep = self.rep_value(f, c);
        let hl = self.sub.to_local(g.inv(h)).expect("witness lies in H");
        self.base_projection(g.domain_idem(h)).apply(&self.base.act(hl, &at_rep))
    }

    /// `f(rep(c))` in base coordinates.
    pub fn rep_value(&self, f: &[Scalar], c: usize) -> Vector {
        let off = self.offsets[c];
        let b = self.block_basis(c);
        b.combine(&f[off..off + b.len()])
    }

    /// The element with `f(rep(c)) = v` for each listed class and zero elsewhere.
    pub fn from_rep_values(&self, values: &[(usize, Vector)]) -> Result<Vector> {
        let mut out = linalg::zeros(self.dim());
        for (c, v) in values {
            let coords = self
                .block_basis(*c)
                .coords(v)
                .ok_or_else(|| Error::DimensionMismatch(format!("value at class {c} is outside the fiber")))?;
            place(&mut out, self.offsets[*c], &coords);
        }
        Ok(out)
    }

    /// The element determined by its values at every class representative.
    pub fn from_function(&self, value: impl Fn(usize) -> Vector) -> Result<Vector> {
        let values: Vec<(usize, Vector)> = (0..self.cosets.len()).map(|c| (c, value(self.cosets.rep(c)))).collect();
        self.from_rep_values(&values)
    }

    /// `(k f)(g) = f(k* g) [kk* ≥ gg*]`, column by column.
    fn action_matrix(&self, k: usize) -> Matrix {
        let g = self.semigroup().clone();
        let dim: usize = (0..self.cosets.len()).map(|c| self.block_dim(c)).sum();
        let kk = g.range_idem(k);
        let mut m = Matrix::zeros(dim, dim);
        for c in 0..self.cosets.len() {
            let off = self.offsets[c];
            for i in 0..self.block_dim(c) {
                let mut f = linalg::zeros(dim);
                f[off + i] = Scalar::one();
                for c2 in 0..self.cosets.len() {
                    let r = self.cosets.rep(c2);
                    if !g.leq(g.range_idem(r), kk) {
                        continue;
                    }
                    let x = g.mul(g.inv(k), r);
                    if self.cosets.class_of(x) != Some(c) {
                        continue;
                    }
                    let v = self.value_at(&f, x);
                    let coords = self.block_basis(c2).coords(&v).expect("value lies in the fiber at the representative");
                    for (t, x) in coords.iter().enumerate() {
                        m[(self.offsets[c2] + t, off + i)] = x.clone();
                    }
                }
            }
        }
        m
    }

    /// The defining equivariance constraint on all of `G_H`, for every basis element.
    pub fn check_constraint(&self) -> Vec<Violation> {
        let g = self.semigroup();
        let mut out = Vec::new();
        for j in 0..self.dim() {
            let f = self.algebra.alg.basis_vector(j);
            for &x in self.cosets.members() {
                let fx = self.value_at(&f, x);
                for &h in self.sub.members() {
                    if g.range_idem(h) != g.domain_idem(x) {
                        continue;
                    }
                    let hl = self.sub.to_local(g.inv(h)).expect("h lies in H");
                    let expected = self.base_projection(g.domain_idem(h)).apply(&self.base.act(hl, &fx));
                    if self.value_at(&f, g.mul(x, h)) != expected {
                        out.push(Violation::new("induced constraint", format!("basis {j}, g={x}, h={h}")));
                        return out;
                    }
                }
            }
        }
        out
    }

    /// Expected dimension: sum over the transversal of the fiber dimensions.
    pub fn expected_dim(&self) -> usize {
        (0..self.cosets.len()).map(|c| self.block_dim(c)).sum()
    }

    /// `Ind(φ)` for an H-equivariant map `φ: D → D'` given the induced target.
    pub fn induce_map(&self, target: &IndAlgebra, phi: &Matrix) -> Result<Matrix> {
        if self.cosets.reps() != target.cosets.reps() {
            return Err(Error::DimensionMismatch("induced algebras use different transversals".into()));
        }
        let mut cols = Vec::with_capacity(self.dim());
        for j in 0..self.dim() {
            let f = self.algebra.alg.basis_vector(j);
            let values: Vec<(usize, Vector)> =
                (0..self.cosets.len()).map(|c| (c, phi.apply(&self.rep_value(&f, c)))).collect();
            cols.push(target.from_rep_values(&values)?);
        }
        Ok(Matrix::from_columns(target.dim(), &cols))
    }
}

fn place(target: &mut [Scalar], offset: usize, v: &[Scalar]) {
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            target[offset + i] += x;
        }
    }
}
