//! Finite-dimensional *-algebras and G-algebras.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::isg::{Isg, SubIsg};
use crate::linalg::{self, axpy, is_zero, Basis, Echelon, Matrix, Vector};
use crate::ring::RingElem;
use crate::scalar::Scalar;
use crate::error::{Error, Result};

type Sparse = Vec<(usize, Scalar)>;

fn sparse(v: &[Scalar]) -> Sparse {
    linalg::support(v).map(|(i, x)| (i, x.clone())).collect()
}

/// Sorted sum of sparse terms with zero entries dropped.
fn normalize(mut terms: Sparse) -> Sparse {
    terms.sort_by_key(|(i, _)| *i);
    let mut out: Sparse = Vec::with_capacity(terms.len());
    for (i, x) in terms {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += &x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

fn dense(n: usize, s: &Sparse) -> Vector {
    let mut v = linalg::zeros(n);
    for (i, x) in s {
        v[*i] = x.clone();
    }
    v
}

/// A *-algebra given by structure constants on a fixed basis.
#[derive(Clone, PartialEq, Eq)]
pub struct StarAlgebra {
    dim: usize,
    labels: Vec<String>,
    table: Vec<Sparse>,
    star: Vec<Sparse>,
}

impl fmt::Debug for StarAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarAlgebra(dim {}, {:?})", self.dim, self.labels)
    }
}

/// A failed axiom with a witness, as produced by the validators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: String,
}

impl Violation {
    pub fn new(axiom: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation { axiom: axiom.into(), witness: witness.into() }
    }
}

impl StarAlgebra {
    /// `products[i][j]` is `b_i b_j`, `stars[i]` is `b_i*`.
    pub fn new(labels: Vec<String>, products: Vec<Vec<Vector>>, stars: Vec<Vector>) -> Result<Self> {
        let dim = labels.len();
        if products.len() != dim || stars.len() != dim {
            return Err(Error::DimensionMismatch("structure constants do not match the basis".into()));
        }
        let mut table = Vec::with_capacity(dim * dim);
        for row in &products {
            if row.len() != dim {
                return Err(Error::DimensionMismatch("structure constants do not match the basis".into()));
            }
            for v in row {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch("product vector has wrong length".into()));
                }
                table.push(sparse(v));
            }
        }
        let star = stars
            .iter()
            .map(|v| if v.len() == dim { Ok(sparse(v)) } else { Err(Error::DimensionMismatch("star vector".into())) })
            .collect::<Result<_>>()?;
        Ok(StarAlgebra { dim, labels, table, star })
    }

    /// Builds from sparse triplets `(i, j, k, c)` meaning `b_i b_j ∋ c·b_k`.
    pub fn from_triplets(
        labels: Vec<String>,
        products: &[(usize, usize, usize, Scalar)],
        stars: &[(usize, usize, Scalar)],
    ) -> Result<Self> {
        let dim = labels.len();
        let mut table = vec![Vector::new(); dim * dim];
        for t in table.iter_mut() {
            *t = linalg::zeros(dim);
        }
        for (i, j, k, c) in products {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimensionMismatch(format!("product triplet ({i},{j},{k}) out of range")));
            }
            table[i * dim + j][*k] += c;
        }
        let mut star = vec![linalg::zeros(dim); dim];
        for (i, k, c) in stars {
            if *i >= dim || *k >= dim {
                return Err(Error::DimensionMismatch(format!("star entry ({i},{k}) out of range")));
            }
            star[*i][*k] += c;
        }
        Ok(StarAlgebra { dim, labels, table: table.iter().map(|v| sparse(v)).collect(), star: star.iter().map(|v| sparse(v)).collect() })
    }

    pub fn zero() -> Self {
        StarAlgebra { dim: 0, labels: vec![], table: vec![], star: vec![] }
    }

    /// `C^n` with pointwise operations.
    pub fn diagonal(n: usize, prefix: &str) -> Self {
        let labels = (0..n).map(|i| format!("{prefix}{i}")).collect();
        let mut table = vec![Sparse::new(); n * n];
        for i in 0..n {
            table[i * n + i] = vec![(i, Scalar::one())];
        }
        let star = (0..n).map(|i| vec![(i, Scalar::one())]).collect();
        StarAlgebra { dim: n, labels, table, star }
    }

    pub fn complex() -> Self {
        StarAlgebra::diagonal(1, "1")
    }

    /// Full matrix algebra `M_n` on matrix units `E_ij` (index `i*n + j`).
    pub fn matrix(n: usize) -> Self {
        let dim = n * n;
        let labels = (0..n).flat_map(|i| (0..n).map(move |j| format!("E{i}{j}"))).collect();
        let mut table = vec![Sparse::new(); dim * dim];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    table[(i * n + j) * dim + j * n + l] = vec![(i * n + l, Scalar::one())];
                }
            }
        }
        let star = (0..n).flat_map(|i| (0..n).map(move |j| vec![(j * n + i, Scalar::one())])).collect();
        StarAlgebra { dim, labels, table, star }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        linalg::unit(self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        dense(self.dim, &self.table[i * self.dim + j])
    }

    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = linalg::zeros(self.dim);
        for (i, a) in linalg::support(x) {
            for (j, b) in linalg::support(y) {
                let ab = a * b;
                for (k, c) in &self.table[i * self.dim + j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    pub fn star(&self, x: &[Scalar]) -> Vector {
        let mut out = linalg::zeros(self.dim);
        for (i, a) in linalg::support(x) {
            let ac = a.conj();
            for (k, c) in &self.star[i] {
                out[*k] += &(&ac * c);
            }
        }
        out
    }

    pub fn basis_star(&self, i: usize) -> Vector {
        dense(self.dim, &self.star[i])
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.table[i * self.dim + j] == self.table[j * self.dim + i]))
    }

    /// The unit, if the algebra has one.
    pub fn unit(&self) -> Option<Vector> {
        let n = self.dim;
        if n == 0 {
            return Some(vec![]);
        }
        // x·b_j = b_j and b_j·x = b_j for all j, as a linear system in x
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let left: Vector = (0..n).map(|i| self.basis_product(i, j)[k].clone()).collect();
                let right: Vector = (0..n).map(|i| self.basis_product(j, i)[k].clone()).collect();
                let target = if j == k { Scalar::one() } else { Scalar::zero() };
                rows.push(left);
                rhs.push(target.clone());
                rows.push(right);
                rhs.push(target);
            }
        }
        Matrix::from_rows(n, &rows).solve(&rhs)
    }

    /// Associativity on basis triples and the involution axioms on basis pairs.
    pub fn check_axioms(&self) -> Vec<Violation> {
        let n = self.dim;
        let mut out = Vec::new();
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i * n + j];
                for k in 0..n {
                    let lhs = normalize(
                        ij.iter()
                            .flat_map(|(l, c)| self.table[l * n + k].iter().map(move |(m, d)| (*m, c * d)))
                            .collect(),
                    );
                    let rhs = normalize(
                        self.table[j * n + k]
                            .iter()
                            .flat_map(|(l, c)| self.table[i * n + l].iter().map(move |(m, d)| (*m, c * d)))
                            .collect(),
                    );
                    if lhs != rhs {
                        out.push(Violation::new("associativity", format!("({}, {}, {})", self.labels[i], self.labels[j], self.labels[k])));
                        break 'assoc;
                    }
                }
            }
        }
        for i in 0..n {
            if self.star(&self.basis_star(i)) != self.basis_vector(i) {
                out.push(Violation::new("involutive", self.labels[i].clone()));
                break;
            }
        }
        'anti: for i in 0..n {
            for j in 0..n {
                let lhs = normalize(
                    self.table[i * n + j]
                        .iter()
                        .flat_map(|(l, c)| {
                            let cc = c.conj();
                            self.star[*l].iter().map(move |(m, d)| (*m, &cc * d))
                        })
                        .collect(),
                );
                let rhs = normalize(
                    self.star[j]
                        .iter()
                        .flat_map(|(a, x)| self.star[i].iter().map(move |(b, y)| (a, b, x * y)))
                        .flat_map(|(a, b, xy)| self.table[a * n + b].iter().map(move |(m, d)| (*m, &xy * d)))
                        .collect(),
                );
                if lhs != rhs {
                    out.push(Violation::new("star anti-multiplicative", format!("({}, {})", self.labels[i], self.labels[j])));
                    break 'anti;
                }
            }
        }
        out
    }

    /// Builds from sparse rows: `table[i * dim + j]` holds `b_i b_j`.
    pub(crate) fn from_sparse(labels: Vec<String>, table: Vec<Sparse>, star: Vec<Sparse>) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim * dim || star.len() != dim {
            return Err(Error::DimensionMismatch("structure constants do not match the basis".into()));
        }
        let table: Vec<Sparse> = table.into_iter().map(normalize).collect();
        let star: Vec<Sparse> = star.into_iter().map(normalize).collect();
        if table.iter().chain(&star).any(|t| t.iter().any(|(k, _)| *k >= dim)) {
            return Err(Error::DimensionMismatch("structure constant index out of range".into()));
        }
        Ok(StarAlgebra { dim, labels, table, star })
    }

    pub fn direct_sum(parts: &[&StarAlgebra]) -> StarAlgebra {
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let mut labels = Vec::with_capacity(dim);
        let mut table = vec![Sparse::new(); dim * dim];
        let mut star = Vec::with_capacity(dim);
        let mut offset = 0;
        for (idx, p) in parts.iter().enumerate() {
            for l in &p.labels {
                labels.push(if parts.len() > 1 { format!("{idx}:{l}") } else { l.clone() });
            }
            for i in 0..p.dim {
                for j in 0..p.dim {
                    table[(offset + i) * dim + offset + j] =
                        p.table[i * p.dim + j].iter().map(|(k, c)| (offset + k, c.clone())).collect();
                }
                star.push(p.star[i].iter().map(|(k, c)| (offset + k, c.clone())).collect());
            }
            offset += p.dim;
        }
        StarAlgebra { dim, labels, table, star }
    }

    /// `A ⊗ B` on the basis `a_i ⊗ b_j` at index `i * dim B + j`.
    pub fn tensor(a: &StarAlgebra, b: &StarAlgebra) -> StarAlgebra {
        let dim = a.dim * b.dim;
        let labels = a.labels.iter().flat_map(|x| b.labels.iter().map(move |y| format!("{x}⊗{y}"))).collect();
        let mut table = vec![Sparse::new(); dim * dim];
        for i in 0..a.dim {
            for j in 0..b.dim {
                for k in 0..a.dim {
                    for l in 0..b.dim {
                        let mut terms = Sparse::new();
                        for (p, c) in &a.table[i * a.dim + k] {
                            for (q, d) in &b.table[j * b.dim + l] {
                                terms.push((p * b.dim + q, c * d));
                            }
                        }
                        terms.sort_by_key(|t| t.0);
                        table[(i * b.dim + j) * dim + k * b.dim + l] = terms;
                    }
                }
            }
        }
        let mut star = Vec::with_capacity(dim);
        for i in 0..a.dim {
            for j in 0..b.dim {
                let mut terms = Sparse::new();
                for (p, c) in &a.star[i] {
                    for (q, d) in &b.star[j] {
                        terms.push((p * b.dim + q, c * d));
                    }
                }
                terms.sort_by_key(|t| t.0);
                star.push(terms);
            }
        }
        StarAlgebra { dim, labels, table, star }
    }

    /// The *-subalgebra spanned by `basis`, in coordinates of that basis.
    pub fn subalgebra(&self, basis: &Basis, labels: Vec<String>) -> Result<StarAlgebra> {
        let k = basis.len();
        let mut products = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = Vec::with_capacity(k);
            for j in 0..k {
                let p = self.mul(basis.vector(i), basis.vector(j));
                row.push(basis.coords(&p).ok_or_else(|| Error::InvalidAlgebra("subspace not closed under product".into()))?);
            }
            products.push(row);
        }
        let stars = (0..k)
            .map(|i| basis.coords(&self.star(basis.vector(i))).ok_or_else(|| Error::InvalidAlgebra("subspace not closed under star".into())))
            .collect::<Result<Vec<_>>>()?;
        StarAlgebra::new(labels, products, stars)
    }

    /// Quotient by a two-sided *-ideal; representatives are supported on the
    /// non-pivot coordinates of `ideal`. Returns the quotient and the kept coordinates.
    pub fn quotient(&self, ideal: &Echelon) -> (StarAlgebra, Vec<usize>) {
        let pivots = ideal.pivots();
        let kept: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let reduce = |v: Vector| -> Vector {
            let mut w = v;
            ideal.reduce(&mut w);
            kept.iter().map(|&c| w[c].clone()).collect()
        };
        let products = kept
            .iter()
            .map(|&i| kept.iter().map(|&j| reduce(self.basis_product(i, j))).collect())
            .collect();
        let stars = kept.iter().map(|&i| reduce(self.basis_star(i))).collect();
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        (StarAlgebra::new(labels, products, stars).expect("quotient tables are square"), kept)
    }
}

/// A *-algebra with an action of a finite inverse semigroup by linear maps.
///
/// Column `j` of `action[g]` holds `α_g(b_j)`.
#[derive(Clone, Debug)]
pub struct GAlgebra {
    pub alg: StarAlgebra,
    semigroup: Arc<Isg>,
    action: Vec<Matrix>,
}

impl GAlgebra {
    pub fn new(alg: StarAlgebra, semigroup: Arc<Isg>, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != semigroup.len() {
            return Err(Error::InvalidAction(format!("{} action matrices for {} elements", action.len(), semigroup.len())));
        }
        if action.iter().any(|m| m.rows() != alg.dim() || m.cols() != alg.dim()) {
            return Err(Error::InvalidAction("action matrix has the wrong size".into()));
        }
        Ok(GAlgebra { alg, semigroup, action })
    }

    /// Every element acts as the identity.
    pub fn trivial(alg: StarAlgebra, semigroup: Arc<Isg>) -> Self {
        let action = vec![Matrix::identity(alg.dim()); semigroup.len()];
        GAlgebra { alg, semigroup, action }
    }

    pub fn zero(semigroup: Arc<Isg>) -> Self {
        GAlgebra::trivial(StarAlgebra::zero(), semigroup)
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn semigroup(&self) -> &Arc<Isg> {
        &self.semigroup
    }

    pub fn action_matrix(&self, g: usize) -> &Matrix {
        &self.action[g]
    }

    pub fn act(&self, g: usize, x: &[Scalar]) -> Vector {
        self.action[g].apply(x)
    }

    /// Linear extension of the action to an integer combination of elements.
    pub fn ring_matrix(&self, r: &RingElem) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (g, c) in r.terms() {
            m = m.add(&self.action[g].scale(&Scalar::from_int(c)));
        }
        m
    }

    /// Restriction along an inverse subsemigroup.
    pub fn restrict(&self, sub: &SubIsg) -> GAlgebra {
        let action = (0..sub.isg.len()).map(|l| self.action[sub.to_host(l)].clone()).collect();
        GAlgebra { alg: self.alg.clone(), semigroup: sub.isg.clone(), action }
    }

    /// Checks all G-algebra axioms; an empty result means valid.
    ///
    /// Besides the algebraic axioms this requires nondegeneracy of the
    /// idempotent action: the ranges of the `α_e` span the algebra.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.alg.check_axioms();
        let s = &*self.semigroup;
        let n = self.dim();
        let basis: Vec<Vector> = (0..n).map(|i| self.alg.basis_vector(i)).collect();
        let images: Vec<Vec<Vector>> = self.action.iter().map(|m| m.columns()).collect();
        'hom: for g in 0..s.len() {
            for h in 0..s.len() {
                let gh = s.mul(g, h);
                for j in 0..n {
                    if self.act(g, &images[h][j]) != images[gh][j] {
                        out.push(Violation::new("semigroup homomorphism", format!("g={g}, h={h}, basis {}", self.alg.label(j))));
                        break 'hom;
                    }
                }
            }
        }
        'mult: for g in 0..s.len() {
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.act(g, &self.alg.basis_product(i, j));
                    let rhs = self.alg.mul(&images[g][i], &images[g][j]);
                    if lhs != rhs {
                        out.push(Violation::new("action multiplicative", format!("g={g}, ({}, {})", self.alg.label(i), self.alg.label(j))));
                        break 'mult;
                    }
                }
            }
        }
        'star: for g in 0..s.len() {
            for i in 0..n {
                if self.act(g, &self.alg.basis_star(i)) != self.alg.star(&images[g][i]) {
                    out.push(Violation::new("action preserves star", format!("g={g}, {}", self.alg.label(i))));
                    break 'star;
                }
            }
        }
        'central: for &e in s.idempotents() {
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.alg.mul(&images[e][i], &basis[j]);
                    let rhs = self.alg.mul(&basis[i], &images[e][j]);
                    if lhs != rhs {
                        out.push(Violation::new(
                            "idempotents act as central multipliers",
                            format!("e={e}, ({}, {})", self.alg.label(i), self.alg.label(j)),
                        ));
                        break 'central;
                    }
                }
            }
        }
        let mut span = Echelon::new(n);
        for &e in s.idempotents() {
            for v in &images[e] {
                span.insert(v.clone());
            }
        }
        if span.rank() < n {
            out.push(Violation::new("nondegenerate", format!("idempotent ranges span {} of {n} dimensions", span.rank())));
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn direct_sum(parts: &[&GAlgebra]) -> Result<GAlgebra> {
        let Some(first) = parts.first() else {
            return Err(Error::DimensionMismatch("empty direct sum".into()));
        };
        let semigroup = first.semigroup.clone();
        if parts.iter().any(|p| *p.semigroup != *semigroup) {
            return Err(Error::InvalidAction("direct sum over different semigroups".into()));
        }
        let alg = StarAlgebra::direct_sum(&parts.iter().map(|p| &p.alg).collect::<Vec<_>>());
        let action = (0..semigroup.len()).map(|g| block_diagonal(&parts.iter().map(|p| &p.action[g]).collect::<Vec<_>>())).collect();
        Ok(GAlgebra { alg, semigroup, action })
    }

    /// `A ⊗ M` with `g` acting as `α_g ⊗ id`.
    pub fn tensor_with(&self, m: &StarAlgebra) -> GAlgebra {
        let alg = StarAlgebra::tensor(&self.alg, m);
        let id = Matrix::identity(m.dim());
        let action = self.action.iter().map(|a| kron_matrix(a, &id)).collect();
        GAlgebra { alg, semigroup: self.semigroup.clone(), action }
    }
}

pub fn block_diagonal(blocks: &[&Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut out = Matrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out[(off + i, off + j)] = b[(i, j)].clone();
            }
        }
        off += b.rows();
    }
    out
}

pub fn kron_matrix(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[(i * b.rows() + k, j * b.cols() + l)] = &a[(i, j)] * &b[(k, l)];
                }
            }
        }
    }
    out
}

/// Sum of vectors scaled by coefficients.
pub fn combine(coeffs: &[Scalar], vectors: &[Vector], dim: usize) -> Vector {
    let mut out = linalg::zeros(dim);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    is_zero(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial_perm::PartialPerm;

    #[test]
    fn matrix_algebra_axioms() {
        let m = StarAlgebra::matrix(2);
        assert!(m.check_axioms().is_empty());
        assert_eq!(m.unit().unwrap(), vec![1.into(), 0.into(), 0.into(), 1.into()]);
        assert!(!m.is_commutative());
        let t = StarAlgebra::tensor(&StarAlgebra::diagonal(2, "d"), &m);
        assert_eq!(t.dim(), 8);
        assert!(t.check_axioms().is_empty());
    }

    #[test]
    fn trivial_group_action_is_valid() {
        let g = Arc::new(Isg::close_generators(&[PartialPerm::new(vec![Some(1), Some(0)]).unwrap()], 10).unwrap());
        assert!(GAlgebra::trivial(StarAlgebra::complex(), g).validate().is_empty());
    }

    #[test]
    fn coordinate_swap_by_idempotent_is_rejected() {
        // {1, e} with e acting on C^2 by swapping coordinates
        let s = Arc::new(
            Isg::close_generators(&[PartialPerm::identity(2), PartialPerm::partial_identity(2, &[0])], 10).unwrap(),
        );
        let e = s.index_of(&PartialPerm::partial_identity(2, &[0])).unwrap();
        let swap = Matrix::from_rows(2, &[vec![0.into(), 1.into()], vec![1.into(), 0.into()]]);
        let mut action = vec![Matrix::identity(2); 2];
        action[e] = swap;
        let a = GAlgebra::new(StarAlgebra::diagonal(2, "p"), s, action).unwrap();
        let v = a.validate();
        assert!(v.iter().any(|x| x.axiom == "idempotents act as central multipliers"), "{v:?}");
    }

    #[test]
    fn broken_tables_are_reported() {
        // x·x = y, y·x = x, all other products zero; star is the identity
        let one = Scalar::one();
        let alg = StarAlgebra::from_triplets(
            vec!["x".into(), "y".into()],
            &[(0, 0, 1, one.clone()), (1, 0, 0, one.clone())],
            &[(0, 0, one.clone()), (1, 1, one)],
        )
        .unwrap();
        let v = alg.check_axioms();
        assert!(v.iter().any(|x| x.axiom == "associativity"), "{v:?}");
        assert!(v.iter().any(|x| x.axiom == "star anti-multiplicative"), "{v:?}");
    }
}
