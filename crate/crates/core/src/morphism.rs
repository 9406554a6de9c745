//! Checks on linear maps between G-algebras.

use serde::Serialize;

use crate::algebra::{GAlgebra, Violation};
use crate::linalg::Matrix;

#[derive(Clone, Debug, Serialize)]
pub struct MapReport {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub bijective: bool,
    pub violations: Vec<Violation>,
}

impl MapReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// How the source semigroup is matched against the target one when
/// checking equivariance.
pub enum Equivariance<'a> {
    /// Both algebras live over the same semigroup.
    Same,
    /// Source element `g` corresponds to target element `f(g)`.
    Along(&'a dyn Fn(usize) -> usize),
    None,
}

/// Verifies that `m` is a *-homomorphism, optionally equivariant and bijective.
pub fn check_map(src: &GAlgebra, tgt: &GAlgebra, m: &Matrix, eq: Equivariance<'_>, want_bijective: bool) -> MapReport {
    let mut violations = Vec::new();
    let (n, k) = (src.dim(), tgt.dim());
    if m.rows() != k || m.cols() != n {
        violations.push(Violation::new("map shape", format!("{}x{} for {n} -> {k}", m.rows(), m.cols())));
        return MapReport { source_dim: n, target_dim: k, rank: 0, bijective: false, violations };
    }
    let images = m.columns();
    'mult: for i in 0..n {
        for j in 0..n {
            if m.apply(&src.alg.basis_product(i, j)) != tgt.alg.mul(&images[i], &images[j]) {
                violations.push(Violation::new("multiplicative", format!("({}, {})", src.alg.label(i), src.alg.label(j))));
                break 'mult;
            }
        }
    }
    for i in 0..n {
        if m.apply(&src.alg.basis_star(i)) != tgt.alg.star(&images[i]) {
            violations.push(Violation::new("preserves star", src.alg.label(i).to_string()));
            break;
        }
    }
    let pair = |g: usize| -> Option<usize> {
        match &eq {
            Equivariance::Same => Some(g),
            Equivariance::Along(f) => Some(f(g)),
            Equivariance::None => None,
        }
    };
    for g in 0..src.semigroup().len() {
        let Some(t) = pair(g) else { break };
        if m.mul(src.action_matrix(g)) != tgt.action_matrix(t).mul(m) {
            violations.push(Violation::new("equivariant", format!("element {g}")));
            break;
        }
    }
    let rank = m.rank();
    let bijective = n == k && rank == n;
    if want_bijective && !bijective {
        violations.push(Violation::new("bijective", format!("rank {rank}, dimensions {n} -> {k}")));
    }
    MapReport { source_dim: n, target_dim: k, rank, bijective, violations }
}
