//! Atom projections acting on G-algebras and the resulting fiber decomposition.

use crate::algebra::{GAlgebra, StarAlgebra, Violation};
use crate::error::{Error, Result};
use crate::lattice::{ProjLattice, TProj, Word};
use crate::linalg::{Basis, Matrix, Vector};
use crate::scalar::Scalar;

fn check_host(lat: &ProjLattice, a: &GAlgebra) -> Result<()> {
    if **lat.host() != **a.semigroup() {
        return Err(Error::InvalidAction("lattice and algebra live over different semigroups".into()));
    }
    Ok(())
}

/// `α_lead ∏ (id - α_n)` for a word.
pub fn act_word(w: &Word, a: &GAlgebra) -> Matrix {
    let mut m = a.action_matrix(w.lead).clone();
    let id = Matrix::identity(a.dim());
    for &f in &w.negatives {
        m = m.mul(&id.sub(a.action_matrix(f)));
    }
    m
}

/// The endomorphism of `A` induced by a lattice projection.
pub fn act_projection(lat: &ProjLattice, p: &TProj, a: &GAlgebra) -> Result<Matrix> {
    check_host(lat, a)?;
    let mut m = Matrix::zeros(a.dim(), a.dim());
    for atom in p.atoms() {
        m = m.add(&atom_projection(lat, atom, a));
    }
    Ok(m)
}

/// Projection onto the fiber at the atom with local index `atom`.
///
/// Uses the reduced word `e ∏_{f < e} (1 - f)`, equal to the atom word.
fn atom_projection(lat: &ProjLattice, atom: usize, a: &GAlgebra) -> Matrix {
    let below: Vec<usize> = (0..lat.len()).filter(|&b| b != atom && lat.leq_local(b, atom)).map(|b| lat.label(b)).collect();
    act_word(&Word::new(lat.label(atom), below), a)
}

/// The fibers `p_e(A)` for all atoms of a lattice.
#[derive(Clone, Debug)]
pub struct FiberedDecomposition {
    pub lattice: ProjLattice,
    projections: Vec<Matrix>,
    bases: Vec<Basis>,
}

impl FiberedDecomposition {
    /// Fibers over all idempotents of the algebra's semigroup.
    pub fn new(a: &GAlgebra) -> Self {
        let lat = ProjLattice::of_isg(a.semigroup().clone());
        FiberedDecomposition::over(a, lat).expect("lattice built from the algebra's own semigroup")
    }

    pub fn over(a: &GAlgebra, lattice: ProjLattice) -> Result<Self> {
        check_host(&lattice, a)?;
        let projections: Vec<Matrix> = (0..lattice.len()).map(|i| atom_projection(&lattice, i, a)).collect();
        let bases = projections
            .iter()
            .map(|p| Basis::new(a.dim(), p.column_space()).expect("column space rows are independent"))
            .collect();
        Ok(FiberedDecomposition { lattice, projections, bases })
    }

    pub fn len(&self) -> usize {
        self.projections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projections.is_empty()
    }

    /// Projection for the atom with local index `i`.
    pub fn projection(&self, i: usize) -> &Matrix {
        &self.projections[i]
    }

    pub fn basis(&self, i: usize) -> &Basis {
        &self.bases[i]
    }

    pub fn fiber_dim(&self, i: usize) -> usize {
        self.bases[i].len()
    }

    pub fn total_dim(&self) -> usize {
        self.bases.iter().map(Basis::len).sum()
    }

    /// Local atom index of the fiber labelled by the host idempotent `e`.
    pub fn index_of(&self, e: usize) -> Option<usize> {
        self.lattice.local(e)
    }

    /// Coordinates of `p_i(x)` in the fiber basis.
    pub fn fiber_coords(&self, i: usize, x: &[Scalar]) -> Vector {
        let y = self.projections[i].apply(x);
        self.bases[i].coords(&y).expect("projection lands in its fiber")
    }

    pub fn fiber_algebra(&self, a: &GAlgebra, i: usize) -> StarAlgebra {
        let labels = (0..self.bases[i].len()).map(|k| format!("f{k}")).collect();
        a.alg.subalgebra(&self.bases[i], labels).expect("fibers are *-subalgebras")
    }

    /// Fibers are ideals, pairwise orthogonal, equivariantly permuted, and
    /// (for a nondegenerate algebra) sum to the whole algebra.
    pub fn check(&self, a: &GAlgebra) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = a.dim();
        let s = a.semigroup();
        let mut sum = Matrix::zeros(n, n);
        for i in 0..self.len() {
            let p = &self.projections[i];
            if p.mul(p) != *p {
                out.push(Violation::new("fiber projection idempotent", format!("atom {}", self.lattice.label(i))));
            }
            for j in 0..self.len() {
                if i != j && !p.mul(&self.projections[j]).is_zero() {
                    out.push(Violation::new("fiber projections orthogonal", format!("atoms {i}, {j}")));
                }
            }
            sum = sum.add(p);
            for x in self.bases[i].vectors() {
                for k in 0..n {
                    let b = a.alg.basis_vector(k);
                    for prod in [a.alg.mul(x, &b), a.alg.mul(&b, x)] {
                        if p.apply(&prod) != prod {
                            out.push(Violation::new("fiber is an ideal", format!("atom {}, basis {k}", self.lattice.label(i))));
                        }
                    }
                }
                for j in 0..self.len() {
                    if i == j {
                        continue;
                    }
                    for y in self.bases[j].vectors() {
                        if !crate::linalg::is_zero(&a.alg.mul(x, y)) {
                            out.push(Violation::new("distinct fibers multiply to zero", format!("atoms {i}, {j}")));
                        }
                    }
                }
            }
            let e = self.lattice.label(i);
            for g in 0..s.len() {
                let lhs = a.action_matrix(g).mul(p);
                let expected = if s.leq(e, s.domain_idem(g)) {
                    match self.lattice.local(s.conj(g, e)) {
                        Some(t) => self.projections[t].mul(a.action_matrix(g)),
                        None => continue,
                    }
                } else {
                    Matrix::zeros(n, n)
                };
                if lhs != expected {
                    out.push(Violation::new("action permutes fibers", format!("g={g}, atom {e}")));
                }
            }
        }
        if out.is_empty() && !sum.is_identity() && a.is_valid() {
            out.push(Violation::new("fibers span the algebra", "sum of atom projections is not the identity"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isg::Isg;
    use crate::partial_perm::PartialPerm;
    use std::sync::Arc;

    #[test]
    fn trivial_action_concentrates_on_minimum() {
        let s = Arc::new(
            Isg::close_generators(&[PartialPerm::identity(2), PartialPerm::partial_identity(2, &[0])], 10).unwrap(),
        );
        let a = GAlgebra::trivial(StarAlgebra::diagonal(3, "x"), s.clone());
        let d = FiberedDecomposition::new(&a);
        let top = d.index_of(s.unit().unwrap()).unwrap();
        let e = d.index_of(s.index_of(&PartialPerm::partial_identity(2, &[0])).unwrap()).unwrap();
        // every idempotent acts as 1, which is the character of the least idempotent
        assert_eq!(d.fiber_dim(e), 3);
        assert_eq!(d.fiber_dim(top), 0);
        assert!(d.check(&a).is_empty());
    }
}
