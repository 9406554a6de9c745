//! Integer combinations of semigroup elements, i.e. the semigroup ring `Z[G]`.
//!
//! Products of such combinations model products inside the covariance algebra
//! of the trivial algebra, where the `δ_g` are linearly independent.

use std::collections::BTreeMap;

use crate::isg::Isg;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem {
    terms: BTreeMap<usize, i64>,
}

impl RingElem {
    pub fn zero() -> Self {
        RingElem::default()
    }

    pub fn basis(g: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, 1);
        RingElem { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut out = RingElem::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn add_term(&mut self, g: usize, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(g).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.terms.iter().map(|(&g, &c)| (g, c))
    }

    pub fn coeff(&self, g: usize) -> i64 {
        self.terms.get(&g).copied().unwrap_or(0)
    }

    /// The single element `g` when `self = 1·g`.
    pub fn as_element(&self) -> Option<usize> {
        match self.terms.iter().collect::<Vec<_>>().as_slice() {
            [(&g, &1)] => Some(g),
            _ => None,
        }
    }

    pub fn add(&self, other: &RingElem) -> RingElem {
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g, c);
        }
        out
    }

    pub fn sub(&self, other: &RingElem) -> RingElem {
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g, -c);
        }
        out
    }

    pub fn mul(&self, other: &RingElem, s: &Isg) -> RingElem {
        let mut out = RingElem::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(s.mul(a, b), x * y);
            }
        }
        out
    }

    pub fn star(&self, s: &Isg) -> RingElem {
        RingElem::from_terms(self.terms().map(|(g, c)| (s.inv(g), c)))
    }

    /// Maps element indices through `f` (e.g. between a subsemigroup and its host).
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> RingElem {
        RingElem::from_terms(self.terms().map(|(g, c)| (f(g), c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial_perm::PartialPerm;

    #[test]
    fn projection_words_are_idempotent() {
        let s = Isg::close_generators(&[PartialPerm::partial_identity(2, &[0]), PartialPerm::partial_identity(2, &[1])], 10)
            .unwrap();
        let e1 = s.index_of(&PartialPerm::partial_identity(2, &[0])).unwrap();
        let e2 = s.index_of(&PartialPerm::partial_identity(2, &[1])).unwrap();
        // e1 (1 - e2) = e1 - e1 e2
        let p = RingElem::basis(e1).sub(&RingElem::basis(s.mul(e1, e2)));
        assert_eq!(p.mul(&p, &s), p);
        assert_eq!(p.star(&s), p);
        assert_eq!(RingElem::basis(e1).as_element(), Some(e1));
        assert_eq!(p.as_element(), None);
    }
}
