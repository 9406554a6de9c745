//! Finite inverse semigroups realized as partial permutations.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::partial_perm::PartialPerm;

pub const DEFAULT_SIZE_CAP: usize = 5000;

/// A finite inverse semigroup with full multiplication and inversion tables.
///
/// Elements are sorted by the canonical order of their partial permutations.
#[derive(Clone, Debug)]
pub struct Isg {
    degree: usize,
    elements: Vec<PartialPerm>,
    index: HashMap<PartialPerm, usize>,
    mult: Vec<u32>,
    inv: Vec<u32>,
    idempotents: Vec<usize>,
    is_idem: Vec<bool>,
    zero: Option<usize>,
}

impl PartialEq for Isg {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Isg {}

impl Isg {
    /// Smallest inverse subsemigroup of `I_n` containing `gens`.
    pub fn close_generators(gens: &[PartialPerm], cap: usize) -> Result<Isg> {
        let Some(first) = gens.first() else {
            return Err(Error::EmptySubset);
        };
        let degree = first.degree();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let mut letters: Vec<PartialPerm> = Vec::new();
        for g in gens {
            for x in [g.clone(), g.inverse()] {
                if !letters.contains(&x) {
                    letters.push(x);
                }
            }
        }
        let mut seen: HashSet<PartialPerm> = letters.iter().cloned().collect();
        if seen.len() > cap {
            return Err(Error::ClosureTooLarge { cap });
        }
        let mut queue: VecDeque<PartialPerm> = letters.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for s in &letters {
                let y = x.compose(s);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::ClosureTooLarge { cap });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(Isg::from_closed_set(degree, seen.into_iter().collect()))
    }

    /// Builds tables for a set already known to be closed.
    fn from_closed_set(degree: usize, mut elements: Vec<PartialPerm>) -> Isg {
        elements.sort();
        let index: HashMap<PartialPerm, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mult.push(index[&a.compose(b)] as u32);
            }
        }
        let inv: Vec<u32> = elements.iter().map(|a| index[&a.inverse()] as u32).collect();
        let is_idem: Vec<bool> = (0..n).map(|i| mult[i * n + i] as usize == i).collect();
        let idempotents: Vec<usize> = (0..n).filter(|&i| is_idem[i]).collect();
        let zero = (0..n).find(|&z| (0..n).all(|x| mult[z * n + x] as usize == z && mult[x * n + z] as usize == z));
        Isg { degree, elements, index, mult, inv, idempotents, is_idem, zero }
    }

    /// Rebuilds a semigroup from cached tables, verifying them against the elements.
    pub fn from_tables(degree: usize, elements: Vec<PartialPerm>, mult: &[usize], inv: &[usize]) -> Result<Isg> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::EmptySubset);
        }
        if let Some(p) = elements.iter().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: p.degree() });
        }
        if mult.len() != n * n || inv.len() != n || elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidAlgebra("cached tables do not match the element list".into()));
        }
        let isg = Isg::from_closed_set_checked(degree, elements)?;
        let consistent = (0..n).all(|a| isg.inv(a) == inv[a] && (0..n).all(|b| isg.mul(a, b) == mult[a * n + b]));
        if !consistent {
            return Err(Error::InvalidAlgebra("cached tables disagree with composition".into()));
        }
        Ok(isg)
    }

    fn from_closed_set_checked(degree: usize, elements: Vec<PartialPerm>) -> Result<Isg> {
        let set: HashSet<&PartialPerm> = elements.iter().collect();
        for a in &elements {
            if !set.contains(&a.inverse()) || elements.iter().any(|b| !set.contains(&a.compose(b))) {
                return Err(Error::NotASubsemigroup);
            }
        }
        Ok(Isg::from_closed_set(degree, elements))
    }

    /// Flat multiplication table, row-major.
    pub fn mult_table(&self) -> Vec<usize> {
        self.mult.iter().map(|&x| x as usize).collect()
    }

    /// Imports an abstract multiplication table (0-based) through the
    /// Wagner–Preston representation `a ↦ (x ↦ a·x on a*a·S)`.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Isg> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptySubset);
        }
        for row in table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidAlgebra("multiplication table is not square over its elements".into()));
            }
        }
        let m = |a: usize, b: usize| table[a][b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidAlgebra(format!("table not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            let cands: Vec<usize> = (0..n).filter(|&x| m(m(a, x), a) == a && m(m(x, a), x) == x).collect();
            if cands.len() != 1 {
                return Err(Error::InvalidAlgebra(format!("element {a} has {} inverses", cands.len())));
            }
            inv[a] = cands[0];
        }
        let mut gens = Vec::with_capacity(n);
        for a in 0..n {
            let src = m(inv[a], a);
            let images: Vec<Option<usize>> =
                (0..n).map(|x| if m(src, x) == x { Some(m(a, x)) } else { None }).collect();
            gens.push(PartialPerm::new(images)?);
        }
        let isg = Isg::close_generators(&gens, n.max(1))?;
        if isg.len() != n {
            return Err(Error::InvalidAlgebra("table is not an inverse semigroup".into()));
        }
        Ok(isg)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[PartialPerm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &PartialPerm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &PartialPerm) -> Option<usize> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.len() + b] as usize
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g·g*`
    pub fn range_idem(&self, g: usize) -> usize {
        self.mul(g, self.inv(g))
    }

    /// `g*·g`
    pub fn domain_idem(&self, g: usize) -> usize {
        self.mul(self.inv(g), g)
    }

    /// `g·e·g*`
    pub fn conj(&self, g: usize, e: usize) -> usize {
        self.mul3(g, e, self.inv(g))
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.is_idem[a]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn unit(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&u| (0..n).all(|x| self.mul(u, x) == x && self.mul(x, u) == x))
    }

    pub fn is_group(&self) -> bool {
        self.idempotents.len() == 1
    }

    /// Natural partial order: `g ≤ h` iff `g = h·g*·g`.
    pub fn leq(&self, g: usize, h: usize) -> bool {
        self.mul(h, self.domain_idem(g)) == g
    }

    /// All pairs `(g, h)` with `g ≤ h`.
    pub fn order_relation(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for g in 0..n {
            for h in 0..n {
                if self.leq(g, h) {
                    out.push((g, h));
                }
            }
        }
        out
    }

    pub fn is_closed_subset(&self, subset: &[usize]) -> bool {
        if subset.is_empty() {
            return false;
        }
        let mut member = vec![false; self.len()];
        for &s in subset {
            member[s] = true;
        }
        subset.iter().all(|&a| member[self.inv(a)] && subset.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// Sorted indices of the inverse subsemigroup generated by `seed`.
    pub fn generated_by(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.len()];
        let mut letters: Vec<usize> = Vec::new();
        for &s in seed {
            for x in [s, self.inv(s)] {
                if !member[x] {
                    member[x] = true;
                    letters.push(x);
                }
            }
        }
        let mut queue: VecDeque<usize> = letters.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &s in &letters {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.len()).filter(|&i| member[i]).collect()
    }

    /// Every inverse subsemigroup, sorted by size then members, up to `cap` of them.
    pub fn all_subsemigroups(&self, cap: usize) -> Vec<Vec<usize>> {
        let mut found: HashSet<Vec<usize>> = HashSet::new();
        let mut frontier: Vec<Vec<usize>> = Vec::new();
        for a in 0..self.len() {
            let s = self.generated_by(&[a]);
            if found.insert(s.clone()) {
                frontier.push(s);
            }
        }
        while let Some(s) = frontier.pop() {
            if found.len() >= cap {
                break;
            }
            for a in 0..self.len() {
                if s.binary_search(&a).is_ok() {
                    continue;
                }
                let mut seed = s.clone();
                seed.push(a);
                let t = self.generated_by(&seed);
                if found.len() < cap && found.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.truncate(cap);
        out
    }

    /// The subset as an inverse semigroup in its own right.
    pub fn restrict(&self, subset: &[usize]) -> Result<SubIsg> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !self.is_closed_subset(subset) {
            return Err(Error::NotASubsemigroup);
        }
        let mut members = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        let local = Isg::from_closed_set(self.degree, members.iter().map(|&i| self.elements[i].clone()).collect());
        let mut to_local = vec![None; self.len()];
        for (l, &g) in members.iter().enumerate() {
            to_local[g] = Some(l);
        }
        Ok(SubIsg { isg: Arc::new(local), embed: members, to_local })
    }

    /// The least idempotent `e0` and the group `e0·S·e0`, when `E` has a minimum.
    pub fn minimal_idempotent_group(&self) -> Option<(usize, Vec<usize>)> {
        let e0 = *self.idempotents.iter().find(|&&e| self.idempotents.iter().all(|&f| self.leq(e, f)))?;
        let mut group: Vec<usize> = (0..self.len()).map(|g| self.mul3(e0, g, e0)).collect();
        group.sort_unstable();
        group.dedup();
        let is_group = group.iter().all(|&x| {
            self.mul(e0, x) == x
                && self.mul(x, e0) == x
                && self.range_idem(x) == e0
                && self.domain_idem(x) == e0
                && group.iter().all(|&y| group.binary_search(&self.mul(x, y)).is_ok())
        });
        is_group.then_some((e0, group))
    }

    /// Exhaustive check of the inverse-semigroup axioms; returns violations.
    pub fn check_axioms(&self) -> Vec<String> {
        let n = self.len();
        let mut out = Vec::new();
        'assoc: for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        out.push(format!("associativity fails at ({a},{b},{c})"));
                        break 'assoc;
                    }
                }
            }
        }
        for a in 0..n {
            let s = self.inv(a);
            if self.mul3(a, s, a) != a || self.mul3(s, a, s) != s || self.inv(s) != a {
                out.push(format!("inverse axioms fail at {a}"));
            }
            for b in 0..n {
                if self.inv(self.mul(a, b)) != self.mul(self.inv(b), s) {
                    out.push(format!("involution is not an anti-automorphism at ({a},{b})"));
                }
            }
        }
        for &e in &self.idempotents {
            for &f in &self.idempotents {
                if self.mul(e, f) != self.mul(f, e) {
                    out.push(format!("idempotents {e},{f} do not commute"));
                }
                if (self.mul(e, f) == e) != self.leq(e, f) {
                    out.push(format!("order on idempotents disagrees at ({e},{f})"));
                }
            }
        }
        out
    }
}

/// An inverse subsemigroup with its embedding into the host.
#[derive(Clone, Debug)]
pub struct SubIsg {
    pub isg: Arc<Isg>,
    embed: Vec<usize>,
    to_local: Vec<Option<usize>>,
}

impl SubIsg {
    pub fn members(&self) -> &[usize] {
        &self.embed
    }

    pub fn to_host(&self, local: usize) -> usize {
        self.embed[local]
    }

    pub fn to_local(&self, host: usize) -> Option<usize> {
        self.to_local[host]
    }

    pub fn contains(&self, host: usize) -> bool {
        self.to_local[host].is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pp(images: &[Option<usize>]) -> PartialPerm {
        PartialPerm::from_one_based(images).unwrap()
    }

    fn i2() -> Isg {
        Isg::close_generators(&[pp(&[Some(2), Some(1)]), pp(&[Some(1), None])], 100).unwrap()
    }

    #[test]
    fn identity_closure_is_trivial() {
        let s = Isg::close_generators(&[PartialPerm::identity(2)], 10).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.is_group());
    }

    #[test]
    fn symmetric_inverse_monoid_on_two_points() {
        let s = i2();
        assert_eq!(s.len(), 7);
        assert_eq!(s.idempotents().len(), 4);
        assert!(s.check_axioms().is_empty());
        assert_eq!(s.zero(), s.index_of(&PartialPerm::empty(2)));
        let (e0, group) = s.minimal_idempotent_group().unwrap();
        assert_eq!(Some(e0), s.zero());
        assert_eq!(group, vec![e0]);
    }

    #[test]
    fn swap_generates_cyclic_group() {
        let s = Isg::close_generators(&[pp(&[Some(2), Some(1)])], 10).unwrap();
        assert_eq!(s.len(), 2);
        let (e0, group) = s.minimal_idempotent_group().unwrap();
        assert_eq!(Some(e0), s.unit());
        assert_eq!(group.len(), 2);
    }

    #[test]
    fn subsemigroup_checks() {
        let s = i2();
        let empty = s.index_of(&PartialPerm::empty(2)).unwrap();
        let id1 = s.index_of(&pp(&[Some(1), None])).unwrap();
        let swap = s.index_of(&pp(&[Some(2), Some(1)])).unwrap();
        assert!(s.is_closed_subset(&[empty, id1]));
        assert!(!s.is_closed_subset(&[swap]));
        assert!(s.is_closed_subset(s.idempotents()));
        assert_eq!(s.restrict(&[swap]).unwrap_err(), Error::NotASubsemigroup);
    }

    #[test]
    fn cap_and_degree_errors() {
        let gens = [pp(&[Some(2), Some(3), Some(1)]), pp(&[Some(2), Some(1), Some(3)])];
        assert_eq!(Isg::close_generators(&gens, 5).unwrap_err(), Error::ClosureTooLarge { cap: 5 });
        assert!(matches!(
            Isg::close_generators(&[PartialPerm::identity(2), PartialPerm::identity(3)], 10),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn wagner_preston_import() {
        let s = i2();
        let table: Vec<Vec<usize>> = (0..s.len()).map(|a| (0..s.len()).map(|b| s.mul(a, b)).collect()).collect();
        let t = Isg::from_table(&table).unwrap();
        assert_eq!(t.len(), 7);
        assert_eq!(t.idempotents().len(), 4);
    }
}
