//! Boolean projection lattices generated by finite idempotent semilattices.
//!
//! A projection `e0 (1 - e1) ... (1 - en)` is stored as the set of atoms it
//! contains. Atoms are indexed by the idempotents of the semilattice: the atom
//! labelled `a` lies below a word iff `a ≤ e0` and no `ei ≥ a`.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::isg::Isg;
use crate::ring::RingElem;

/// A word `lead · ∏ (1 - n)` over the idempotents, in host indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub lead: usize,
    pub negatives: Vec<usize>,
}

impl Word {
    pub fn new(lead: usize, negatives: Vec<usize>) -> Self {
        Word { lead, negatives }
    }

    /// Inclusion–exclusion expansion inside `Z[G]`.
    pub fn expand(&self, s: &Isg) -> RingElem {
        let mut acc = RingElem::basis(self.lead);
        for &f in &self.negatives {
            let shifted = acc.mul(&RingElem::basis(f), s);
            acc = acc.sub(&shifted);
        }
        acc
    }

    /// `g · word · g*`, conjugated letter by letter.
    pub fn conjugate(&self, g: usize, s: &Isg) -> Word {
        Word { lead: s.conj(g, self.lead), negatives: self.negatives.iter().map(|&f| s.conj(g, f)).collect() }
    }
}

/// An element of the projection lattice: a set of atoms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TProj {
    atoms: FixedBitSet,
}

impl fmt::Debug for TProj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TProj{:?}", self.atoms.ones().collect::<Vec<_>>())
    }
}

impl TProj {
    pub fn empty(n: usize) -> Self {
        TProj { atoms: FixedBitSet::with_capacity(n) }
    }

    pub fn full(n: usize) -> Self {
        let mut atoms = FixedBitSet::with_capacity(n);
        atoms.insert_range(..);
        TProj { atoms }
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut p = TProj::empty(n);
        p.atoms.insert(i);
        p
    }

    pub fn from_atoms(n: usize, atoms: impl IntoIterator<Item = usize>) -> Self {
        let mut p = TProj::empty(n);
        for a in atoms {
            p.atoms.insert(a);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_clear()
    }

    pub fn contains(&self, atom: usize) -> bool {
        self.atoms.contains(atom)
    }

    /// Local atom indices in increasing order.
    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        self.atoms.ones()
    }

    pub fn count(&self) -> usize {
        self.atoms.count_ones(..)
    }

    pub fn meet(&self, other: &TProj) -> TProj {
        TProj { atoms: &self.atoms & &other.atoms }
    }

    pub fn join(&self, other: &TProj) -> TProj {
        TProj { atoms: &self.atoms | &other.atoms }
    }

    pub fn complement(&self) -> TProj {
        let mut atoms = self.atoms.clone();
        atoms.toggle_range(..);
        TProj { atoms }
    }

    pub fn is_disjoint(&self, other: &TProj) -> bool {
        self.atoms.is_disjoint(&other.atoms)
    }

    pub fn leq(&self, other: &TProj) -> bool {
        self.atoms.is_subset(&other.atoms)
    }
}

/// The projection lattice of a semilattice of idempotents inside a host semigroup.
#[derive(Clone, Debug)]
pub struct ProjLattice {
    host: Arc<Isg>,
    idems: Vec<usize>,
    local: Vec<Option<usize>>,
    // leq[a * n + b] iff idems[a] ≤ idems[b]
    leq: Vec<bool>,
}

impl ProjLattice {
    /// Lattice of all idempotents of `host`.
    pub fn of_isg(host: Arc<Isg>) -> Self {
        let idems = host.idempotents().to_vec();
        ProjLattice::build(host, idems)
    }

    /// Lattice of a multiplicatively closed set of idempotents of `host`.
    pub fn of_idempotents(host: Arc<Isg>, mut idems: Vec<usize>) -> Result<Self> {
        idems.sort_unstable();
        idems.dedup();
        if idems.is_empty() {
            return Err(Error::EmptySubset);
        }
        if idems.iter().any(|&e| !host.is_idempotent(e)) {
            return Err(Error::InvalidPartialPerm("lattice letters must be idempotent".into()));
        }
        if idems.iter().any(|&e| idems.iter().any(|&f| idems.binary_search(&host.mul(e, f)).is_err())) {
            return Err(Error::NotASubsemigroup);
        }
        Ok(ProjLattice::build(host, idems))
    }

    fn build(host: Arc<Isg>, idems: Vec<usize>) -> Self {
        let n = idems.len();
        let mut local = vec![None; host.len()];
        for (i, &e) in idems.iter().enumerate() {
            local[e] = Some(i);
        }
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = host.mul(idems[a], idems[b]) == idems[a];
            }
        }
        ProjLattice { host, idems, local, leq }
    }

    pub fn host(&self) -> &Arc<Isg> {
        &self.host
    }

    /// Number of atoms, equal to the number of idempotents.
    pub fn len(&self) -> usize {
        self.idems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idems.is_empty()
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idems
    }

    /// Host index of the idempotent labelling atom `i`.
    pub fn label(&self, i: usize) -> usize {
        self.idems[i]
    }

    pub fn local(&self, e: usize) -> Option<usize> {
        self.local.get(e).copied().flatten()
    }

    fn local_checked(&self, e: usize) -> Result<usize> {
        self.local(e).ok_or_else(|| Error::InvalidPartialPerm(format!("element {e} is not an idempotent of this lattice")))
    }

    pub fn leq_local(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn zero(&self) -> TProj {
        TProj::empty(self.len())
    }

    pub fn top(&self) -> TProj {
        TProj::full(self.len())
    }

    /// Atoms below the idempotent `e`, i.e. `e` itself as a projection.
    pub fn down_set(&self, e: usize) -> Result<TProj> {
        self.word_to_atoms(&Word::new(e, vec![]))
    }

    pub fn word_to_atoms(&self, w: &Word) -> Result<TProj> {
        let lead = self.local_checked(w.lead)?;
        let negs = w.negatives.iter().map(|&f| self.local_checked(f)).collect::<Result<Vec<_>>>()?;
        Ok(TProj::from_atoms(
            self.len(),
            (0..self.len()).filter(|&a| self.leq_local(a, lead) && negs.iter().all(|&f| !self.leq_local(a, f))),
        ))
    }

    /// The defining word of the atom labelled by the idempotent `e`.
    pub fn atom_word(&self, e: usize) -> Result<Word> {
        let a = self.local_checked(e)?;
        let negatives = (0..self.len()).filter(|&f| !self.leq_local(a, f)).map(|f| self.idems[f]).collect();
        Ok(Word::new(e, negatives))
    }

    /// The atom labelled `e` (inverse of the leading coefficient on atoms).
    pub fn atom(&self, e: usize) -> Result<TProj> {
        Ok(TProj::singleton(self.len(), self.local_checked(e)?))
    }

    /// All atoms, keyed by the host index of their label.
    pub fn atoms(&self) -> Vec<(usize, TProj)> {
        (0..self.len()).map(|i| (self.idems[i], TProj::singleton(self.len(), i))).collect()
    }

    /// Leading coefficient: the least idempotent above every atom of `p`.
    pub fn sigma(&self, p: &TProj) -> Result<usize> {
        if p.is_zero() {
            return Err(Error::ZeroProjection);
        }
        let upper: Vec<usize> = (0..self.len()).filter(|&f| p.atoms().all(|a| self.leq_local(a, f))).collect();
        let Some(&first) = upper.first() else {
            return Err(Error::NoLeadingCoefficient);
        };
        let meet = upper.iter().fold(self.idems[first], |acc, &f| self.host.mul(acc, self.idems[f]));
        let m = self.local(meet).ok_or(Error::NoLeadingCoefficient)?;
        if upper.iter().all(|&f| self.leq_local(m, f)) && upper.contains(&m) {
            Ok(meet)
        } else {
            Err(Error::NoLeadingCoefficient)
        }
    }

    /// `g p g*` for a host element `g`, evaluated in `target`.
    ///
    /// Each atom word is conjugated letter by letter; the result is the union.
    pub fn conjugate(&self, g: usize, p: &TProj, target: &ProjLattice) -> Result<TProj> {
        let mut out = target.zero();
        for a in p.atoms() {
            let w = self.atom_word(self.idems[a])?.conjugate(g, &self.host);
            out = out.join(&target.word_to_atoms(&w)?);
        }
        Ok(out)
    }

    /// Re-expresses a projection of this lattice in a finer lattice whose
    /// idempotents contain these.
    pub fn embed(&self, p: &TProj, target: &ProjLattice) -> Result<TProj> {
        let mut out = target.zero();
        for a in p.atoms() {
            out = out.join(&target.word_to_atoms(&self.atom_word(self.idems[a])?)?);
        }
        Ok(out)
    }

    /// Sum of the atom words of `p`, expanded in `Z[G]`.
    pub fn expand(&self, p: &TProj) -> Result<RingElem> {
        let mut acc = RingElem::zero();
        for a in p.atoms() {
            acc = acc.add(&self.atom_word(self.idems[a])?.expand(&self.host));
        }
        Ok(acc)
    }

    /// Every nonzero word in reduced form, one per projection: a lead and an
    /// antichain of negatives strictly below it. One zero word per lead is
    /// appended after each lead's words.
    pub fn enumerate_words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            let below: Vec<usize> = (0..self.len()).filter(|&b| b != a && self.leq_local(b, a)).collect();
            let mut chosen = Vec::new();
            self.antichains(&below, 0, &mut chosen, &mut |negs| {
                out.push(Word::new(self.idems[a], negs.iter().map(|&b| self.idems[b]).collect()));
            });
            out.push(Word::new(self.idems[a], vec![self.idems[a]]));
        }
        out
    }

    fn antichains(&self, pool: &[usize], from: usize, chosen: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        emit(chosen);
        for i in from..pool.len() {
            let x = pool[i];
            if chosen.iter().any(|&y| self.leq_local(x, y) || self.leq_local(y, x)) {
                continue;
            }
            chosen.push(x);
            self.antichains(pool, i + 1, chosen, emit);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial_perm::PartialPerm;

    fn e_of_i2() -> (Arc<Isg>, [usize; 4]) {
        let s = Arc::new(
            Isg::close_generators(
                &[PartialPerm::identity(2), PartialPerm::partial_identity(2, &[0]), PartialPerm::partial_identity(2, &[1])],
                10,
            )
            .unwrap(),
        );
        let id = s.index_of(&PartialPerm::identity(2)).unwrap();
        let e1 = s.index_of(&PartialPerm::partial_identity(2, &[0])).unwrap();
        let e2 = s.index_of(&PartialPerm::partial_identity(2, &[1])).unwrap();
        let z = s.index_of(&PartialPerm::empty(2)).unwrap();
        (s, [z, e1, e2, id])
    }

    #[test]
    fn word_membership_over_four_idempotents() {
        let (s, [z, e1, e2, id]) = e_of_i2();
        let l = ProjLattice::of_isg(s);
        let p = l.word_to_atoms(&Word::new(id, vec![e1])).unwrap();
        let expected = TProj::from_atoms(4, [l.local(id).unwrap(), l.local(e2).unwrap()]);
        assert_eq!(p, expected);
        assert!(l.word_to_atoms(&Word::new(e1, vec![e1])).unwrap().is_zero());
        assert_eq!(l.sigma(&l.atom(z).unwrap()).unwrap(), z);
        assert_eq!(l.sigma(&p).unwrap(), id);
    }

    #[test]
    fn sigma_errors() {
        let (s, [_, e1, e2, _]) = e_of_i2();
        let l = ProjLattice::of_isg(s.clone());
        assert_eq!(l.sigma(&l.zero()), Err(Error::ZeroProjection));
        // without the identity, the atoms of e1 and e2 have no common upper bound
        let sub = ProjLattice::of_idempotents(s.clone(), vec![e1, e2, s.mul(e1, e2)]).unwrap();
        let both = sub.atom(e1).unwrap().join(&sub.atom(e2).unwrap());
        assert_eq!(sub.sigma(&both), Err(Error::NoLeadingCoefficient));
    }

    #[test]
    fn reduced_words_are_distinct_projections() {
        let (s, _) = e_of_i2();
        let l = ProjLattice::of_isg(s);
        let words = l.enumerate_words();
        let nonzero: Vec<TProj> = words.iter().map(|w| l.word_to_atoms(w).unwrap()).filter(|p| !p.is_zero()).collect();
        assert_eq!(nonzero.len(), 10);
        let mut dedup = nonzero.clone();
        dedup.sort_by_key(|p| format!("{p:?}"));
        dedup.dedup();
        assert_eq!(dedup.len(), 10);
    }
}
