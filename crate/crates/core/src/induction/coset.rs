//! The coset space `G_H / H`.

use crate::algebra::Violation;
use crate::error::{Error, Result};
use crate::isg::{Isg, SubIsg};

/// `G_H = {g : g*g ∈ H}` partitioned by `g ≡ gh` for `h ∈ H` with `g*g = hh*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    members: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<Option<usize>>,
    reps: Vec<usize>,
    // for each member x: some h ∈ H (host index) with rep·h = x and rep*rep = hh*
    witness: Vec<Option<usize>>,
}

impl CosetTable {
    pub fn new(g: &Isg, h: &SubIsg) -> Result<Self> {
        if h.members().iter().any(|&x| x >= g.len()) || !g.is_closed_subset(h.members()) {
            return Err(Error::NotASubsemigroup);
        }
        let members: Vec<usize> = (0..g.len()).filter(|&x| h.contains(g.domain_idem(x))).collect();
        let mut class_of = vec![None; g.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &x in &members {
            if class_of[x].is_some() {
                continue;
            }
            let dom = g.domain_idem(x);
            let mut class: Vec<usize> = h
                .members()
                .iter()
                .filter(|&&k| g.range_idem(k) == dom)
                .map(|&k| g.mul(x, k))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                class_of[y] = Some(classes.len());
            }
            classes.push(class);
        }
        let reps = classes.iter().map(|c| c[0]).collect();
        let mut table = CosetTable { members, classes, class_of, reps, witness: vec![] };
        table.witness = table.compute_witnesses(g, h);
        Ok(table)
    }

    fn compute_witnesses(&self, g: &Isg, h: &SubIsg) -> Vec<Option<usize>> {
        let mut witness = vec![None; g.len()];
        for (c, class) in self.classes.iter().enumerate() {
            let r = self.reps[c];
            let dom = g.domain_idem(r);
            for &x in class {
                witness[x] = h.members().iter().copied().find(|&k| g.range_idem(k) == dom && g.mul(r, k) == x);
            }
        }
        witness
    }

    /// The same partition with each representative replaced by the next
    /// element of its class.
    pub fn rotated(&self, g: &Isg, h: &SubIsg) -> CosetTable {
        let mut out = self.clone();
        for (c, class) in self.classes.iter().enumerate() {
            let pos = class.iter().position(|&x| x == self.reps[c]).expect("representative lies in its class");
            out.reps[c] = class[(pos + 1) % class.len()];
        }
        out.witness = out.compute_witnesses(g, h);
        out
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.class_of[x].is_some()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.class_of[x]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    /// `h` with `rep(class(x))·h = x` and matching domain/range.
    pub fn witness(&self, x: usize) -> Option<usize> {
        self.witness[x]
    }

    /// Verifies that the defining relation is an equivalence whose classes
    /// are the stored ones.
    pub fn check(&self, g: &Isg, h: &SubIsg) -> Vec<Violation> {
        let mut out = Vec::new();
        let related = |x: usize, y: usize| {
            h.members().iter().any(|&k| g.range_idem(k) == g.domain_idem(x) && g.mul(x, k) == y)
        };
        for &x in &self.members {
            if !related(x, x) {
                out.push(Violation::new("reflexive", format!("{x}")));
            }
            for &y in &self.members {
                let rel = related(x, y);
                if rel && !related(y, x) {
                    out.push(Violation::new("symmetric", format!("({x}, {y})")));
                }
                if rel != (self.class_of[x] == self.class_of[y]) {
                    out.push(Violation::new("classes match relation", format!("({x}, {y})")));
                }
                if rel {
                    for &z in &self.members {
                        if related(y, z) && !related(x, z) {
                            out.push(Violation::new("transitive", format!("({x}, {y}, {z})")));
                        }
                    }
                }
            }
            if self.witness[x].is_none() {
                out.push(Violation::new("witness exists", format!("{x}")));
            }
        }
        for (c, class) in self.classes.iter().enumerate() {
            let r = self.reps[c];
            if !class.contains(&r) {
                out.push(Violation::new("representative in class", format!("class {c}")));
            }
            // stabilizer of the representative is trivial, so witnesses are unique
            let dom = g.domain_idem(r);
            let stab = h.members().iter().filter(|&&k| g.range_idem(k) == dom && g.mul(r, k) == r).count();
            if stab != 1 {
                out.push(Violation::new("unique witnesses", format!("class {c} has {stab} stabilizing elements")));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial_perm::PartialPerm;

    fn i2() -> Isg {
        Isg::close_generators(&[PartialPerm::new(vec![Some(1), Some(0)]).unwrap(), PartialPerm::new(vec![Some(0), None]).unwrap()], 10)
            .unwrap()
    }

    #[test]
    fn units_of_i2_form_one_class() {
        let g = i2();
        let id = g.index_of(&PartialPerm::identity(2)).unwrap();
        let swap = g.index_of(&PartialPerm::new(vec![Some(1), Some(0)]).unwrap()).unwrap();
        let h = g.restrict(&[id, swap]).unwrap();
        let t = CosetTable::new(&g, &h).unwrap();
        assert_eq!(t.members(), &{ let mut v = vec![id, swap]; v.sort(); v }[..]);
        assert_eq!(t.len(), 1);
        assert!(t.check(&g, &h).is_empty());
    }

    #[test]
    fn partial_identity_subsemigroup_gives_singletons() {
        let g = i2();
        let z = g.index_of(&PartialPerm::empty(2)).unwrap();
        let e1 = g.index_of(&PartialPerm::new(vec![Some(0), None]).unwrap()).unwrap();
        let h = g.restrict(&[z, e1]).unwrap();
        let t = CosetTable::new(&g, &h).unwrap();
        let shift = g.index_of(&PartialPerm::new(vec![Some(1), None]).unwrap()).unwrap();
        let mut expected = vec![z, e1, shift];
        expected.sort();
        assert_eq!(t.members(), &expected[..]);
        assert_eq!(t.len(), 3);
        assert!(t.check(&g, &h).is_empty());
    }
}
