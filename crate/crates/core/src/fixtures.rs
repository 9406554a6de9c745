//! Small named semigroups used as regression instances.

use std::sync::Arc;

use crate::isg::{Isg, SubIsg};
use crate::partial_perm::PartialPerm;

fn pp(images: &[Option<usize>]) -> PartialPerm {
    PartialPerm::new(images.to_vec()).expect("fixture permutations are injective")
}

/// `{1, e}` realized as `{id, id on point 1}` in `I_2`.
pub fn semilattice_1e() -> Arc<Isg> {
    Arc::new(Isg::close_generators(&[PartialPerm::identity(2), pp(&[Some(0), None])], 16).expect("small closure"))
}

/// The four idempotents of `I_2`.
pub fn idempotents_i2() -> Arc<Isg> {
    Arc::new(
        Isg::close_generators(&[PartialPerm::identity(2), pp(&[Some(0), None]), pp(&[None, Some(1)])], 16)
            .expect("small closure"),
    )
}

/// The symmetric inverse monoid on two points.
pub fn i2() -> Arc<Isg> {
    Arc::new(Isg::close_generators(&[pp(&[Some(1), Some(0)]), pp(&[Some(0), None])], 16).expect("small closure"))
}

/// The group of order two.
pub fn z2() -> Arc<Isg> {
    Arc::new(Isg::close_generators(&[pp(&[Some(1), Some(0)])], 16).expect("small closure"))
}

/// Index of the element with the given 0-based images.
pub fn element(s: &Isg, images: &[Option<usize>]) -> usize {
    s.index_of(&pp(images)).expect("fixture element present")
}

/// `{e} ⊆ {1, e}`: the configuration with `G = E` made of idempotents only.
pub fn example_pair() -> (Arc<Isg>, SubIsg) {
    let g = semilattice_1e();
    let e = element(&g, &[Some(0), None]);
    let h = g.restrict(&[e]).expect("singleton idempotent is closed");
    (g, h)
}

/// The trivial subgroup of a group with unit.
pub fn unit_subgroup(g: &Isg) -> SubIsg {
    g.restrict(&[g.unit().expect("group has a unit")]).expect("unit is closed")
}

/// All named fixtures with their names.
pub fn named() -> Vec<(&'static str, Arc<Isg>)> {
    vec![("semilattice_1e", semilattice_1e()), ("idempotents_i2", idempotents_i2()), ("i2", i2()), ("z2", z2())]
}
