use std::sync::Arc;

use isgkit::algebra::{GAlgebra, StarAlgebra};
use isgkit::fibers::FiberedDecomposition;
use isgkit::fixtures::{self, element};
use isgkit::induction::isos::{mu_iso, tau_iso, unit_iota, restriction_of_tensor};
use isgkit::induction::{CosetTable, IndAlgebra, Restriction};
use isgkit::models::{c0_semigroup, epsilon_algebra};

#[test]
fn example_configuration_induces_a_line() {
    let (g, h) = fixtures::example_pair();
    let d = GAlgebra::trivial(StarAlgebra::complex(), h.isg.clone());
    let ind = IndAlgebra::new(g.clone(), &h, &d).unwrap();
    assert_eq!(ind.dim(), 1);
    assert!(ind.algebra.validate().is_empty());
    let fib = FiberedDecomposition::new(&ind.algebra);
    let e = element(&g, &[Some(0), None]);
    let one = g.unit().unwrap();
    assert_eq!(fib.fiber_dim(fib.index_of(e).unwrap()), 1);
    assert_eq!(fib.fiber_dim(fib.index_of(one).unwrap()), 0);
}

#[test]
fn group_induction_from_trivial_subgroup() {
    let g = fixtures::z2();
    let h = fixtures::unit_subgroup(&g);
    let d = GAlgebra::trivial(StarAlgebra::complex(), h.isg.clone());
    let ind = IndAlgebra::new(g.clone(), &h, &d).unwrap();
    assert_eq!(ind.dim(), 2);
    assert!(ind.algebra.validate().is_empty());
    assert!(ind.check_constraint().is_empty());
    // the generator swaps the two points
    let s = element(&g, &[Some(1), Some(0)]);
    assert!(!ind.algebra.action_matrix(s).is_identity());
    assert!(ind.algebra.action_matrix(s).mul(ind.algebra.action_matrix(s)).is_identity());
}

#[test]
fn induction_over_itself_matches_fiber_count() {
    for (_, g) in fixtures::named() {
        let all: Vec<usize> = (0..g.len()).collect();
        let h = g.restrict(&all).unwrap();
        let d = epsilon_algebra(h.isg.clone());
        let ind = IndAlgebra::new(g.clone(), &h, &d).unwrap();
        assert_eq!(ind.dim(), ind.expected_dim());
        assert!(ind.algebra.validate().is_empty());
        assert!(ind.check_constraint().is_empty());
    }
}

#[test]
fn coset_table_of_whole_semigroup_matches_brute_force() {
    let g = fixtures::i2();
    let all: Vec<usize> = (0..g.len()).collect();
    let h = g.restrict(&all).unwrap();
    let t = CosetTable::new(&g, &h).unwrap();
    assert!(t.check(&g, &h).is_empty());
    for &x in t.members() {
        let mut brute: Vec<usize> = (0..g.len())
            .filter(|&k| g.range_idem(k) == g.domain_idem(x))
            .map(|k| g.mul(x, k))
            .collect();
        brute.sort();
        brute.dedup();
        assert_eq!(t.classes()[t.class_of(x).unwrap()], brute);
    }
}

#[test]
fn mu_on_example_and_units_of_i2() {
    let (g, h) = fixtures::example_pair();
    let b = epsilon_algebra(g.clone());
    let mu = mu_iso(g.clone(), &h, &b, None).unwrap();
    assert_eq!(mu.induced.dim(), 1);
    assert!(mu.report.is_ok(), "{:?}", mu.report);

    let g = fixtures::i2();
    let id = element(&g, &[Some(0), Some(1)]);
    let swap = element(&g, &[Some(1), Some(0)]);
    let h = g.restrict(&[id, swap]).unwrap();
    let b = epsilon_algebra(g.clone());
    let mu = mu_iso(g.clone(), &h, &b, None).unwrap();
    assert!(mu.report.is_ok(), "{:?}", mu.report);
}

#[test]
fn tau_unit_and_restriction_on_example() {
    let (g, h) = fixtures::example_pair();
    let a = GAlgebra::trivial(StarAlgebra::complex(), h.isg.clone());
    let b = epsilon_algebra(g.clone());
    let tau = tau_iso(g.clone(), &h, &a, &b, None).unwrap();
    assert_eq!(tau.source.dim(), 1);
    assert!(tau.report.is_ok(), "{:?}", tau.report);
    let unit = unit_iota(g.clone(), &h, &a, None).unwrap();
    assert!(unit.report.is_ok(), "{:?}", unit.report);
    assert_eq!(unit.matrix.rank(), 1);
    let r = Restriction::new(&b, &h).unwrap();
    assert_eq!(r.dim(), 1);
    assert!(r.cross_check(&b).is_empty());
}

#[test]
fn restriction_commutes_with_tensor_on_i2() {
    let g = fixtures::i2();
    let z = element(&g, &[None, None]);
    let e1 = element(&g, &[Some(0), None]);
    let h = g.restrict(&[z, e1]).unwrap();
    let a = c0_semigroup(g.clone());
    let b = epsilon_algebra(g.clone());
    let rep = restriction_of_tensor(&a, &b, &h).unwrap();
    assert!(rep.is_ok(), "{rep:?}");
    let r = Restriction::new(&a, &h).unwrap();
    assert!(r.cross_check(&a).is_empty());
    let _ = Arc::clone(&g);
}

#[test]
fn delta_and_primed_model_on_i2() {
    use isgkit::induction::primed::{delta_bijection, primed_comparison};
    let g = fixtures::i2();
    let idems: Vec<usize> = g.idempotents().to_vec();
    let h = g.restrict(&idems).unwrap();
    let cosets = CosetTable::new(&g, &h).unwrap();
    let (primed, violations) = delta_bijection(&g, &h, &cosets);
    assert!(violations.is_empty(), "{violations:?}");
    assert_eq!(primed.len(), cosets.members().len());
    let a = epsilon_algebra(h.isg.clone());
    let ind = IndAlgebra::with_cosets(g.clone(), &h, &a, cosets).unwrap();
    let v = primed_comparison(&g, &h, &a, &ind, &primed);
    assert!(v.is_empty(), "{v:?}");
}

#[test]
fn triangle_identities_hold_on_small_fixtures() {
    use isgkit::induction::adjunction::triangle_identities;
    let (g, h) = fixtures::example_pair();
    let a = epsilon_algebra(h.isg.clone());
    let b = epsilon_algebra(g.clone());
    let r = triangle_identities(g.clone(), &h, &a, &b).unwrap();
    assert!(r.is_ok(), "{:?}", r.checks);

    let g = fixtures::i2();
    let idems: Vec<usize> = g.idempotents().to_vec();
    let h = g.restrict(&idems).unwrap();
    let a = epsilon_algebra(h.isg.clone());
    let b = isgkit::models::c0_semigroup(g.clone());
    let r = triangle_identities(g.clone(), &h, &a, &b).unwrap();
    assert!(r.is_ok(), "{:?}", r.checks);
}
