use isgkit::algebra::{GAlgebra, StarAlgebra};
use isgkit::crossed::{
    commutative_block_count, covariance_algebra, imprimitivity_check, semisimple_blocks, Variant, DEFAULT_RETRIES,
};
use isgkit::fixtures;
use isgkit::models::epsilon_algebra;

fn complex_over(g: &std::sync::Arc<isgkit::Isg>) -> GAlgebra {
    GAlgebra::trivial(StarAlgebra::complex(), g.clone())
}

#[test]
fn covariance_algebras_of_the_two_element_semilattice() {
    let g = fixtures::semilattice_1e();
    let a = complex_over(&g);
    let u = covariance_algebra(&a, Variant::Universal).unwrap();
    assert!(u.violations.is_empty());
    assert_eq!(u.algebra.dim(), 2);
    assert!(u.algebra.is_commutative());
    let b = semisimple_blocks(&u.algebra, 0, DEFAULT_RETRIES).unwrap();
    assert_eq!(b.block_sizes, vec![1, 1]);
    assert_eq!(commutative_block_count(&u.algebra), Some(2));

    let s = covariance_algebra(&a, Variant::Sieben).unwrap();
    assert!(s.violations.is_empty());
    assert_eq!(s.algebra.dim(), 1);
}

#[test]
fn group_case_variants_agree() {
    let g = fixtures::z2();
    let a = complex_over(&g);
    let u = covariance_algebra(&a, Variant::Universal).unwrap();
    let s = covariance_algebra(&a, Variant::Sieben).unwrap();
    assert_eq!(u.algebra.dim(), 2);
    assert_eq!(s.algebra.dim(), 2);
    assert_eq!(s.ideal_dim, 0);
    let b = semisimple_blocks(&s.algebra, 0, DEFAULT_RETRIES).unwrap();
    assert_eq!(b.block_sizes, vec![1, 1]);
}

#[test]
fn universal_product_over_a_semilattice_splits_into_atoms() {
    let g = fixtures::idempotents_i2();
    let u = covariance_algebra(&complex_over(&g), Variant::Universal).unwrap();
    let b = semisimple_blocks(&u.algebra, 3, DEFAULT_RETRIES).unwrap();
    assert_eq!(b.k0_rank, 4);
    assert_eq!(b.block_sizes, vec![1, 1, 1, 1]);
    assert!(b.positive && b.is_consistent());
    assert_eq!(commutative_block_count(&u.algebra), Some(4));

    let eps = covariance_algebra(&epsilon_algebra(g.clone()), Variant::Universal).unwrap();
    assert!(!eps.algebra.is_commutative());
    assert_eq!(commutative_block_count(&eps.algebra), None);
    let b = semisimple_blocks(&eps.algebra, 3, DEFAULT_RETRIES).unwrap();
    assert!(b.is_consistent());

    let z2 = fixtures::z2();
    let group = covariance_algebra(&complex_over(&z2), Variant::Universal).unwrap();
    let b = semisimple_blocks(&group.algebra, 3, DEFAULT_RETRIES).unwrap();
    assert_eq!(commutative_block_count(&group.algebra), Some(b.k0_rank));
}

#[test]
fn imprimitivity_fixtures() {
    let z2 = fixtures::z2();
    let unit = fixtures::unit_subgroup(&z2);
    let r = imprimitivity_check(z2.clone(), &unit, &complex_over(&unit.isg), None, 1, false).unwrap();
    assert_eq!((r.induced_blocks.k0_rank, r.base_blocks.k0_rank), (1, 1));
    assert_eq!(r.induced_blocks.block_sizes, vec![2]);

    let all = z2.restrict(&[0, 1]).unwrap();
    let r = imprimitivity_check(z2.clone(), &all, &complex_over(&all.isg), None, 1, false).unwrap();
    assert_eq!((r.induced_blocks.k0_rank, r.base_blocks.k0_rank), (2, 2));

    let (g, h) = fixtures::example_pair();
    let r = imprimitivity_check(g, &h, &complex_over(&h.isg), None, 1, true).unwrap();
    assert_eq!((r.induced_blocks.k0_rank, r.base_blocks.k0_rank), (1, 1));
    assert!(r.agree);
}
