use isgkit::fixtures::{self, element};
use isgkit::hilbert::{
    build_l2, build_l2_cosets, compacts_and_diagonal, l2_checks, mingo_v, random_module_unitary, sample_nonexpansive,
    HModule,
};
use isgkit::induction::isos::coset_gset;
use isgkit::induction::CosetTable;
use isgkit::linalg::{self, Matrix};
use isgkit::{Error, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn point_masses_of_the_two_element_semilattice() {
    let g = fixtures::semilattice_1e();
    let l2 = build_l2(g.clone());
    let one = g.unit().unwrap();
    let e = element(&g, &[Some(0), None]);
    let idem = |x: usize| g.idempotents().iter().position(|&f| f == x).unwrap();
    let d = |x: usize| linalg::unit(2, x);
    assert_eq!(l2.inner(&d(one), &d(one)), linalg::unit(2, idem(one)));
    assert_eq!(l2.inner(&d(e), &d(e)), linalg::unit(2, idem(e)));
    assert!(linalg::is_zero(&l2.inner(&d(one), &d(e))));
    assert_eq!(l2.act(e, &d(e)), d(e));
    assert!(linalg::is_zero(&l2.act(e, &d(one))));
}

#[test]
fn l2_properties_hold_on_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, g) in fixtures::named() {
        let v = l2_checks(&g);
        assert!(v.is_empty(), "{name}: {v:?}");
        let v = sample_nonexpansive(&mut rng, &build_l2(g.clone()), 20);
        assert!(v.is_empty(), "{name}: {v:?}");
    }
}

#[test]
fn coset_modules() {
    let z2 = fixtures::z2();
    let all = z2.restrict(&(0..z2.len()).collect::<Vec<_>>()).unwrap();
    let m = build_l2_cosets(z2.clone(), &CosetTable::new(&z2, &all).unwrap()).unwrap();
    assert_eq!(m.dim(), 1);

    let g = fixtures::i2();
    let empty = element(&g, &[None, None]);
    let id1 = element(&g, &[Some(0), None]);
    let h = g.restrict(&[empty, id1]).unwrap();
    let cosets = CosetTable::new(&g, &h).unwrap();
    let m = build_l2_cosets(g.clone(), &cosets).unwrap();
    assert_eq!(m.dim(), 3);
    assert!(m.check().is_empty(), "{:?}", m.check());
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                assert!(linalg::is_zero(&m.inner(&linalg::unit(3, i), &linalg::unit(3, j))));
            }
        }
    }
}

#[test]
fn mingo_operator_identity_sign_flip_and_random() {
    let g = fixtures::semilattice_1e();
    let l2 = build_l2(g.clone());
    let r = mingo_v(&l2, &l2, &Matrix::identity(2)).unwrap();
    assert!(r.violations.is_empty());
    let e = element(&g, &[Some(0), None]);
    let mut flip = Matrix::identity(2);
    flip[(e, e)] = Scalar::from_int(-1);
    assert!(mingo_v(&l2, &l2, &flip).unwrap().violations.is_empty());
    assert!(matches!(mingo_v(&l2, &l2, &Matrix::identity(2).scale(&Scalar::from_int(2))), Err(Error::NotUnitary(_))));

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, g) in fixtures::named() {
        let l2 = build_l2(g.clone());
        let two = HModule::direct_sum(&[&l2, &l2]).unwrap();
        for m in [&l2, &two] {
            let u = random_module_unitary(&mut rng, m).unwrap();
            let r = mingo_v(m, m, &u).unwrap();
            assert!(r.violations.is_empty(), "{name}: {:?}", r.violations);
        }
    }
}

#[test]
fn compacts_of_coset_modules() {
    let z2 = fixtures::z2();
    let all = z2.restrict(&(0..z2.len()).collect::<Vec<_>>()).unwrap();
    let cosets = CosetTable::new(&z2, &all).unwrap();
    let k = compacts_and_diagonal(&build_l2_cosets(z2.clone(), &cosets).unwrap()).unwrap();
    assert!(k.violations.is_empty(), "{:?}", k.violations);
    assert_eq!(k.algebra.dim(), 1);
    assert_eq!(k.diagonal.rank(), 1);

    let g = fixtures::i2();
    let swap = element(&g, &[Some(1), Some(0)]);
    let h = g.restrict(&[g.unit().unwrap(), swap]).unwrap();
    let cosets = CosetTable::new(&g, &h).unwrap();
    assert_eq!(cosets.len(), 1);
    let module = build_l2_cosets(g.clone(), &cosets).unwrap();
    let k = compacts_and_diagonal(&module).unwrap();
    assert!(k.violations.is_empty(), "{:?}", k.violations);
    assert_eq!(k.algebra.dim(), 1);
    let (a, b) = (isgkit::hilbert::basis_gset(&module).unwrap(), coset_gset(&g, &cosets));
    for x in 0..g.len() {
        for y in 0..a.len() {
            assert_eq!(a.apply(x, y), b.apply(x, y));
        }
    }

    for (name, g) in fixtures::named() {
        let k = compacts_and_diagonal(&build_l2(g.clone())).unwrap();
        assert!(k.violations.is_empty(), "{name}: {:?}", k.violations);
    }
}
