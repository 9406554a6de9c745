use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use isgkit::lattice::{ProjLattice, TProj};
use isgkit::models::{random_galgebra, standard_gsets};
use isgkit::random::{random_isg, random_sub};
use isgkit::report::Report;
use isgkit::suites::{run_random_trial, Suite, SuiteConfig};
use isgkit::{Isg, PartialPerm, Scalar};

fn partial_perm(max_degree: usize) -> impl Strategy<Value = PartialPerm> {
    (1..=max_degree).prop_flat_map(|n| {
        (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
            |(targets, mask)| {
                PartialPerm::new(targets.into_iter().zip(mask).map(|(t, keep)| keep.then_some(t)).collect()).unwrap()
            },
        )
    })
}

fn same_degree_pair() -> impl Strategy<Value = (PartialPerm, PartialPerm, PartialPerm)> {
    (1..=5usize).prop_flat_map(|n| {
        let one = move || {
            (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
                |(t, m)| PartialPerm::new(t.into_iter().zip(m).map(|(x, k)| k.then_some(x)).collect()).unwrap(),
            )
        };
        (one(), one(), one())
    })
}

fn semigroup(seed: u64) -> Arc<Isg> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_isg(&mut rng, 4, 40).unwrap().1
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
        .prop_map(|(a, b, c, d)| Scalar::new(isgkit::Rational::new(a, b), isgkit::Rational::new(c, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_perms_are_inverse_semigroup_elements((a, b, c) in same_degree_pair()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&a.inverse()).compose(&a), a.clone());
        prop_assert_eq!(a.inverse().inverse(), a.clone());
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
        prop_assert!(a.compose(&a.inverse()).is_idempotent());
    }

    #[test]
    fn one_based_round_trip(p in partial_perm(5)) {
        prop_assert_eq!(PartialPerm::from_one_based(&p.one_based()).unwrap(), p);
    }

    #[test]
    fn closure_is_idempotent(seed in any::<u64>()) {
        let s = semigroup(seed);
        prop_assert!(s.check_axioms().is_empty());
        let again = Isg::close_generators(s.elements(), s.len()).unwrap();
        prop_assert_eq!(&again, &*s);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let sub = random_sub(&mut rng, &s);
        prop_assert_eq!(s.generated_by(sub.members()), sub.members().to_vec());
    }

    #[test]
    fn natural_order_is_a_partial_order(seed in any::<u64>()) {
        let s = semigroup(seed);
        let n = s.len();
        for a in 0..n {
            prop_assert!(s.leq(a, a));
            for b in 0..n {
                if s.leq(a, b) && s.leq(b, a) {
                    prop_assert_eq!(a, b);
                }
                if s.leq(a, b) {
                    // compatible with inversion and with multiplication
                    prop_assert!(s.leq(s.inv(a), s.inv(b)));
                    for c in 0..n {
                        prop_assert!(!s.leq(b, c) || s.leq(a, c));
                        prop_assert!(s.leq(s.mul(a, c), s.mul(b, c)));
                    }
                }
            }
        }
        for &e in s.idempotents() {
            for &f in s.idempotents() {
                prop_assert_eq!(s.mul(e, f), s.mul(f, e));
            }
        }
    }

    #[test]
    fn projection_lattice_is_boolean(seed in any::<u64>()) {
        let s = semigroup(seed);
        let lat = ProjLattice::of_isg(s.clone());
        let ps: Vec<TProj> = lat
            .enumerate_words()
            .iter()
            .map(|w| lat.word_to_atoms(w).unwrap())
            .take(24)
            .collect();
        for p in &ps {
            prop_assert_eq!(p.join(&p.complement()), lat.top());
            prop_assert!(p.meet(&p.complement()).is_zero());
            for q in &ps {
                prop_assert_eq!(p.meet(q), q.meet(p));
                prop_assert_eq!(p.meet(q).complement(), p.complement().join(&q.complement()));
                prop_assert_eq!(p.leq(q), p.meet(q) == *p);
                for r in ps.iter().take(6) {
                    prop_assert_eq!(p.meet(&q.join(r)), p.meet(q).join(&p.meet(r)));
                }
            }
        }
        let mut sum = lat.zero();
        for (_, atom) in lat.atoms() {
            prop_assert!(sum.is_disjoint(&atom));
            sum = sum.join(&atom);
        }
        prop_assert_eq!(sum, lat.top());
    }

    #[test]
    fn random_algebras_are_valid(seed in any::<u64>()) {
        let s = semigroup(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_galgebra(&mut rng, &s, &standard_gsets(&s), 4);
        prop_assert!(a.dim() >= 1 && a.dim() <= 4);
        prop_assert!(a.validate().is_empty());
    }

    #[test]
    fn gaussian_rationals_form_a_field(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip()).is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn trials_are_deterministic(seed in any::<u64>(), trial in 0u64..50) {
        let cfg = SuiteConfig::default();
        for suite in [Suite::Sigma, Suite::Delta, Suite::Restriction] {
            let a = run_random_trial(suite, &cfg, seed, trial);
            let b = run_random_trial(suite, &cfg, seed, trial);
            prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
            prop_assert!(a.passed(), "{:?}", a.checks);
        }
    }
}

#[test]
fn reports_round_trip_through_json() {
    let text = r#"{"meta":{"tool":"isgkit","version":"0","command":"verify","seed":3,"config_hash":"ab"},
        "instance":{"suite":"sigma"},"checks":[{"name":"x","status":"fail","witness":"w"}]}"#;
    let r: Report = serde_json::from_str(text).unwrap();
    assert_eq!(r.failures(), 1);
    let back: Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}
