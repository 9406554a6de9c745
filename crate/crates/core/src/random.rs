//! Random instances: inverse subsemigroups of `I_n`, their sub-inverse
//! semigroups, and derived per-trial seeds.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::isg::{Isg, SubIsg};
use crate::partial_perm::PartialPerm;

/// A random partial injection of degree `n`; each point is defined with
/// probability `density`.
pub fn random_partial_perm<R: Rng>(rng: &mut R, n: usize, density: f64) -> PartialPerm {
    let mut targets: Vec<usize> = (0..n).collect();
    targets.shuffle(rng);
    let images = (0..n).map(|i| if rng.gen_bool(density) { Some(targets[i]) } else { None }).collect();
    PartialPerm::new(images).expect("shuffled targets are distinct")
}

/// Generators and closure of a random inverse subsemigroup of `I_n` with
/// `n ≤ max_degree` and at most `max_size` elements.
pub fn random_isg<R: Rng>(rng: &mut R, max_degree: usize, max_size: usize) -> Result<(Vec<PartialPerm>, Arc<Isg>)> {
    if max_degree == 0 || max_size == 0 {
        return Err(Error::DimensionMismatch("degree and size bounds must be positive".into()));
    }
    let mut fallback = None;
    for _ in 0..200 {
        let n = if rng.gen_bool(0.5) { max_degree } else { rng.gen_range(1..=max_degree) };
        let count = rng.gen_range(1..=3);
        let density = rng.gen_range(0.5..=1.0);
        let gens: Vec<PartialPerm> = (0..count).map(|_| random_partial_perm(rng, n, density)).collect();
        match Isg::close_generators(&gens, max_size) {
            Ok(s) if 4 * s.len() < max_size && rng.gen_bool(0.6) => {
                fallback.get_or_insert((gens, Arc::new(s)));
            }
            Ok(s) => return Ok((gens, Arc::new(s))),
            Err(Error::ClosureTooLarge { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    fallback.ok_or(Error::ClosureTooLarge { cap: max_size })
}

/// The sub-inverse semigroup generated by one to three random elements.
pub fn random_sub<R: Rng>(rng: &mut R, g: &Isg) -> SubIsg {
    let k = rng.gen_range(1..=3.min(g.len()));
    let seed: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.len())).collect();
    g.restrict(&g.generated_by(&seed)).expect("generated subsets are closed")
}

/// Seed for trial `trial` of a named suite, independent of scheduling.
pub fn trial_seed(base: u64, suite: &str, trial: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in suite.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    splitmix(base ^ splitmix(h ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_instances_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let (gens, s) = random_isg(&mut rng, 4, 60).unwrap();
            assert!(s.len() <= 60 && s.degree() <= 4);
            assert!(gens.iter().all(|g| s.index_of(g).is_some()));
            assert!(s.check_axioms().is_empty());
            let h = random_sub(&mut rng, &s);
            assert!(s.is_closed_subset(h.members()));
        }
    }

    #[test]
    fn trial_seeds_differ() {
        assert_ne!(trial_seed(7, "sigma", 0), trial_seed(7, "sigma", 1));
        assert_ne!(trial_seed(7, "sigma", 0), trial_seed(7, "delta", 0));
        assert_eq!(trial_seed(7, "sigma", 3), trial_seed(7, "sigma", 3));
    }
}
