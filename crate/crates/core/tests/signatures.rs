use proptest::prelude::*;
use pslb_core::primes::{nth_primorial, seed_prime_set};
use pslb_core::signatures::{
    classify, crt_reconstruct, is_potential_prime, is_potential_twin, residue_cycle, signature,
    Parity, Verdict,
};

fn trial_division(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

proptest! {
    #[test]
    fn crt_round_trip(rank in 3u32..=8, seed in any::<u64>()) {
        let p = nth_primorial(rank).unwrap();
        let sps = seed_prime_set(&p).unwrap();
        let z = 1 + seed % (p.value() - 1);
        let sig = signature(z, sps.seeds()).unwrap();
        prop_assert_eq!(sig.reconstruct().unwrap(), z);
        prop_assert_eq!(crt_reconstruct(sps.seeds(), sig.residues()).unwrap(), z);
    }

    #[test]
    fn crt_solves_small_systems(a in 0u64..3, b in 0u64..5, c in 0u64..7, d in 0u64..11) {
        let u = crt_reconstruct(&[3, 5, 7, 11], &[a, b, c, d]).unwrap();
        prop_assert!(u < 1155);
        prop_assert_eq!([u % 3, u % 5, u % 7, u % 11], [a, b, c, d]);
    }

    #[test]
    fn stacking_repeats_core_residues(rank in 3u32..=6, z in 1u64..1_000_000) {
        let m = nth_primorial(rank).unwrap();
        let sps = seed_prime_set(&m).unwrap();
        let a = signature(z, sps.seeds()).unwrap();
        let b = signature(z + m.value(), sps.seeds()).unwrap();
        for (i, &q) in sps.seeds().iter().enumerate() {
            let shift = if sps.is_core(q) { 0 } else { m.value() % q };
            prop_assert_eq!(b.residues()[i], (a.residues()[i] + shift) % q);
        }
    }

    #[test]
    fn classification_agrees_with_trial_division(z in 1u64..=30_030) {
        let sps = seed_prime_set(&nth_primorial(6).unwrap()).unwrap();
        let c = classify(z, &sps).unwrap();
        match c.verdict {
            Verdict::Unit => prop_assert_eq!(z, 1),
            Verdict::SeedPrime => prop_assert!(trial_division(z) && sps.is_seed(z)),
            Verdict::CompositeByCore => prop_assert!(sps.core().iter().any(|&q| z % q == 0)),
            Verdict::PotentialPrime => prop_assert!(!trial_division(z)),
            Verdict::SignatureCertifiedPrime => prop_assert!(trial_division(z)),
        }
    }
}

#[test]
fn potential_primes_below_the_square_are_prime() {
    for rank in 5..=7 {
        let sps = seed_prime_set(&nth_primorial(rank).unwrap()).unwrap();
        let bound = sps.smallest_non_core().pow(2);
        for z in (3..bound).step_by(2) {
            if is_potential_prime(z, sps.core()) {
                assert!(trial_division(z), "{z}");
            }
        }
    }
}

#[test]
fn twins_anchor_at_the_larger_member() {
    let sps = seed_prime_set(&nth_primorial(5).unwrap()).unwrap();
    assert!(is_potential_twin(2239, &sps).unwrap());
    assert!(!is_potential_twin(2237, &sps).unwrap());
    assert!(is_potential_twin(19, &sps).unwrap());
}

#[test]
fn residue_cycles() {
    assert_eq!(
        residue_cycle(7, Parity::Odd).unwrap(),
        [1, 3, 5, 0, 2, 4, 6]
    );
    assert_eq!(
        residue_cycle(7, Parity::Even).unwrap(),
        [2, 4, 6, 1, 3, 5, 0]
    );
    assert!(residue_cycle(2, Parity::Odd).is_err());
    assert!(residue_cycle(9, Parity::Odd).is_err());
}
