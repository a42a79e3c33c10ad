use proptest::prelude::*;
use pslb_core::primes::{
    largest_primorial_at_most, max_seed_prime_for, nth_primorial, primes_up_to, read_cache,
    seed_prime_set, smallest_primorial_at_least, write_cache, Primorial, PARALLEL_THRESHOLD,
};

fn trial_division(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

proptest! {
    #[test]
    fn sieve_matches_trial_division(limit in 2u64..20_000) {
        let t = primes_up_to(limit).unwrap();
        let want: Vec<u64> = (2..=limit).filter(|&n| trial_division(n)).collect();
        prop_assert_eq!(t.primes(), &want[..]);
        prop_assert_eq!(t.count(), want.len());
    }

    #[test]
    fn range_queries_agree(limit in 100u64..20_000, a in 0u64..20_000, b in 0u64..20_000) {
        let t = primes_up_to(limit).unwrap();
        let (lo, hi) = (a.min(b).min(limit), a.max(b).min(limit));
        let want: Vec<u64> = (lo..=hi).filter(|&n| trial_division(n)).collect();
        prop_assert_eq!(t.primes_in(lo, hi), &want[..]);
        prop_assert_eq!(t.count_up_to(hi), (2..=hi).filter(|&n| trial_division(n)).count());
        if let Some(p) = t.largest_prime_at_most(hi) {
            prop_assert!(trial_division(p) && (p + 1..=hi).all(|n| !trial_division(n)));
        }
    }
}

#[test]
fn parallel_segments_agree_with_known_counts() {
    // pi(10^7) = 664579 and pi(2 * 10^7) = 1270607.
    const { assert!(PARALLEL_THRESHOLD <= 20_000_000) };
    let t = primes_up_to(20_000_000).unwrap();
    assert_eq!(t.count_up_to(10_000_000), 664_579);
    assert_eq!(t.count(), 1_270_607);
    let small = primes_up_to(1_000_000).unwrap();
    assert_eq!(t.primes_in(0, 1_000_000), small.primes());
}

#[test]
fn primorials() {
    let values: Vec<u64> = (1..=6).map(|k| nth_primorial(k).unwrap().value()).collect();
    assert_eq!(values, [2, 6, 30, 210, 2310, 30030]);
    assert_eq!(nth_primorial(15).unwrap().value(), 614_889_782_588_491_410);
    assert!(nth_primorial(16).is_err());
    assert_eq!(Primorial::of_prime(13).unwrap().value(), 30030);
    assert!(Primorial::of_prime(12).is_err());
    assert!(Primorial::from_value(2309).is_err());
    assert_eq!(smallest_primorial_at_least(2311).unwrap().value(), 30030);
    assert_eq!(smallest_primorial_at_least(2310).unwrap().value(), 2310);
    assert_eq!(largest_primorial_at_most(250_000).unwrap().value(), 30030);
    assert_eq!(nth_primorial(5).unwrap().hash_notation(), "11#");
}

#[test]
fn seed_sets() {
    let s = seed_prime_set(&nth_primorial(5).unwrap()).unwrap();
    assert_eq!(s.core(), [2, 3, 5, 7, 11]);
    assert_eq!(s.non_core(), [13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
    assert_eq!(s.smallest_non_core(), 13);
    assert_eq!(max_seed_prime_for(2291).unwrap(), 47);
    for k in 3..=8 {
        let p = nth_primorial(k).unwrap();
        let s = seed_prime_set(&p).unwrap();
        let root = p.value().isqrt();
        let want: Vec<u64> = (2..=root).filter(|&n| trial_division(n)).collect();
        assert_eq!(s.seeds(), &want[..]);
    }
}

#[test]
fn cache_round_trip_and_rejection() {
    let t = primes_up_to(123_457).unwrap();
    let mut buf = Vec::new();
    write_cache(&t, &mut buf).unwrap();
    assert_eq!(&buf[..4], b"PSLB");
    assert_eq!(buf[4], 1);
    assert_eq!(u64::from_le_bytes(buf[5..13].try_into().unwrap()), 123_457);
    let back = read_cache(&buf[..]).unwrap();
    assert_eq!(back.primes(), t.primes());

    let mut bad = buf.clone();
    bad[0] = b'X';
    assert!(read_cache(&bad[..]).is_err());
    let mut bad = buf.clone();
    bad[4] = 2;
    assert!(read_cache(&bad[..]).is_err());
    assert!(read_cache(&buf[..buf.len() - 1]).is_err());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.pslb");
    write_cache(&t, std::fs::File::create(&path).unwrap()).unwrap();
    assert_eq!(
        read_cache(std::fs::File::open(&path).unwrap())
            .unwrap()
            .count(),
        t.count()
    );
}
