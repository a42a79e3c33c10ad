use proptest::prelude::*;
use pslb_core::census::{
    composite_partition, cycle_census, figure1_series, new_composites, potential_solutions_t,
    prime_count_via_eq1, prime_count_via_eq3, smallest_prime_factors, totient_of_primorial,
    ColumnStats,
};
use pslb_core::primes::{nth_primorial, primes_up_to};
use pslb_core::Budget;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #[test]
    fn eq1_matches_the_sieve(n in 2u64..5_329) {
        // Below 73^2 there are at most 20 seed primes.
        let t = primes_up_to(n.isqrt().max(2)).unwrap();
        let seeds = t.primes_in(0, n.isqrt());
        let c = prime_count_via_eq1(n, seeds).unwrap();
        prop_assert_eq!(c.pi, primes_up_to(n).unwrap().count() as u64);
        prop_assert_eq!(c.multiples, n - 1 - (c.pi - seeds.len() as u64));
    }

    #[test]
    fn spf_divides_and_is_least(n in 2usize..50_000) {
        let spf = smallest_prime_factors(50_000);
        let f = spf[n] as usize;
        prop_assert_eq!(n % f, 0);
        prop_assert!((2..f).all(|d| n % d != 0));
    }
}

#[test]
fn eq1_refuses_too_many_seeds() {
    let seeds = primes_up_to(73).unwrap();
    let err = prime_count_via_eq1(5_329, seeds.primes()).unwrap_err();
    assert!(err.is_resource());
    assert!(prime_count_via_eq1(100, &[2, 3, 5]).is_err());
}

#[test]
fn totient_and_t_by_brute_force() {
    for rank in 3..=6 {
        let p = nth_primorial(rank).unwrap();
        let m = p.value();
        let phi = (1..=m).filter(|&z| gcd(z, m) == 1).count() as u64;
        assert_eq!(totient_of_primorial(&p), phi);
        // Residues z with z and z - 2 both coprime to m, counted cyclically.
        let t = (0..m)
            .filter(|&z| gcd(z, m) == 1 && gcd((z + m - 2) % m, m) == 1)
            .count() as u64;
        assert_eq!(potential_solutions_t(&p).unwrap(), t);
    }
}

#[test]
fn eq3_matches_the_sieve_at_each_rank() {
    let b = Budget::default();
    for rank in 3..=7 {
        let p = nth_primorial(rank).unwrap();
        let eq3 = prime_count_via_eq3(&p, &b).unwrap();
        assert_eq!(eq3.pi, primes_up_to(p.value()).unwrap().count() as u64);
        let part = composite_partition(&p, &b).unwrap();
        assert_eq!(part.overlap, 0);
        assert_eq!(part.core_generated + part.new_composites, part.composites);
        assert_eq!(part.new_composites, eq3.new_composites);
    }
}

#[test]
fn new_composites_start_at_the_square() {
    let b = Budget::default();
    let p = nth_primorial(5).unwrap();
    let set = new_composites(&p, &b).unwrap();
    assert_eq!(set.least(), Some(169));
    assert_eq!(set.len(), 141);
    assert!(set.members().iter().all(|&m| (2..=11).all(|q| m % q != 0)));
}

#[test]
fn census_rows_sum_to_the_totals() {
    let b = Budget::default();
    for (inner, outer) in [(4, 5), (5, 6), (4, 6), (6, 7)] {
        let c = cycle_census(
            &nth_primorial(inner).unwrap(),
            &nth_primorial(outer).unwrap(),
            &b,
        )
        .unwrap();
        let total = c
            .rows
            .iter()
            .fold(Default::default(), |acc, r| acc + r.in_cycle);
        assert_eq!(c.totals(), total);
        let outer = nth_primorial(outer).unwrap();
        assert_eq!(total.potential_primes, totient_of_primorial(&outer));
        // The only potential twin anchor lost to linear counting is 1.
        assert_eq!(
            total.potential_twins + 1,
            potential_solutions_t(&outer).unwrap()
        );
        assert_eq!(total.true_twins + total.false_twins, total.potential_twins);
    }
    assert!(cycle_census(&nth_primorial(6).unwrap(), &nth_primorial(5).unwrap(), &b).is_err());
    assert!(cycle_census(&nth_primorial(5).unwrap(), &nth_primorial(8).unwrap(), &b).is_err());
}

#[test]
fn figure1_windows_reconcile() {
    let b = Budget::default();
    for rank in 4..=7 {
        let p = nth_primorial(rank).unwrap();
        let s = figure1_series(&p, &b).unwrap();
        assert_eq!(
            s.iter().map(|w| w.potential_primes).sum::<u64>(),
            totient_of_primorial(&p)
        );
        assert_eq!(s.first().unwrap().window_start, 1);
        assert_eq!(s.last().unwrap().window_end, p.value());
        assert!(s
            .windows(2)
            .all(|w| w[1].window_start == w[0].window_end + 1));
        let nb = prime_count_via_eq3(&p, &b).unwrap().new_composites;
        assert_eq!(s.last().unwrap().cumulative_new_composites, nb);
    }
}

#[test]
fn population_std_dev() {
    let s = ColumnStats::of(&[2, 4, 4, 4, 5, 5, 7, 9]);
    assert_eq!((s.min, s.max), (2, 9));
    assert_eq!(s.median, 4.5);
    assert!((s.std_dev - 2.0).abs() < 1e-12);
}
