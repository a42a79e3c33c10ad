//! Counting layer: totients and twin/Goldbach solution products of
//! primorials, new composites of the non-core seed primes, the three prime
//! counting routes, and per-cycle tabulations.

use rayon::prelude::*;
use serde::Serialize;

use crate::primes::{primes_up_to, seed_prime_set_with, PrimeTable, Primorial, SeedPrimeSet};
use crate::signatures::is_potential_prime;
use crate::{Budget, Error, Result};

/// Inclusion-exclusion over more seeds than this is refused.
pub const MAX_EQ1_SEEDS: usize = 20;

/// Euler's totient of a primorial: the product of `f - 1` over its factors.
pub fn totient_of_primorial(p: &Primorial) -> u64 {
    p.factors().iter().map(|f| f - 1).product()
}

/// Product of `f - 2` over the odd prime factors of `p`.
pub fn potential_solutions_t(p: &Primorial) -> Result<u64> {
    if p.value() < 6 {
        return Err(Error::domain("the solution product needs a primorial >= 6"));
    }
    Ok(p.factors()[1..].iter().map(|f| f - 2).product())
}

/// Smallest-prime-factor table for `0..=limit` (entries 0 and 1 are 0).
pub fn smallest_prime_factors(limit: u64) -> Vec<u32> {
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        let si = spf[i];
        for &p in &primes {
            let m = p as usize * i;
            if p > si || m > n {
                break;
            }
            spf[m] = p;
        }
    }
    spf
}

/// Composites in `(1, primorial]` whose smallest prime factor is a non-core
/// seed prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewCompositeSet {
    primorial: Primorial,
    members: Vec<u64>,
}

impl NewCompositeSet {
    pub fn primorial(&self) -> &Primorial {
        &self.primorial
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn least(&self) -> Option<u64> {
        self.members.first().copied()
    }

    /// Members `<= x`.
    pub fn count_up_to(&self, x: u64) -> usize {
        self.members.partition_point(|&m| m <= x)
    }
}

fn check_budget(p: &Primorial, budget: &Budget) -> Result<()> {
    budget.check_sieve("factor-resolved census", p.value())
}

/// Exact new-composite set via a smallest-prime-factor sieve.
pub fn new_composites(p: &Primorial, budget: &Budget) -> Result<NewCompositeSet> {
    check_budget(p, budget)?;
    if p.value() < 30 {
        return Err(Error::domain(
            "new composites are defined for primorials >= 30",
        ));
    }
    let spf = smallest_prime_factors(p.value());
    let largest_core = p.largest_factor();
    let members = (2..=p.value())
        .filter(|&m| {
            let f = spf[m as usize] as u64;
            f != m && f > largest_core
        })
        .collect();
    Ok(NewCompositeSet {
        primorial: p.clone(),
        members,
    })
}

/// The composites of `(1, primorial]` split by whether their smallest prime
/// factor is a core seed prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompositePartition {
    pub composites: u64,
    pub core_generated: u64,
    pub new_composites: u64,
    /// Composites counted in both sets; zero when the partition is sound.
    pub overlap: u64,
}

pub fn composite_partition(p: &Primorial, budget: &Budget) -> Result<CompositePartition> {
    check_budget(p, budget)?;
    let spf = smallest_prime_factors(p.value());
    let largest_core = p.largest_factor();
    let mut out = CompositePartition {
        composites: 0,
        core_generated: 0,
        new_composites: 0,
        overlap: 0,
    };
    for m in 2..=p.value() {
        let f = spf[m as usize] as u64;
        if f == m {
            continue;
        }
        out.composites += 1;
        // Set A: has some core factor. Set B: smallest factor is non-core.
        let in_a = p.factors().iter().any(|&q| m % q == 0);
        let in_b = f > largest_core;
        out.core_generated += u64::from(in_a);
        out.new_composites += u64::from(in_b);
        out.overlap += u64::from(in_a && in_b);
    }
    Ok(out)
}

/// The terms of `pi(E) = M + phi(E) - 1 - n(B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Eq3Count {
    pub core_seed_count: u64,
    pub totient: u64,
    pub new_composites: u64,
    pub pi: u64,
}

pub fn prime_count_via_eq3(p: &Primorial, budget: &Budget) -> Result<Eq3Count> {
    let b = new_composites(p, budget)?;
    let core_seed_count = p.rank() as u64;
    let totient = totient_of_primorial(p);
    let new = b.len() as u64;
    Ok(Eq3Count {
        core_seed_count,
        totient,
        new_composites: new,
        pi: core_seed_count + totient - 1 - new,
    })
}

/// The terms of `pi(N) = N - 1 + n(SP) - n(multiples of SP)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eq1Count {
    pub n: u64,
    pub seed_count: u64,
    /// Sum of `floor(n / d)` over the products `d` of each subset size,
    /// starting with singletons.
    pub level_sums: Vec<u64>,
    /// Size of the union of the multiples, seeds included.
    pub multiples: u64,
    pub pi: u64,
}

impl Eq1Count {
    /// `117 - 45 + 6 - 0` style rendering of the inclusion-exclusion.
    pub fn expansion(&self) -> String {
        self.level_sums
            .iter()
            .enumerate()
            .map(|(i, s)| {
                if i == 0 {
                    s.to_string()
                } else if i % 2 == 1 {
                    format!(" - {s}")
                } else {
                    format!(" + {s}")
                }
            })
            .collect()
    }
}

pub fn prime_count_via_eq1(n: u64, seeds: &[u64]) -> Result<Eq1Count> {
    if n < 2 {
        return Err(Error::domain("n must be >= 2"));
    }
    let root = n.isqrt();
    let expected = primes_up_to(root.max(2))?;
    let expected: Vec<u64> = expected
        .primes()
        .iter()
        .copied()
        .filter(|&p| p <= root)
        .collect();
    if seeds != expected.as_slice() {
        return Err(Error::domain(format!(
            "seeds must be exactly the primes <= sqrt({n})"
        )));
    }
    if seeds.len() > MAX_EQ1_SEEDS {
        return Err(Error::Budget {
            what: "inclusion-exclusion seed count",
            needed: seeds.len() as u64,
            budget: MAX_EQ1_SEEDS as u64,
        });
    }
    let mut level_sums = vec![0u64; seeds.len()];
    fn walk(n: u64, seeds: &[u64], start: usize, prod: u64, depth: usize, sums: &mut [u64]) {
        for i in start..seeds.len() {
            let d = prod * seeds[i];
            if d > n {
                // Ascending seeds: every later subset is also too large.
                break;
            }
            sums[depth] += n / d;
            walk(n, seeds, i + 1, d, depth + 1, sums);
        }
    }
    walk(n, seeds, 0, 1, 0, &mut level_sums);
    let multiples = level_sums.iter().enumerate().fold(0i64, |acc, (i, &s)| {
        if i % 2 == 0 {
            acc + s as i64
        } else {
            acc - s as i64
        }
    }) as u64;
    Ok(Eq1Count {
        n,
        seed_count: seeds.len() as u64,
        level_sums,
        multiples,
        pi: n - 1 + seeds.len() as u64 - multiples,
    })
}

/// One block of census counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusCounts {
    pub potential_primes: u64,
    pub potential_twins: u64,
    pub false_twins: u64,
    pub true_twins: u64,
}

impl std::ops::Add for CensusCounts {
    type Output = CensusCounts;
    fn add(self, o: CensusCounts) -> CensusCounts {
        CensusCounts {
            potential_primes: self.potential_primes + o.potential_primes,
            potential_twins: self.potential_twins + o.potential_twins,
            false_twins: self.false_twins + o.false_twins,
            true_twins: self.true_twins + o.true_twins,
        }
    }
}

/// One cycle of the inner primorial inside the outer one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub cycle_index: u64,
    pub cycle_end: u64,
    pub cycle_length: u64,
    pub in_cycle: CensusCounts,
    pub cumulative: CensusCounts,
    pub new_composites_cumulative: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ColumnStats {
    pub min: u64,
    pub max: u64,
    pub median: f64,
    /// Population standard deviation.
    pub std_dev: f64,
}

impl ColumnStats {
    pub fn of(values: &[u64]) -> ColumnStats {
        assert!(!values.is_empty());
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        let n = sorted.len();
        let median = if n % 2 == 1 {
            sorted[n / 2] as f64
        } else {
            (sorted[n / 2 - 1] + sorted[n / 2]) as f64 / 2.0
        };
        let mean = values.iter().sum::<u64>() as f64 / n as f64;
        let var = values
            .iter()
            .map(|&v| (v as f64 - mean).powi(2))
            .sum::<f64>()
            / n as f64;
        ColumnStats {
            min: sorted[0],
            max: sorted[n - 1],
            median,
            std_dev: var.sqrt(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CycleCensus {
    pub inner: Primorial,
    pub outer: Primorial,
    pub rows: Vec<CensusRow>,
}

impl CycleCensus {
    /// Min / max / median / std-dev of the per-cycle columns, in the order
    /// potential primes, potential twins, false twins, true twins.
    pub fn summary(&self) -> [ColumnStats; 4] {
        let col = |f: fn(&CensusCounts) -> u64| -> ColumnStats {
            let v: Vec<u64> = self.rows.iter().map(|r| f(&r.in_cycle)).collect();
            ColumnStats::of(&v)
        };
        [
            col(|c| c.potential_primes),
            col(|c| c.potential_twins),
            col(|c| c.false_twins),
            col(|c| c.true_twins),
        ]
    }

    pub fn totals(&self) -> CensusCounts {
        self.rows.last().map(|r| r.cumulative).unwrap_or_default()
    }
}

fn count_window(lo: u64, hi: u64, core: &[u64], primes: &PrimeTable) -> (CensusCounts, u64) {
    // Counts over the integers lo..=hi. The second value is the number of
    // potential primes that are neither 1 nor prime (new composites).
    let mut c = CensusCounts::default();
    let mut new = 0;
    let mut n = if lo % 2 == 1 { lo } else { lo + 1 };
    while n <= hi {
        if is_potential_prime(n, core) {
            c.potential_primes += 1;
            let prime = primes.is_prime(n);
            if n != 1 && !prime {
                new += 1;
            }
            if n >= 3 && is_potential_prime(n - 2, core) {
                c.potential_twins += 1;
                if prime && primes.is_prime(n - 2) {
                    c.true_twins += 1;
                } else {
                    c.false_twins += 1;
                }
            }
        }
        n += 2;
    }
    (c, new)
}

/// Tabulate each cycle of `inner` inside `outer` under the core seeds of
/// `outer`. Twin pairs are counted at their larger member; a pair is a true
/// twin only when it is a potential twin and both members are prime.
pub fn cycle_census(inner: &Primorial, outer: &Primorial, budget: &Budget) -> Result<CycleCensus> {
    if inner.rank() > outer.rank() {
        return Err(Error::domain(format!(
            "{} does not divide {}",
            inner.value(),
            outer.value()
        )));
    }
    check_budget(outer, budget)?;
    let primes = primes_up_to(outer.value().max(2))?;
    let core = outer.factors();
    let len = inner.value();
    let cycles = outer.value() / len;
    let per_cycle: Vec<(CensusCounts, u64)> = (0..cycles)
        .into_par_iter()
        .map(|k| count_window(k * len + 1, (k + 1) * len, core, &primes))
        .collect();
    let mut rows = Vec::with_capacity(per_cycle.len());
    let mut cumulative = CensusCounts::default();
    let mut new_total = 0;
    for (k, (c, new)) in per_cycle.into_iter().enumerate() {
        cumulative = cumulative + c;
        new_total += new;
        rows.push(CensusRow {
            cycle_index: k as u64 + 1,
            cycle_end: (k as u64 + 1) * len,
            cycle_length: len,
            in_cycle: c,
            cumulative,
            new_composites_cumulative: new_total,
        });
    }
    Ok(CycleCensus {
        inner: inner.clone(),
        outer: outer.clone(),
        rows,
    })
}

/// One window of the Figure-1 series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Figure1Point {
    pub window_index: u64,
    pub window_start: u64,
    pub window_end: u64,
    pub window_length: u64,
    pub potential_primes: u64,
    pub new_composites: u64,
    pub cumulative_new_composites: u64,
}

/// Potential primes and new composites per window of length `2 * max_seed`
/// across `(0, primorial]`. The final window may be shorter.
pub fn figure1_series(p: &Primorial, budget: &Budget) -> Result<Vec<Figure1Point>> {
    let b = new_composites(p, budget)?;
    let table = primes_up_to(p.value().isqrt().max(64))?;
    let sps: SeedPrimeSet = seed_prime_set_with(p, &table)?;
    let width = 2 * sps.max_seed();
    let core = p.factors();
    let windows = p.value().div_ceil(width);
    let counts: Vec<(u64, u64, u64, u64)> = (0..windows)
        .into_par_iter()
        .map(|k| {
            let lo = k * width + 1;
            let hi = ((k + 1) * width).min(p.value());
            let pp = (lo..=hi).filter(|&n| is_potential_prime(n, core)).count() as u64;
            let new = (b.count_up_to(hi) - b.count_up_to(lo - 1)) as u64;
            (lo, hi, pp, new)
        })
        .collect();
    let mut cumulative = 0;
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(k, (lo, hi, pp, new))| {
            cumulative += new;
            Figure1Point {
                window_index: k as u64 + 1,
                window_start: lo,
                window_end: hi,
                window_length: hi - lo + 1,
                potential_primes: pp,
                new_composites: new,
                cumulative_new_composites: cumulative,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::nth_primorial;

    #[test]
    fn totients_and_solution_products() {
        let p = nth_primorial(6).unwrap();
        assert_eq!(totient_of_primorial(&p), 5760);
        assert_eq!(potential_solutions_t(&p).unwrap(), 1485);
        assert_eq!(
            potential_solutions_t(&nth_primorial(2).unwrap()).unwrap(),
            1
        );
        assert!(potential_solutions_t(&nth_primorial(1).unwrap()).is_err());
    }

    #[test]
    fn new_composites_of_210() {
        let b = new_composites(&nth_primorial(4).unwrap(), &Budget::default()).unwrap();
        assert_eq!(b.members(), &[121, 143, 169, 187, 209]);
        let b = new_composites(&nth_primorial(3).unwrap(), &Budget::default()).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn eq1_at_100() {
        let c = prime_count_via_eq1(100, &[2, 3, 5, 7]).unwrap();
        assert_eq!(c.level_sums, vec![117, 45, 6, 0]);
        assert_eq!(c.multiples, 78);
        assert_eq!(c.pi, 25);
        assert_eq!(c.expansion(), "117 - 45 + 6 - 0");
        assert!(prime_count_via_eq1(100, &[2, 3, 5]).is_err());
    }

    #[test]
    fn eq3_matches_pi() {
        for k in 3..=7 {
            let p = nth_primorial(k).unwrap();
            let c = prime_count_via_eq3(&p, &Budget::default()).unwrap();
            assert_eq!(c.pi, primes_up_to(p.value()).unwrap().count() as u64);
        }
    }

    #[test]
    fn census_of_30() {
        let p = nth_primorial(3).unwrap();
        let c = cycle_census(&p, &p, &Budget::default()).unwrap();
        assert_eq!(c.rows.len(), 1);
        let r = c.rows[0].in_cycle;
        assert_eq!(
            (r.potential_primes, r.potential_twins, r.true_twins),
            (8, 2, 2)
        );
    }

    #[test]
    fn figure1_at_210() {
        let s = figure1_series(&nth_primorial(4).unwrap(), &Budget::default()).unwrap();
        assert_eq!(s[0].window_length, 26);
        assert_eq!(s.last().unwrap().cumulative_new_composites, 5);
    }
}
