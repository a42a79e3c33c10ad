//! Goldbach pairs, their mod-3 structure, residue addition tables and the
//! signature-mismatch route to a solution.

use serde::Serialize;

use crate::primes::{
    largest_primorial_at_most, primes_up_to, seed_prime_set, smallest_primorial_at_least,
    PrimeTable, Primorial, SeedPrimeSet,
};
use crate::{Budget, Error, Result};

/// Residues of `E`, `p1` and `p2` modulo one seed prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueTriple {
    pub seed: u64,
    pub e: u64,
    pub p1: u64,
    pub p2: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GoldbachPair {
    pub e: u64,
    pub p1: u64,
    pub p2: u64,
}

impl GoldbachPair {
    pub fn residue_comparison(&self, seeds: &[u64]) -> Vec<ResidueTriple> {
        seeds
            .iter()
            .map(|&q| ResidueTriple {
                seed: q,
                e: self.e % q,
                p1: self.p1 % q,
                p2: self.p2 % q,
            })
            .collect()
    }
}

fn check_even(e: u64) -> Result<()> {
    if e <= 4 || e % 2 == 1 {
        return Err(Error::domain(format!(
            "expected an even number > 4, got {e}"
        )));
    }
    Ok(())
}

/// Every pair of odd primes `p1 <= p2` summing to `e`, ascending by `p1`.
pub fn goldbach_pairs_with(e: u64, table: &PrimeTable) -> Result<Vec<GoldbachPair>> {
    check_even(e)?;
    table.check(e)?;
    Ok(table
        .primes_in(3, e / 2)
        .iter()
        .filter(|&&p1| table.is_prime(e - p1))
        .map(|&p1| GoldbachPair { e, p1, p2: e - p1 })
        .collect())
}

pub fn goldbach_pairs(e: u64, budget: &Budget) -> Result<Vec<GoldbachPair>> {
    check_even(e)?;
    budget.check_primality("Goldbach pair enumeration", e)?;
    goldbach_pairs_with(e, &primes_up_to(e)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub e: u64,
    pub class: u8,
    pub count: u64,
}

/// Pair counts for every even `6 <= E <= upper`.
pub fn pair_count_table(upper: u64, budget: &Budget) -> Result<Vec<PairCount>> {
    if upper < 6 {
        return Err(Error::domain(format!(
            "upper bound must be >= 6, got {upper}"
        )));
    }
    budget.check_primality("Goldbach pair table", upper)?;
    let table = primes_up_to(upper)?;
    (6..=upper)
        .step_by(2)
        .map(|e| {
            Ok(PairCount {
                e,
                class: (e % 3) as u8,
                count: goldbach_pairs_with(e, &table)?.len() as u64,
            })
        })
        .collect()
}

/// A pair member as seen modulo 3: the prime 3 itself, or a nonzero class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mod3Member {
    Three,
    Class(u8),
}

impl Mod3Member {
    pub fn of(p: u64) -> Mod3Member {
        if p == 3 {
            Mod3Member::Three
        } else {
            Mod3Member::Class((p % 3) as u8)
        }
    }
}

impl std::fmt::Display for Mod3Member {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mod3Member::Three => write!(f, "3"),
            Mod3Member::Class(c) => write!(f, "[{c}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mod3Rule {
    pub e_class: u8,
    pub allowed: Vec<(Mod3Member, Mod3Member)>,
}

impl Mod3Rule {
    pub fn conforms(&self, pair: &GoldbachPair) -> bool {
        let a = Mod3Member::of(pair.p1);
        let b = Mod3Member::of(pair.p2);
        self.allowed
            .iter()
            .any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
    }
}

pub fn mod3_rule(e: u64) -> Result<Mod3Rule> {
    check_even(e)?;
    use Mod3Member::{Class, Three};
    let e_class = (e % 3) as u8;
    let mut allowed = match e_class {
        0 => vec![(Class(1), Class(2)), (Class(2), Class(1))],
        1 => vec![(Class(2), Class(2)), (Three, Class(1))],
        _ => vec![(Class(1), Class(1)), (Three, Class(2))],
    };
    if e == 6 {
        allowed.push((Three, Three));
    }
    Ok(Mod3Rule { e_class, allowed })
}

/// `grid[a][b] = (a + b) mod p`.
pub fn residue_addition_table(p: u64) -> Result<Vec<Vec<u64>>> {
    if p < 2 {
        return Err(Error::domain(format!("modulus must be >= 2, got {p}")));
    }
    Ok((0..p)
        .map(|a| (0..p).map(|b| (a + b) % p).collect())
        .collect())
}

/// The seed set used for an even number: that of the smallest primorial
/// `>= E`, and never smaller than that of 30.
pub fn goldbach_seed_set(e: u64) -> Result<SeedPrimeSet> {
    check_even(e)?;
    seed_prime_set(&smallest_primorial_at_least(e.max(30))?)
}

fn check_seed_set(e: u64, sps: &SeedPrimeSet) -> Result<()> {
    check_even(e)?;
    let expected = smallest_primorial_at_least(e.max(30))?;
    if sps.primorial() != &expected {
        return Err(Error::domain(format!(
            "{e} needs the seed primes of {}, got those of {}",
            expected.value(),
            sps.primorial().value()
        )));
    }
    Ok(())
}

fn mismatches(e: u64, p1: u64, seeds: &[u64]) -> bool {
    seeds.iter().all(|&q| p1 % q != e % q)
}

/// Odd primes `p1 < E/2` whose residues differ from those of `E` at every
/// seed prime, plus `E/2` itself when it is prime.
pub fn mismatch_filter_with(e: u64, sps: &SeedPrimeSet, table: &PrimeTable) -> Result<Vec<u64>> {
    check_seed_set(e, sps)?;
    table.check(e / 2)?;
    let half = e / 2;
    let mut out: Vec<u64> = table
        .primes_in(3, half - 1)
        .iter()
        .copied()
        .filter(|&p1| mismatches(e, p1, sps.seeds()))
        .collect();
    if table.is_prime(half) && half > 2 {
        out.push(half);
    }
    Ok(out)
}

pub fn mismatch_filter(e: u64, sps: &SeedPrimeSet) -> Result<Vec<u64>> {
    check_seed_set(e, sps)?;
    mismatch_filter_with(e, sps, &primes_up_to((e / 2).max(2))?)
}

/// Residue classes modulo `p` that are odd, coprime to its factors and
/// differ from `E` at every factor: `(q - 1)` choices where `q | E`,
/// `(q - 2)` otherwise, over the odd factors `q`.
pub fn exact_potential_goldbach_count(e: u64, p: &Primorial) -> Result<u64> {
    check_even(e)?;
    Ok(p.factors()
        .iter()
        .skip(1)
        .map(|&q| if e % q == 0 { q - 1 } else { q - 2 })
        .product())
}

/// Which route produced a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveCase {
    /// `E / 2` is prime.
    Case1,
    /// A seed prime mismatches `E` at every seed prime.
    Case2a,
    /// The smallest non-seed prime passing the mismatch filter.
    Case2b,
    /// No mismatch solution; the first pair found by enumeration.
    Direct,
}

impl std::fmt::Display for SolveCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveCase::Case1 => "case-1",
            SolveCase::Case2a => "case-2a",
            SolveCase::Case2b => "case-2b",
            SolveCase::Direct => "direct",
        })
    }
}

/// How the primality of `p2` was settled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// `p2` is coprime to the factors of `B` and below `P_Z^2`.
    ScaffoldBound,
    Sieve,
}

/// The two-primorial anchor of a solution: `A` the largest primorial `<= E`,
/// `P_B` the largest prime below `sqrt(A)`, `P_Z` the next prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaffoldAnchor {
    pub a: Primorial,
    pub p_b: u64,
    pub p_z: u64,
    pub p_z_squared: u64,
    pub bound_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldbachSolution {
    pub pair: GoldbachPair,
    pub case: SolveCase,
    pub anchor: Option<ScaffoldAnchor>,
    pub certification: Certification,
    /// Some seed prime mismatches `E` at every core seed but leaves a
    /// composite partner, so checking the core seeds alone would mislead.
    pub seed_rule_divergence: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub allow_seed_primes: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            allow_seed_primes: true,
        }
    }
}

fn anchor_for(e: u64, table: &PrimeTable) -> Result<Option<ScaffoldAnchor>> {
    if e < 30 {
        return Ok(None);
    }
    let a = largest_primorial_at_most(e)?;
    let root = a.value().isqrt();
    let p_b = primes_up_to(root.max(2))?
        .largest_prime_at_most(root)
        .expect("root of 30 or more exceeds 2");
    let p_z = match table.next_prime_after(p_b) {
        Some(p) => p,
        None => primes_up_to(2 * p_b + 2)?
            .next_prime_after(p_b)
            .expect("Bertrand"),
    };
    let p_z_squared = p_z * p_z;
    Ok(Some(ScaffoldAnchor {
        bound_holds: p_z_squared > a.value(),
        a,
        p_b,
        p_z,
        p_z_squared,
    }))
}

pub fn goldbach_solve_with(
    e: u64,
    options: SolveOptions,
    table: &PrimeTable,
) -> Result<GoldbachSolution> {
    check_even(e)?;
    table.check(e)?;
    let sps = goldbach_seed_set(e)?;
    let anchor = anchor_for(e, table)?;
    let seed_passing: Vec<u64> = sps.seeds()[1..]
        .iter()
        .copied()
        .filter(|&q| q < e.div_ceil(2) && mismatches(e, q, sps.seeds()))
        .collect();
    let seed_rule_divergence = sps.seeds()[1..]
        .iter()
        .any(|&q| q < e.div_ceil(2) && mismatches(e, q, sps.core()) && !table.is_prime(e - q));

    let certify = |p2: u64| match &anchor {
        Some(a)
            if a.bound_holds
                && p2 < a.p_z_squared
                && table.primes_in(2, a.p_b).iter().all(|&q| p2 % q != 0) =>
        {
            Certification::ScaffoldBound
        }
        _ => Certification::Sieve,
    };
    let solution = |p1: u64, case: SolveCase| -> Result<GoldbachSolution> {
        let p2 = e - p1;
        if !table.is_prime(p1) || !table.is_prime(p2) {
            return Err(Error::CounterexampleCandidate(e));
        }
        Ok(GoldbachSolution {
            pair: GoldbachPair { e, p1, p2 },
            case,
            anchor: anchor.clone(),
            certification: certify(p2),
            seed_rule_divergence,
        })
    };

    if table.is_prime(e / 2) {
        return solution(e / 2, SolveCase::Case1);
    }
    if options.allow_seed_primes {
        if let Some(&q) = seed_passing.first() {
            return solution(q, SolveCase::Case2a);
        }
    }
    let passing = mismatch_filter_with(e, &sps, table)?;
    if let Some(&p1) = passing.iter().find(|&&p| !sps.is_seed(p)) {
        return solution(p1, SolveCase::Case2b);
    }
    match goldbach_pairs_with(e, table)?
        .into_iter()
        .find(|p| options.allow_seed_primes || !sps.is_seed(p.p1))
    {
        Some(p) => solution(p.p1, SolveCase::Direct),
        None => Err(Error::CounterexampleCandidate(e)),
    }
}

pub fn goldbach_solve(e: u64, options: SolveOptions, budget: &Budget) -> Result<GoldbachSolution> {
    check_even(e)?;
    budget.check_primality("Goldbach solve", e)?;
    goldbach_solve_with(e, options, &primes_up_to(e)?)
}

/// Ordinary least-squares slope of `y` against `x`.
pub fn ols_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Per-class least-squares slopes of pair count against `E`, classes 0, 1, 2.
pub fn class_slopes(rows: &[PairCount]) -> [Option<f64>; 3] {
    let slope = |c: u8| {
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r.class == c)
            .map(|r| (r.e as f64, r.count as f64))
            .collect();
        ols_slope(&pts)
    };
    [slope(0), slope(1), slope(2)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_and_counts() {
        let b = Budget::default();
        let p68: Vec<_> = goldbach_pairs(68, &b)
            .unwrap()
            .iter()
            .map(|p| (p.p1, p.p2))
            .collect();
        assert_eq!(p68, vec![(7, 61), (31, 37)]);
        assert_eq!(goldbach_pairs(210, &b).unwrap().len(), 19);
        assert_eq!(goldbach_pairs(6, &b).unwrap().len(), 1);
        assert!(goldbach_pairs(7, &b).is_err());
        assert!(goldbach_pairs(4, &b).is_err());
        let t = pair_count_table(210, &b).unwrap();
        assert_eq!(t.len(), 103);
        assert_eq!(t.iter().find(|r| r.e == 60).unwrap().count, 6);
    }

    #[test]
    fn mod3_rules() {
        let r = mod3_rule(40).unwrap();
        assert!(r.conforms(&GoldbachPair {
            e: 40,
            p1: 3,
            p2: 37
        }));
        assert!(r.conforms(&GoldbachPair {
            e: 40,
            p1: 11,
            p2: 29
        }));
        assert!(mod3_rule(6)
            .unwrap()
            .conforms(&GoldbachPair { e: 6, p1: 3, p2: 3 }));
        assert!(!mod3_rule(12).unwrap().conforms(&GoldbachPair {
            e: 12,
            p1: 3,
            p2: 9
        }));
    }

    #[test]
    fn addition_table_zeros() {
        let g = residue_addition_table(7).unwrap();
        assert_eq!(g.iter().flatten().filter(|&&c| c == 0).count(), 7);
        assert_eq!(g.iter().flatten().count(), 49);
    }

    #[test]
    fn mismatch_examples() {
        let sps = goldbach_seed_set(68).unwrap();
        let f = mismatch_filter(68, &sps).unwrap();
        assert!(f.contains(&7) && f.contains(&31) && !f.contains(&19));
        let f = mismatch_filter(60, &goldbach_seed_set(60).unwrap()).unwrap();
        assert!(f.contains(&17));
        let f = mismatch_filter(26, &goldbach_seed_set(26).unwrap()).unwrap();
        assert!(f.contains(&13));
        let wrong = seed_prime_set(&crate::primes::nth_primorial(5).unwrap()).unwrap();
        assert!(mismatch_filter(68, &wrong).is_err());
    }

    #[test]
    fn potential_counts() {
        let p = |k| crate::primes::nth_primorial(k).unwrap();
        assert_eq!(exact_potential_goldbach_count(30, &p(3)).unwrap(), 8);
        assert_eq!(exact_potential_goldbach_count(68, &p(4)).unwrap(), 15);
        assert_eq!(exact_potential_goldbach_count(210, &p(4)).unwrap(), 48);
    }

    #[test]
    fn solve_cases() {
        let b = Budget::default();
        let s = goldbach_solve(6, SolveOptions::default(), &b).unwrap();
        assert_eq!((s.case, s.pair.p1), (SolveCase::Case1, 3));
        let s = goldbach_solve(68, SolveOptions::default(), &b).unwrap();
        assert_eq!((s.case, s.pair.p1, s.pair.p2), (SolveCase::Case2a, 7, 61));
        let s = goldbach_solve(
            68,
            SolveOptions {
                allow_seed_primes: false,
            },
            &b,
        )
        .unwrap();
        assert_eq!((s.case, s.pair.p1, s.pair.p2), (SolveCase::Case2b, 31, 37));
        let s = goldbach_solve(8, SolveOptions::default(), &b).unwrap();
        assert_eq!((s.case, s.pair.p1), (SolveCase::Direct, 3));
    }
}
