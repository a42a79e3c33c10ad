//! Product factors and the primorial scaffolds: per-cycle averages of
//! potential twin / Goldbach solutions of a small primorial inside a much
//! larger one whose value is never materialised.

use serde::Serialize;

use crate::census::potential_solutions_t;
use crate::primes::{nth_primorial, primes_up_to, PrimeTable, Primorial};
use crate::{Budget, Error, Result};

/// Product of `(q - 2) / q` over the primes `q` in `[from, to]` of `table`.
///
/// The logarithms are summed with Neumaier compensation so that ranges of
/// hundreds of thousands of primes keep well over six significant digits.
pub fn product_factor_with(table: &PrimeTable, from: u64, to: u64) -> Result<f64> {
    if from > to {
        return Err(Error::domain(format!("empty prime range [{from}, {to}]")));
    }
    table.check(to)?;
    if !table.is_prime(from) || !table.is_prime(to) {
        return Err(Error::domain(format!(
            "product factor bounds must be prime, got {from} and {to}"
        )));
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for &q in table.primes_in(from, to) {
        let term = (-2.0 / q as f64).ln_1p();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    Ok((sum + comp).exp())
}

/// As [`product_factor_with`], sieving as far as `to`.
pub fn product_factor(from: u64, to: u64, budget: &Budget) -> Result<f64> {
    budget.check_primality("product factor", to)?;
    product_factor_with(&primes_up_to(to.max(2))?, from, to)
}

/// Average solutions per cycle: `T(M)` scaled by a product factor.
pub fn avg_solutions_in_cycle(t_m: u64, pf: f64) -> f64 {
    t_m as f64 * pf
}

/// Display rounding used by the scaffold tables: half-up to an integer.
pub fn round_half_up(x: f64) -> u64 {
    (x + 0.5).floor() as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// `M` and `N`, the largest factor of `N` the largest prime below `sqrt(M)`.
    TwoPrimorialRootM,
    /// `A`, `B` the next primorial, and `C` bounded by `sqrt(B)`.
    ThreePrimorial,
    /// `A` and `B`, the largest factor of `B` the largest prime below
    /// `sqrt(A)`; the Goldbach reading of the two-primorial scaffold.
    GoldbachTwoPrimorial,
}

/// One scaffold row. The enclosing primorial (`N`, `C` or the Goldbach `B`)
/// is carried only by its largest factor.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScaffoldRow {
    pub index: usize,
    pub construction: Construction,
    pub a: Primorial,
    /// The middle primorial of the three-primorial construction.
    pub b: Option<Primorial>,
    pub outer_largest_factor: u64,
    pub p_a: u64,
    /// Largest factor of `b` (three-primorial rows only).
    pub p_b: Option<u64>,
    /// Least prime above the largest factor of `b` (three-primorial rows only).
    pub p_s: Option<u64>,
    pub t_a: u64,
    /// Product of `(q - 2) / q` over the factors of the outer primorial
    /// above `p_a`.
    pub product_factor: f64,
    pub avg_t_a: f64,
    /// `p_b * avg_t_a` (three-primorial rows only).
    pub avg_t_b: Option<f64>,
    /// Smallest non-core seed prime of the outer primorial.
    pub p_z: u64,
    pub p_z_squared: u64,
}

impl ScaffoldRow {
    pub fn avg_t_a_display(&self) -> u64 {
        round_half_up(self.avg_t_a)
    }

    pub fn avg_t_b_display(&self) -> Option<u64> {
        self.avg_t_b.map(round_half_up)
    }

    pub fn reciprocal(&self) -> f64 {
        1.0 / self.product_factor
    }

    /// The primorial whose value `p_z_squared` must exceed.
    pub fn bound_subject(&self) -> u64 {
        self.b.as_ref().unwrap_or(&self.a).value()
    }
}

/// One row of the successive-ratio table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioRow {
    pub index: usize,
    pub m: Primorial,
    pub n_largest_factor: u64,
    /// `None` on the first row.
    pub previous_avg: Option<f64>,
    pub avg: f64,
    pub avg_ratio: Option<f64>,
    pub t_ratio: Option<u64>,
    pub pf_ratio: Option<f64>,
}

fn scaffold_primes(largest_subject: u64, budget: &Budget) -> Result<PrimeTable> {
    let root = largest_subject.isqrt();
    let limit = root + root / 64 + 1024;
    budget.check_primality("scaffold prime table", limit)?;
    primes_up_to(limit)
}

fn largest_prime_below_root(table: &PrimeTable, v: u64) -> u64 {
    table
        .largest_prime_at_most(v.isqrt())
        .expect("root of a primorial >= 210 exceeds 2")
}

fn next_prime(table: &PrimeTable, p: u64) -> Result<u64> {
    table.next_prime_after(p).ok_or(Error::Budget {
        what: "scaffold prime table",
        needed: p + 1,
        budget: table.limit(),
    })
}

fn rank_for_row(index: usize, offset: usize) -> Result<Primorial> {
    if index == 0 {
        return Err(Error::domain("scaffold rows are numbered from 1"));
    }
    nth_primorial((index + offset) as u32)
}

fn two_primorial_rows(
    rows: usize,
    construction: Construction,
    budget: &Budget,
) -> Result<Vec<ScaffoldRow>> {
    if rows == 0 {
        return Ok(Vec::new());
    }
    let last = rank_for_row(rows, 3)?;
    let table = scaffold_primes(last.value(), budget)?;
    (1..=rows)
        .map(|k| {
            let a = rank_for_row(k, 3)?;
            let p_a = a.largest_factor();
            let outer = largest_prime_below_root(&table, a.value());
            let p_s = next_prime(&table, p_a)?;
            let pf = product_factor_with(&table, p_s, outer)?;
            let t_a = potential_solutions_t(&a)?;
            let p_z = next_prime(&table, outer)?;
            Ok(ScaffoldRow {
                index: k,
                construction,
                a,
                b: None,
                outer_largest_factor: outer,
                p_a,
                p_b: None,
                p_s: None,
                t_a,
                product_factor: pf,
                avg_t_a: avg_solutions_in_cycle(t_a, pf),
                avg_t_b: None,
                p_z,
                p_z_squared: p_z * p_z,
            })
        })
        .collect()
}

/// Two-primorial scaffold: `M` is the `(k + 3)`-th primorial (210 first) and
/// `N` stops at the largest prime below `sqrt(M)`.
pub fn build_table17(rows: usize, budget: &Budget) -> Result<Vec<ScaffoldRow>> {
    two_primorial_rows(rows, Construction::TwoPrimorialRootM, budget)
}

/// Goldbach scaffold: same arithmetic as [`build_table17`], reported with
/// the smallest non-core seed prime of `B` and its square.
pub fn build_table21(rows: usize, budget: &Budget) -> Result<Vec<ScaffoldRow>> {
    two_primorial_rows(rows, Construction::GoldbachTwoPrimorial, budget)
}

/// Three-primorial scaffold `A`-`B`-`C` with `C` bounded by `sqrt(B)`.
pub fn build_table19_20(rows: usize, budget: &Budget) -> Result<Vec<ScaffoldRow>> {
    if rows == 0 {
        return Ok(Vec::new());
    }
    let last_b = rank_for_row(rows, 4)?;
    let table = scaffold_primes(last_b.value(), budget)?;
    (1..=rows)
        .map(|k| {
            let a = rank_for_row(k, 3)?;
            let b = rank_for_row(k, 4)?;
            let p_a = a.largest_factor();
            let p_b = b.largest_factor();
            let p_s = next_prime(&table, p_b)?;
            let p_c = largest_prime_below_root(&table, b.value());
            let pf = product_factor_with(&table, p_b, p_c)?;
            let t_a = potential_solutions_t(&a)?;
            let avg_t_a = avg_solutions_in_cycle(t_a, pf);
            let p_z = next_prime(&table, p_c)?;
            Ok(ScaffoldRow {
                index: k,
                construction: Construction::ThreePrimorial,
                a,
                b: Some(b),
                outer_largest_factor: p_c,
                p_a,
                p_b: Some(p_b),
                p_s: Some(p_s),
                t_a,
                product_factor: pf,
                avg_t_a,
                avg_t_b: Some(avg_t_a * p_b as f64),
                p_z,
                p_z_squared: p_z * p_z,
            })
        })
        .collect()
}

/// Ratios of successive two-primorial averages, computed on the unrounded
/// values.
pub fn build_table18(rows: usize, budget: &Budget) -> Result<Vec<RatioRow>> {
    let base = build_table17(rows, budget)?;
    Ok(base
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let prev = i.checked_sub(1).map(|j| &base[j]);
            RatioRow {
                index: r.index,
                m: r.a.clone(),
                n_largest_factor: r.outer_largest_factor,
                previous_avg: prev.map(|p| p.avg_t_a),
                avg: r.avg_t_a,
                avg_ratio: prev.map(|p| r.avg_t_a / p.avg_t_a),
                t_ratio: prev.map(|p| r.t_a / p.t_a),
                pf_ratio: prev.map(|p| r.product_factor / p.product_factor),
            }
        })
        .collect())
}

/// `T(N) / prod(q)` over the factors `q` of `N` above `P_M`, as an exact
/// rational `(numerator, denominator)`; `None` when it leaves 128 bits.
pub fn exact_average(table: &PrimeTable, m: &Primorial, largest: u64) -> Option<(u128, u128)> {
    let t = potential_solutions_t(m).ok()? as u128;
    let from = table.next_prime_after(m.largest_factor())?;
    let mut num = t;
    let mut den = 1u128;
    for &q in table.primes_in(from, largest) {
        num = num.checked_mul(q as u128 - 2)?;
        den = den.checked_mul(q as u128)?;
    }
    Some((num, den))
}
