//! Modular signatures: the residues of an integer under an ascending list of
//! seed primes, their Chinese-remainder reconstruction, and the
//! potential-prime / potential-twin classification built on them.

use serde::Serialize;

use crate::primes::SeedPrimeSet;
use crate::{Error, Result};

/// The residues of `subject` under each seed prime, index-aligned.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularSignature {
    subject: u64,
    seeds: Vec<u64>,
    residues: Vec<u64>,
}

impl ModularSignature {
    pub fn subject(&self) -> u64 {
        self.subject
    }

    pub fn seeds(&self) -> &[u64] {
        &self.seeds
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// Residue at seed prime `q`, if `q` is one of the seeds.
    pub fn residue_at(&self, q: u64) -> Option<u64> {
        self.seeds.binary_search(&q).ok().map(|i| self.residues[i])
    }

    pub fn reconstruct(&self) -> Result<u64> {
        crt_reconstruct(&self.seeds, &self.residues)
    }
}

pub(crate) fn is_prime_small(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn validate_seeds(seeds: &[u64]) -> Result<()> {
    if seeds.is_empty() {
        return Err(Error::domain("seed list is empty"));
    }
    if seeds.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("seed primes must be strictly ascending"));
    }
    if let Some(&bad) = seeds.iter().find(|&&q| !is_prime_small(q)) {
        return Err(Error::domain(format!("seed {bad} is not prime")));
    }
    Ok(())
}

/// Signature of `z` under an explicit seed list (validated).
pub fn signature(z: u64, seeds: &[u64]) -> Result<ModularSignature> {
    if z == 0 {
        return Err(Error::domain("signatures are defined for z >= 1"));
    }
    validate_seeds(seeds)?;
    Ok(signature_unchecked(z, seeds))
}

/// Signature of `z` under every seed prime of `sps`.
pub fn signature_for(z: u64, sps: &SeedPrimeSet) -> ModularSignature {
    signature_unchecked(z, sps.seeds())
}

fn signature_unchecked(z: u64, seeds: &[u64]) -> ModularSignature {
    ModularSignature {
        subject: z,
        seeds: seeds.to_vec(),
        residues: seeds.iter().map(|&q| z % q).collect(),
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i128) as u64)
}

/// The unique `U` in `[0, prod(seeds))` with `U = residues[i] (mod seeds[i])`.
///
/// Residues are folded in one modulus at a time. Once the running modulus
/// would exceed 64 bits, the partial solution is checked against the
/// remaining congruences: if it satisfies them all it is the answer (it is
/// already below the full product), otherwise the answer does not fit and an
/// overflow error is returned.
pub fn crt_reconstruct(seeds: &[u64], residues: &[u64]) -> Result<u64> {
    if seeds.len() != residues.len() {
        return Err(Error::domain("seed and residue lists differ in length"));
    }
    validate_seeds(seeds)?;
    if let Some((q, r)) = seeds.iter().zip(residues).find(|(q, r)| r >= q) {
        return Err(Error::domain(format!("residue {r} is not reduced mod {q}")));
    }
    let mut x: u64 = 0;
    let mut m: u64 = 1;
    for (i, (&q, &r)) in seeds.iter().zip(residues).enumerate() {
        let Some(next_m) = m.checked_mul(q) else {
            let rest_ok = seeds[i..]
                .iter()
                .zip(&residues[i..])
                .all(|(&q, &r)| x % q == r);
            return if rest_ok {
                Ok(x)
            } else {
                Err(Error::Overflow("CRT solution exceeds 64 bits".to_string()))
            };
        };
        let inv = mod_inverse(m % q, q).expect("distinct primes are coprime");
        let diff = (r + q - x % q) % q;
        let k = (diff as u128 * inv as u128 % q as u128) as u64;
        x = (x as u128 + m as u128 * k as u128) as u64;
        m = next_m;
    }
    Ok(x)
}

/// Outcome of classifying an integer against a seed-prime set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Unit,
    SeedPrime,
    CompositeByCore,
    PotentialPrime,
    SignatureCertifiedPrime,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub subject: u64,
    pub is_odd: bool,
    pub zero_core_residues: Vec<u64>,
    pub zero_noncore_residues: Vec<u64>,
    pub verdict: Verdict,
}

impl Classification {
    /// Potential prime in the core-seed sense (certified primes included).
    pub fn is_potential_prime(&self) -> bool {
        matches!(
            self.verdict,
            Verdict::PotentialPrime | Verdict::SignatureCertifiedPrime
        )
    }
}

/// Classify `z` in `[1, primorial]` by its residues under `sps`.
pub fn classify(z: u64, sps: &SeedPrimeSet) -> Result<Classification> {
    let top = sps.primorial().value();
    if z == 0 || z > top {
        return Err(Error::domain(format!("{z} is outside [1, {top}]")));
    }
    let zero_core: Vec<u64> = sps.core().iter().copied().filter(|&q| z % q == 0).collect();
    let zero_noncore: Vec<u64> = sps
        .non_core()
        .iter()
        .copied()
        .filter(|&q| z % q == 0)
        .collect();
    let verdict = if z == 1 {
        Verdict::Unit
    } else if sps.is_seed(z) {
        Verdict::SeedPrime
    } else if !zero_core.is_empty() {
        Verdict::CompositeByCore
    } else if !zero_noncore.is_empty() {
        Verdict::PotentialPrime
    } else {
        Verdict::SignatureCertifiedPrime
    };
    Ok(Classification {
        subject: z,
        is_odd: z % 2 == 1,
        zero_core_residues: zero_core,
        zero_noncore_residues: zero_noncore,
        verdict,
    })
}

/// Odd and coprime to every core seed prime.
#[inline]
pub fn is_potential_prime(n: u64, core: &[u64]) -> bool {
    n % 2 == 1 && core.iter().all(|&q| n % q != 0)
}

/// Whether `o2` and `o2 - 2` are both potential primes under the core seeds.
/// Pairs are identified by their larger member.
pub fn is_potential_twin(o2: u64, sps: &SeedPrimeSet) -> Result<bool> {
    let top = sps.primorial().value();
    if o2 % 2 == 0 {
        return Err(Error::domain(format!("{o2} is even")));
    }
    if !(5..=top).contains(&o2) {
        return Err(Error::domain(format!("{o2} is outside [5, {top}]")));
    }
    Ok(is_potential_prime(o2, sps.core()) && is_potential_prime(o2 - 2, sps.core()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// The order in which odd (or even) integers visit the residues of `p`,
/// starting from 1 (or 2).
pub fn residue_cycle(p: u64, parity: Parity) -> Result<Vec<u64>> {
    if p == 2 {
        return Err(Error::domain("the residue cycle of 2 is degenerate"));
    }
    if !is_prime_small(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    let first = match parity {
        Parity::Odd => 1,
        Parity::Even => 2,
    };
    Ok((0..p).map(|k| (first + 2 * k) % p).collect())
}
