use serde::Serialize;

use crate::{Error, Result};

/// The product of the first `k` primes, with its factor list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Primorial {
    value: u64,
    factors: Vec<u64>,
}

impl Primorial {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Ascending, consecutive primes starting at 2.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn largest_factor(&self) -> u64 {
        *self
            .factors
            .last()
            .expect("primorial has at least one factor")
    }

    /// Number of prime factors (`k` for the `k`-th primorial).
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The primorial with one more prime factor.
    pub fn next(&self) -> Result<Primorial> {
        nth_primorial(self.rank() as u32 + 1)
    }

    /// The primorial with one fewer prime factor, if any.
    pub fn prev(&self) -> Option<Primorial> {
        (self.rank() > 1)
            .then(|| nth_primorial(self.rank() as u32 - 1).expect("smaller primorial fits"))
    }

    /// Recognise `value` as a primorial.
    pub fn from_value(value: u64) -> Result<Primorial> {
        let mut k = 1;
        loop {
            let p = nth_primorial(k)?;
            if p.value == value {
                return Ok(p);
            }
            if p.value > value {
                return Err(Error::domain(format!("{value} is not a primorial")));
            }
            k += 1;
        }
    }

    /// The primorial whose largest factor is `p`.
    pub fn of_prime(p: u64) -> Result<Primorial> {
        let rank = first_primes_through(p);
        if rank.last() != Some(&p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        nth_primorial(rank.len() as u32)
    }

    /// Display form used by the tables: `2,310` for values, `47#` otherwise.
    pub fn hash_notation(&self) -> String {
        format!("{}#", self.largest_factor())
    }
}

/// The first `k` primes by trial division; `k` stays tiny because primorials
/// overflow 64 bits after 15 factors.
pub(crate) fn first_primes(k: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(k);
    let mut n = 2u64;
    while out.len() < k {
        if out.iter().take_while(|&&p| p * p <= n).all(|&p| n % p != 0) {
            out.push(n);
        }
        n += 1;
    }
    out
}

fn first_primes_through(p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = 2u64;
    while n <= p {
        if out
            .iter()
            .take_while(|&&q: &&u64| q * q <= n)
            .all(|&q| n % q != 0)
        {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// The product of the first `k` primes.
pub fn nth_primorial(k: u32) -> Result<Primorial> {
    if k == 0 {
        return Err(Error::domain("primorial index must be >= 1"));
    }
    let factors = first_primes(k as usize);
    let mut value = 1u64;
    for &f in &factors {
        value = value.checked_mul(f).ok_or_else(|| {
            Error::Overflow(format!("{}# exceeds 64 bits", factors[factors.len() - 1]))
        })?;
    }
    Ok(Primorial { value, factors })
}

/// The least primorial `>= n`.
pub fn smallest_primorial_at_least(n: u64) -> Result<Primorial> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let mut k = 1;
    loop {
        let p = nth_primorial(k)?;
        if p.value >= n {
            return Ok(p);
        }
        k += 1;
    }
}

/// The greatest primorial `<= n`.
pub fn largest_primorial_at_most(n: u64) -> Result<Primorial> {
    if n < 2 {
        return Err(Error::domain(format!("n must be >= 2, got {n}")));
    }
    let mut best = nth_primorial(1)?;
    let mut k = 2;
    loop {
        match nth_primorial(k) {
            Ok(p) if p.value <= n => best = p,
            _ => return Ok(best),
        }
        k += 1;
    }
}
