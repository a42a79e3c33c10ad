use serde::Serialize;

use super::primorial::{smallest_primorial_at_least, Primorial};
use super::sieve::{primes_up_to, PrimeTable};
use crate::budget::DEFAULT_PRIMALITY_BUDGET;
use crate::{Error, Result};

/// The seed primes of a primorial, split into core (its factors) and
/// non-core (the primes above the largest factor up to its square root).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedPrimeSet {
    primorial: Primorial,
    seeds: Vec<u64>,
    core_len: usize,
    smallest_non_core: u64,
}

impl SeedPrimeSet {
    pub fn primorial(&self) -> &Primorial {
        &self.primorial
    }

    /// Every seed prime, ascending: core first, then non-core.
    pub fn seeds(&self) -> &[u64] {
        &self.seeds
    }

    pub fn core(&self) -> &[u64] {
        &self.seeds[..self.core_len]
    }

    pub fn non_core(&self) -> &[u64] {
        &self.seeds[self.core_len..]
    }

    /// Largest prime `<= sqrt(primorial)`.
    pub fn max_seed(&self) -> u64 {
        *self.seeds.last().expect("seed set is never empty")
    }

    /// The least prime above the largest core factor. For 30 this is 7,
    /// which is not itself a seed.
    pub fn smallest_non_core(&self) -> u64 {
        self.smallest_non_core
    }

    pub fn is_seed(&self, n: u64) -> bool {
        self.seeds.binary_search(&n).is_ok()
    }

    pub fn is_core(&self, n: u64) -> bool {
        self.core().binary_search(&n).is_ok()
    }
}

/// Partition the seed primes of `p`, sieving as far as its square root.
pub fn seed_prime_set(p: &Primorial) -> Result<SeedPrimeSet> {
    let root = p.value().isqrt();
    if root > DEFAULT_PRIMALITY_BUDGET {
        return Err(Error::Budget {
            what: "seed primes of primorial",
            needed: root,
            budget: DEFAULT_PRIMALITY_BUDGET,
        });
    }
    let table = primes_up_to(root.max(64))?;
    seed_prime_set_with(p, &table)
}

/// As [`seed_prime_set`], reusing an existing prime table.
pub fn seed_prime_set_with(p: &Primorial, table: &PrimeTable) -> Result<SeedPrimeSet> {
    if p.value() < 30 {
        return Err(Error::domain(format!(
            "seed prime sets are defined for primorials >= 30, got {}",
            p.value()
        )));
    }
    let root = p.value().isqrt();
    let largest_core = p.largest_factor();
    let smallest_non_core = table.next_prime_after(largest_core);
    if table.limit() < root || smallest_non_core.is_none() {
        return Err(Error::Budget {
            what: "prime table for seed primes",
            needed: root.max(largest_core + 1),
            budget: table.limit(),
        });
    }
    let seeds: Vec<u64> = table.primes_in(2, root).to_vec();
    let core_len = p.rank();
    debug_assert_eq!(&seeds[..core_len], p.factors());
    Ok(SeedPrimeSet {
        primorial: p.clone(),
        seeds,
        core_len,
        smallest_non_core: smallest_non_core.unwrap(),
    })
}

/// Largest prime `<= sqrt(E)` where `E` is the least primorial `>= n`.
pub fn max_seed_prime_for(n: u64) -> Result<u64> {
    if n < 4 {
        return Err(Error::domain(format!("n must be >= 4, got {n}")));
    }
    let e = smallest_primorial_at_least(n)?;
    let root = e.value().isqrt();
    if root > DEFAULT_PRIMALITY_BUDGET {
        return Err(Error::Budget {
            what: "maximum seed prime",
            needed: root,
            budget: DEFAULT_PRIMALITY_BUDGET,
        });
    }
    let table = primes_up_to(root.max(2))?;
    Ok(table
        .largest_prime_at_most(root)
        .expect("root >= 2 has a prime below it"))
}
