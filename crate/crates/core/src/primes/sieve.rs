//! Odd-only sieve of Eratosthenes.
//!
//! Bit `i` of the table stands for the odd number `2i + 1`; the prime 2 is
//! implicit. Above [`PARALLEL_THRESHOLD`] the bitset is filled segment by
//! segment on the rayon pool. Each segment owns a disjoint run of words, so
//! the result does not depend on how many workers run.

use rayon::prelude::*;

use crate::{Error, Result};

/// Limits above this are sieved in parallel segments.
pub const PARALLEL_THRESHOLD: u64 = 10_000_000;

/// Words per segment: 4096 words cover 2^18 odd numbers.
const SEGMENT_WORDS: usize = 4096;

/// An immutable table of the primes up to an inclusive bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    bits: Vec<u64>,
    primes: Vec<u64>,
}

/// Sieve every prime `<= limit`.
pub fn primes_up_to(limit: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(Error::domain(format!(
            "sieve limit must be >= 2, got {limit}"
        )));
    }
    let bits = sieve_odd_bits(limit, limit > PARALLEL_THRESHOLD);
    Ok(PrimeTable::from_bits(limit, bits))
}

/// Number of odd slots `1, 3, 5, ... <= limit`.
pub(crate) fn odd_slots(limit: u64) -> u64 {
    limit.div_ceil(2)
}

fn simple_odd_sieve(limit: u64) -> Vec<u64> {
    // Base primes for the segmented pass; limit here is at most ~2^32.
    let slots = odd_slots(limit) as usize;
    let mut composite = vec![false; slots];
    if slots > 0 {
        composite[0] = true;
    }
    let mut p = 3u64;
    while p * p <= limit {
        if !composite[(p / 2) as usize] {
            let mut m = p * p;
            while m <= limit {
                composite[(m / 2) as usize] = true;
                m += 2 * p;
            }
        }
        p += 2;
    }
    (0..slots)
        .filter(|&i| !composite[i])
        .map(|i| 2 * i as u64 + 1)
        .collect()
}

fn sieve_odd_bits(limit: u64, parallel: bool) -> Vec<u64> {
    let slots = odd_slots(limit);
    let words = slots.div_ceil(64) as usize;
    let base = simple_odd_sieve(limit.isqrt());
    let mut bits = vec![0u64; words];

    let fill = |(seg, chunk): (usize, &mut [u64])| {
        let first_slot = (seg * SEGMENT_WORDS * 64) as u64;
        fill_segment(chunk, first_slot, slots, &base);
    };
    if parallel {
        bits.par_chunks_mut(SEGMENT_WORDS)
            .enumerate()
            .for_each(fill);
    } else {
        bits.chunks_mut(SEGMENT_WORDS).enumerate().for_each(fill);
    }
    bits
}

fn fill_segment(chunk: &mut [u64], first_slot: u64, total_slots: u64, base: &[u64]) {
    chunk.iter_mut().for_each(|w| *w = u64::MAX);
    let end_slot = (first_slot + chunk.len() as u64 * 64).min(total_slots);
    // Mask slots past the limit.
    let live = end_slot - first_slot;
    for bit in live..chunk.len() as u64 * 64 {
        chunk[(bit / 64) as usize] &= !(1u64 << (bit % 64));
    }
    if first_slot == 0 {
        chunk[0] &= !1; // the number 1
    }
    let lo_num = 2 * first_slot + 1;
    let hi_num = 2 * end_slot - 1;
    for &p in base {
        let sq = p * p;
        if sq > hi_num {
            break;
        }
        // First odd multiple of p that is >= max(p^2, lo_num).
        let mut start = if sq >= lo_num {
            sq
        } else {
            let m = lo_num.div_ceil(p) * p;
            if m % 2 == 0 {
                m + p
            } else {
                m
            }
        };
        while start <= hi_num {
            let rel = (start / 2) - first_slot;
            chunk[(rel / 64) as usize] &= !(1u64 << (rel % 64));
            start += 2 * p;
        }
    }
}

impl PrimeTable {
    pub(crate) fn from_bits(limit: u64, bits: Vec<u64>) -> Self {
        let mut primes = Vec::with_capacity(estimate_count(limit));
        if limit >= 2 {
            primes.push(2);
        }
        for (wi, &word) in bits.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let tz = w.trailing_zeros() as u64;
                primes.push(2 * (wi as u64 * 64 + tz) + 1);
                w &= w - 1;
            }
        }
        PrimeTable {
            limit,
            bits,
            primes,
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Raw odd-only bitset (bit `i` is the odd number `2i + 1`).
    pub fn odd_bits(&self) -> &[u64] {
        &self.bits
    }

    /// Membership test.
    ///
    /// Panics if `n` exceeds the sieve limit; use [`PrimeTable::check`] for a
    /// fallible variant.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(
            n <= self.limit,
            "{n} is beyond the prime table limit {}",
            self.limit
        );
        self.lookup(n)
    }

    pub fn check(&self, n: u64) -> Result<bool> {
        if n > self.limit {
            return Err(Error::Budget {
                what: "primality lookup",
                needed: n,
                budget: self.limit,
            });
        }
        Ok(self.lookup(n))
    }

    fn lookup(&self, n: u64) -> bool {
        if n == 2 {
            return true;
        }
        if n < 2 || n % 2 == 0 {
            return false;
        }
        let slot = n / 2;
        self.bits[(slot / 64) as usize] >> (slot % 64) & 1 == 1
    }

    /// All primes `<= limit`, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// pi(limit).
    pub fn count(&self) -> usize {
        self.primes.len()
    }

    /// pi(n) for `n <= limit`.
    pub fn count_up_to(&self, n: u64) -> usize {
        self.primes.partition_point(|&p| p <= n)
    }

    /// The primes in the closed range `[lo, hi]`.
    pub fn primes_in(&self, lo: u64, hi: u64) -> &[u64] {
        let a = self.primes.partition_point(|&p| p < lo);
        let b = self.primes.partition_point(|&p| p <= hi);
        &self.primes[a..b.max(a)]
    }

    /// Largest prime `<= n`, if any lies in the table.
    pub fn largest_prime_at_most(&self, n: u64) -> Option<u64> {
        let idx = self.primes.partition_point(|&p| p <= n);
        idx.checked_sub(1).map(|i| self.primes[i])
    }

    /// Smallest prime `> n`, if the table reaches it.
    pub fn next_prime_after(&self, n: u64) -> Option<u64> {
        let idx = self.primes.partition_point(|&p| p <= n);
        self.primes.get(idx).copied()
    }
}

fn estimate_count(limit: u64) -> usize {
    if limit < 17 {
        return 8;
    }
    let x = limit as f64;
    (1.26 * x / x.ln()) as usize
}
