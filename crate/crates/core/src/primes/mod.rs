//! Prime generation, primorials and seed-prime sets.

mod cache;
mod primorial;
mod seeds;
mod sieve;

pub use cache::{read_cache, write_cache, CACHE_MAGIC, CACHE_VERSION};
pub use primorial::{
    largest_primorial_at_most, nth_primorial, smallest_primorial_at_least, Primorial,
};
pub use seeds::{max_seed_prime_for, seed_prime_set, seed_prime_set_with, SeedPrimeSet};
pub use sieve::{primes_up_to, PrimeTable, PARALLEL_THRESHOLD};
