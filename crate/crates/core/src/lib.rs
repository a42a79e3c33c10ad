//! Primorial-stacked sieving, modular residue signatures, twin-prime and
//! Goldbach censuses, scaffold arithmetic, and a finite-scale claim auditor.

pub mod audit;
pub mod budget;
pub mod census;
mod error;
pub mod goldbach;
pub mod primes;
pub mod scaffold;
pub mod signatures;
pub mod tables;

pub use budget::Budget;
pub use error::{Error, Result};
