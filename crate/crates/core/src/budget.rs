use serde::{Deserialize, Serialize};

/// Default bound for computations that need full factor knowledge
/// (smallest-prime-factor sieves, per-cycle censuses).
pub const DEFAULT_SIEVE_BUDGET: u64 = 510_510;

/// Default bound for computations that only need primality.
pub const DEFAULT_PRIMALITY_BUDGET: u64 = 100_000_000;

/// Resource ceilings shared by every module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub sieve: u64,
    pub primality: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            sieve: DEFAULT_SIEVE_BUDGET,
            primality: DEFAULT_PRIMALITY_BUDGET,
        }
    }
}

impl Budget {
    pub fn check_sieve(&self, what: &'static str, needed: u64) -> crate::Result<()> {
        if needed > self.sieve {
            return Err(crate::Error::Budget {
                what,
                needed,
                budget: self.sieve,
            });
        }
        Ok(())
    }

    pub fn check_primality(&self, what: &'static str, needed: u64) -> crate::Result<()> {
        if needed > self.primality {
            return Err(crate::Error::Budget {
                what,
                needed,
                budget: self.primality,
            });
        }
        Ok(())
    }
}
