use crate::{Error, Result};

/// Resource bounds for the exhaustive parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest witness search space (divisors of `lcm(G(I))`) the oracle
    /// will enumerate for a single ideal.
    pub max_candidates: u128,
    /// Largest ambient size for which `2^n` subset sweeps are attempted.
    pub max_n: usize,
    /// Largest generator count a verification step may materialise.
    pub max_generators: u128,
}

/// Variable sets are packed into `u64` masks internally.
pub const MASK_BITS: usize = 64;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_candidates: 1 << 24,
            max_n: 20,
            max_generators: 20_000,
        }
    }
}

impl Limits {
    pub(crate) fn check_subsets(&self, n: usize) -> Result<()> {
        let bound = self.max_n.min(MASK_BITS - 1);
        if n > bound {
            return Err(Error::ResourceLimit {
                what: "subset enumeration over variables",
                size: n as u128,
                bound: bound as u128,
            });
        }
        Ok(())
    }
}

pub(crate) fn check_mask_width(n: usize) -> Result<()> {
    if n > MASK_BITS {
        return Err(Error::ResourceLimit {
            what: "variables in a variable-set mask",
            size: n as u128,
            bound: MASK_BITS as u128,
        });
    }
    Ok(())
}
