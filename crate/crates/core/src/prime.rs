use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// The monomial prime `P_F = (x_i : i ∈ F)`, stored as the sorted index set
/// `F` (0-based). Ordering is lexicographic on the sorted supports.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    support: Vec<usize>,
}

/// Sets of primes are always kept in canonical order.
pub type PrimeSet = BTreeSet<MonomialPrime>;

impl MonomialPrime {
    /// Builds `P_F` from any listing of `F`; duplicates are ignored.
    pub fn new(support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut support: Vec<usize> = support.into_iter().collect();
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(MonomialPrime { support })
    }

    /// Same as [`MonomialPrime::new`] but also checks indices against `n`.
    pub fn in_ambient(n: usize, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let p = Self::new(support)?;
        if let Some(&index) = p.support.iter().find(|&&i| i >= n) {
            return Err(Error::VariableOutOfRange { index, n });
        }
        Ok(p)
    }

    /// The graded maximal ideal `(x_1, …, x_n)`.
    pub fn maximal(n: usize) -> Result<Self> {
        Self::new(0..n)
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        debug_assert!(mask != 0);
        MonomialPrime {
            support: (0..64).filter(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub(crate) fn mask(&self) -> u64 {
        self.support.iter().fold(0, |m, &i| m | (1 << i))
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Height of the prime, i.e. `|F|`.
    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.support.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.support.iter().all(|&i| other.contains_var(i))
    }

    pub fn intersects(&self, other: &MonomialPrime) -> bool {
        self.support.iter().any(|&i| other.contains_var(i))
    }

    pub fn union(&self, other: &MonomialPrime) -> MonomialPrime {
        let mut support = self.support.clone();
        support.extend_from_slice(&other.support);
        support.sort_unstable();
        support.dedup();
        MonomialPrime { support }
    }

    /// Largest index plus one.
    pub fn min_ambient(&self) -> usize {
        self.support.last().map_or(0, |&i| i + 1)
    }

    /// Re-index through `vars`, where `vars[j]` is the index of local
    /// variable `j` in the outer ambient.
    pub fn lift(&self, vars: &[usize]) -> MonomialPrime {
        let mut support: Vec<usize> = self.support.iter().map(|&j| vars[j]).collect();
        support.sort_unstable();
        MonomialPrime { support }
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, i) in self.support.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        f.write_str(")")
    }
}

/// Iterates the non-empty subsets of `[n]` as masks, smallest first, in
/// order of increasing size.
pub(crate) fn subsets_by_size(n: usize) -> impl Iterator<Item = u64> {
    (1..=n).flat_map(move |size| {
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        // Gosper's hack over all masks with `size` bits.
        let first: u64 = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
        core::iter::successors(Some(first), move |&m| {
            let c = m & m.wrapping_neg();
            let r = m.wrapping_add(c);
            if r == 0 {
                return None;
            }
            let next = (((r ^ m) >> 2) / c) | r;
            Some(next)
        })
        .take_while(move |&m| m & !full == 0)
    })
}
