//! Closed forms for ideals of Veronese type `I_{d;a_1,…,a_n}`.
//!
//! Variables with `a_i = 0` do not occur in `I`; all formulas are evaluated
//! on the active variables and mapped back (depth shifts by the number of
//! inactive variables). Caps are clamped to `min(a_i, d)`, which leaves the
//! ideal unchanged.
//!
//! In the general case (`1 < d < Σa`, all active caps ≥ 1), with `s = Σa`
//! and `n'` active variables:
//!
//! * `P_A ∈ Ass(I^k)` iff `ks ≥ kd - 1 + |A|` and `Σ_{i∉A} k a_i ≤ kd - 1`;
//! * `Ass^∞(I) = V*(I)`;
//! * `P_A` first appears at `k = ⌈(|A| - 1)/(s - d)⌉`, so
//!   `astab(I) = dstab(I) = ⌈(n' - 1)/(s - d)⌉`;
//! * `depth S/I^k = max(0, kd + n' - 1 - ks)`.

use alloc::vec::Vec;

use crate::polymatroid::{veronese_ideal, VeroneseSpec};
use crate::prime::subsets_by_size;
use crate::{Error, Limits, MonomialIdeal, MonomialPrime, PrimeSet, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VeroneseCase {
    /// `d = Σa`: a single generator.
    Principal,
    /// `d = 1`: the prime on the active variables.
    Prime,
    /// `1 < d < Σa`.
    General,
}

/// A Veronese spec reduced to its active variables with clamped caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedVeronese {
    n: usize,
    d: u32,
    /// Clamped caps of the active variables.
    caps: Vec<u32>,
    /// `active[j]` is the original index of active variable `j`.
    active: Vec<usize>,
    case: VeroneseCase,
}

pub fn normalize(spec: &VeroneseSpec) -> NormalizedVeronese {
    let clamped = spec.clamped();
    let (active, caps): (Vec<usize>, Vec<u32>) = clamped
        .caps()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| (i, a))
        .unzip();
    let sum: u64 = caps.iter().map(|&a| u64::from(a)).sum();
    let d = spec.d();
    let case = if sum == u64::from(d) {
        VeroneseCase::Principal
    } else if d == 1 {
        VeroneseCase::Prime
    } else {
        VeroneseCase::General
    };
    NormalizedVeronese {
        n: spec.nvars(),
        d,
        caps,
        active,
        case,
    }
}

impl NormalizedVeronese {
    pub fn case(&self) -> VeroneseCase {
        self.case
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn active(&self) -> &[usize] {
        &self.active
    }

    pub fn active_caps(&self) -> &[u32] {
        &self.caps
    }

    /// The spec in the original ambient (zero caps restored).
    pub fn spec(&self) -> VeroneseSpec {
        let mut caps = alloc::vec![0; self.n];
        for (&i, &a) in self.active.iter().zip(&self.caps) {
            caps[i] = a;
        }
        VeroneseSpec::new(self.d, caps).expect("normalized spec is non-empty")
    }

    pub fn ideal(&self) -> Result<MonomialIdeal> {
        veronese_ideal(&self.spec())
    }

    fn cap_sum(&self) -> u64 {
        self.caps.iter().map(|&a| u64::from(a)).sum()
    }

    /// `Σa - d`, positive in the general case.
    fn excess(&self) -> u64 {
        self.cap_sum() - u64::from(self.d)
    }

    fn lift(&self, local_mask: u64) -> MonomialPrime {
        MonomialPrime::from_mask(local_mask).lift(&self.active)
    }

    fn active_prime(&self) -> MonomialPrime {
        MonomialPrime::new(self.active.iter().copied()).expect("some cap is positive")
    }

    /// Maps a prime of the original ambient to a local mask; `None` if it
    /// uses an inactive variable.
    fn localize(&self, p: &MonomialPrime) -> Option<u64> {
        p.support().iter().try_fold(0u64, |m, i| {
            self.active.binary_search(i).ok().map(|j| m | (1 << j))
        })
    }

    /// `Σ_{i ∉ A} a_i` on the active variables.
    fn outside(&self, mask: u64) -> u64 {
        self.caps
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 0)
            .map(|(_, &a)| u64::from(a))
            .sum()
    }

    fn in_ass_power(&self, mask: u64, k: u64) -> bool {
        let s = self.cap_sum();
        let d = u64::from(self.d);
        let size = u64::from(mask.count_ones());
        k * s + 1 >= k * d + size && k * self.outside(mask) < k * d
    }

    fn in_vstar(&self, mask: u64) -> bool {
        self.outside(mask) < u64::from(self.d)
    }
}

fn check_active(v: &NormalizedVeronese, limits: &Limits) -> Result<()> {
    limits.check_subsets(v.active.len())
}

/// `Ass(I^k)`.
pub fn ass_veronese(v: &NormalizedVeronese, k: u32, limits: &Limits) -> Result<PrimeSet> {
    if k == 0 {
        return Err(Error::InvalidParameter("power must be at least 1"));
    }
    Ok(match v.case {
        VeroneseCase::Principal => singletons(v),
        VeroneseCase::Prime => [v.active_prime()].into_iter().collect(),
        VeroneseCase::General => {
            check_active(v, limits)?;
            subsets_by_size(v.active.len())
                .filter(|&m| v.in_ass_power(m, u64::from(k)))
                .map(|m| v.lift(m))
                .collect()
        }
    })
}

fn singletons(v: &NormalizedVeronese) -> PrimeSet {
    v.active
        .iter()
        .map(|&i| MonomialPrime::new([i]).expect("single index"))
        .collect()
}

/// `Ass^∞(I)`; in the general case this is `V*(I)` on the active variables.
pub fn ass_infinity_veronese(v: &NormalizedVeronese, limits: &Limits) -> Result<PrimeSet> {
    Ok(match v.case {
        VeroneseCase::Principal => singletons(v),
        VeroneseCase::Prime => [v.active_prime()].into_iter().collect(),
        VeroneseCase::General => {
            check_active(v, limits)?;
            subsets_by_size(v.active.len())
                .filter(|&m| v.in_vstar(m))
                .map(|m| v.lift(m))
                .collect()
        }
    })
}

/// Smallest `k` with `P_A ∈ Ass(I^k)`.
pub fn prime_stability_index(v: &NormalizedVeronese, a: &MonomialPrime) -> Result<u32> {
    let not_stable = || Error::NotStablePrime(a.clone());
    let mask = v.localize(a).ok_or_else(not_stable)?;
    match v.case {
        VeroneseCase::Principal if a.height() == 1 => Ok(1),
        VeroneseCase::Prime if *a == v.active_prime() => Ok(1),
        VeroneseCase::General if v.in_vstar(mask) => {
            let index = div_ceil(u64::from(mask.count_ones()) - 1, v.excess()).max(1);
            u32::try_from(index).map_err(|_| Error::ExponentOverflow)
        }
        _ => Err(not_stable()),
    }
}

/// `astab(I)`, at most `n' - 1` in the general case.
pub fn astab_veronese(v: &NormalizedVeronese) -> u32 {
    match v.case {
        VeroneseCase::General => {
            let n = v.active.len() as u64;
            div_ceil(n - 1, v.excess()).max(1) as u32
        }
        _ => 1,
    }
}

/// `depth S/I^k` in the original ambient.
pub fn depth_veronese(v: &NormalizedVeronese, k: u32) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidParameter("power must be at least 1"));
    }
    let inactive = v.n - v.active.len();
    let local = match v.case {
        VeroneseCase::Principal => v.active.len() - 1,
        VeroneseCase::Prime => 0,
        VeroneseCase::General => {
            let k = u64::from(k);
            let n = v.active.len() as u64;
            let lhs = k * u64::from(v.d) + n - 1;
            lhs.saturating_sub(k * v.cap_sum()) as usize
        }
    };
    Ok(local + inactive)
}

/// `dstab(I)`: the first `k` from which `depth S/I^k` is constant.
pub fn dstab_veronese(v: &NormalizedVeronese) -> u32 {
    astab_veronese(v)
}

/// `lim depth S/I^k`.
pub fn limit_depth_veronese(v: &NormalizedVeronese) -> usize {
    let k = dstab_veronese(v);
    depth_veronese(v, k).expect("dstab is positive")
}

/// Checks that `V*(I)` is closed under moving an index `j ∈ F` to a smaller
/// `i ∉ F`, as it must be when `a_1 ≥ … ≥ a_n`.
pub fn strongly_stable_vstar_check(spec: &VeroneseSpec, limits: &Limits) -> Result<bool> {
    if spec.caps().windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::UnsortedCaps);
    }
    let vstar = veronese_ideal(spec)?.vstar(limits)?;
    Ok(is_exchange_closed(&vstar, spec.nvars()))
}

/// `F ∈ family`, `i < j`, `j ∈ F`, `i ∉ F` imply `(F \ {j}) ∪ {i} ∈ family`.
pub fn is_exchange_closed(family: &PrimeSet, n: usize) -> bool {
    family.iter().all(|f| {
        let mask = f.mask();
        (0..n).filter(|&j| mask >> j & 1 == 1).all(|j| {
            (0..j).filter(|&i| mask >> i & 1 == 0).all(|i| {
                family.contains(&MonomialPrime::from_mask(mask & !(1 << j) | 1 << i))
            })
        })
    })
}

fn div_ceil(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}
