//! Ground-truth associated primes by exhaustive colon-witness search.
//!
//! `P_F ∈ Ass(I)` iff `I : z = P_F` for some monomial `z ∉ I`, and such a
//! witness can always be taken to divide `lcm(G(I))`. The search walks
//! those divisors in graded order (degree first, then lexicographically
//! decreasing exponents) and keeps the first witness found for each prime.
//!
//! Only monomial arithmetic is involved, so every answer is independent of
//! the coefficient field.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::limits::check_mask_width;
use crate::{polymatroid, stable, Error, Limits, Monomial, MonomialIdeal, MonomialPrime};
use crate::{PrimeSet, Result};

/// Primes of `Ass(I)` with one witness each.
pub type AssWitnesses = BTreeMap<MonomialPrime, Monomial>;

/// Number of divisors of `lcm(G(I))`.
pub fn witness_space(ideal: &MonomialIdeal) -> u128 {
    ideal
        .lcm()
        .exponents()
        .iter()
        .fold(1u128, |acc, &e| acc.saturating_mul(u128::from(e) + 1))
}

fn check_search(ideal: &MonomialIdeal, limits: &Limits) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    check_mask_width(ideal.nvars())?;
    let size = witness_space(ideal);
    if size > limits.max_candidates {
        return Err(Error::ResourceLimit {
            what: "witness candidates",
            size,
            bound: limits.max_candidates,
        });
    }
    Ok(())
}

/// Visits every `(P, z)` with `I : z = P` prime, `z | lcm(G(I))`, in
/// candidate order. Stops early if `visit` breaks.
fn search(
    ideal: &MonomialIdeal,
    limits: &Limits,
    mut visit: impl FnMut(u64, &[u32]) -> ControlFlow<()>,
) -> Result<()> {
    check_search(ideal, limits)?;
    let n = ideal.nvars();
    let caps = ideal.lcm().into_exponents();
    let gens: Vec<&[u32]> = ideal.generators().iter().map(|g| g.exponents()).collect();
    let total: u32 = caps.iter().sum();
    let mut deficit = vec![0u64; gens.len()];
    let mut z = vec![0u32; n];
    for degree in 0..=total {
        let flow = for_each_capped(&mut z, &caps, degree, &mut |z| {
            // deficit(u) = {i : u_i > z_i}; z ∈ I iff some deficit is empty,
            // x_i z ∈ I iff some deficit is exactly {i} with u_i = z_i + 1.
            let mut f = 0u64;
            for (d, u) in deficit.iter_mut().zip(&gens) {
                let mut mask = 0u64;
                for i in 0..n {
                    if u[i] > z[i] {
                        mask |= 1 << i;
                    }
                }
                if mask == 0 {
                    return ControlFlow::Continue(());
                }
                if mask & (mask - 1) == 0 {
                    let i = mask.trailing_zeros() as usize;
                    if u[i] == z[i] + 1 {
                        f |= mask;
                    }
                }
                *d = mask;
            }
            // I : z ⊆ P_F iff every u / gcd(u, z) involves a variable of F.
            if f != 0 && deficit.iter().all(|&d| d & f != 0) {
                visit(f, z)
            } else {
                ControlFlow::Continue(())
            }
        });
        if flow.is_break() {
            break;
        }
    }
    Ok(())
}

/// Enumerates `z` with `z_i <= caps_i`, `|z| = total`, lexicographically
/// decreasing.
fn for_each_capped(
    z: &mut [u32],
    caps: &[u32],
    total: u32,
    visit: &mut impl FnMut(&[u32]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    // suffix[i] = sum of caps[i..]
    let mut suffix = vec![0u32; caps.len() + 1];
    for i in (0..caps.len()).rev() {
        suffix[i] = suffix[i + 1] + caps[i];
    }
    fn rec(
        z: &mut [u32],
        caps: &[u32],
        suffix: &[u32],
        pos: usize,
        left: u32,
        visit: &mut impl FnMut(&[u32]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if pos == z.len() {
            return if left == 0 {
                visit(z)
            } else {
                ControlFlow::Continue(())
            };
        }
        let hi = caps[pos].min(left);
        let lo = left.saturating_sub(suffix[pos + 1]);
        for e in (lo..=hi).rev() {
            z[pos] = e;
            rec(z, caps, suffix, pos + 1, left - e, visit)?;
        }
        ControlFlow::Continue(())
    }
    if total > suffix[0] {
        return ControlFlow::Continue(());
    }
    rec(z, caps, &suffix, 0, total, visit)
}

/// `Ass(I)` with the first witness of each prime.
pub fn ass(ideal: &MonomialIdeal, limits: &Limits) -> Result<AssWitnesses> {
    let mut found = AssWitnesses::new();
    search(ideal, limits, |f, z| {
        found
            .entry(MonomialPrime::from_mask(f))
            .or_insert_with(|| Monomial::new(z.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(found)
}

/// Just the primes of [`ass`].
pub fn ass_primes(ideal: &MonomialIdeal, limits: &Limits) -> Result<PrimeSet> {
    Ok(ass(ideal, limits)?.into_keys().collect())
}

/// A socle witness `z` with `I : z = (x_1, …, x_n)`, if the maximal ideal is
/// associated (equivalently `depth S/I = 0`).
pub fn socle_witness(ideal: &MonomialIdeal, limits: &Limits) -> Result<Option<Monomial>> {
    let n = ideal.nvars();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut witness = None;
    search(ideal, limits, |f, z| {
        if f == full {
            witness = Some(Monomial::new(z.to_vec()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(witness)
}

pub fn max_in_ass(ideal: &MonomialIdeal, limits: &Limits) -> Result<bool> {
    Ok(socle_witness(ideal, limits)?.is_some())
}

/// Independent re-check of a witness: `z ∉ I` and `I : z = P`.
pub fn check_witness(ideal: &MonomialIdeal, prime: &MonomialPrime, z: &Monomial) -> bool {
    let Ok(inside) = ideal.contains(z) else {
        return false;
    };
    if inside {
        return false;
    }
    match (ideal.colon(z), MonomialIdeal::from_prime(ideal.nvars(), prime)) {
        (Ok(c), Ok(p)) => c == p,
        _ => false,
    }
}

/// `Ass(I^k)` for a range of powers, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssReport {
    per_power: Vec<(u32, PrimeSet)>,
    stabilized_at: Option<u32>,
    certified: bool,
    witnesses: BTreeMap<(u32, MonomialPrime), Monomial>,
}

impl AssReport {
    pub fn per_power(&self) -> &[(u32, PrimeSet)] {
        &self.per_power
    }

    pub fn primes_at(&self, k: u32) -> Option<&PrimeSet> {
        self.per_power.iter().find(|(j, _)| *j == k).map(|(_, s)| s)
    }

    pub fn stabilized_at(&self) -> Option<u32> {
        self.stabilized_at
    }

    pub fn certified(&self) -> bool {
        self.certified
    }

    pub fn witnesses(&self) -> &BTreeMap<(u32, MonomialPrime), Monomial> {
        &self.witnesses
    }

    pub fn last_k(&self) -> u32 {
        self.per_power.last().map_or(0, |(k, _)| *k)
    }

    /// Appends `Ass(I^k)`, re-checking every witness against `power`.
    fn push(&mut self, k: u32, power: &MonomialIdeal, found: AssWitnesses) -> Result<()> {
        for (p, z) in &found {
            if !check_witness(power, p, z) {
                return Err(Error::Internal(format!(
                    "witness {z} does not realise {p} for power {k}"
                )));
            }
        }
        let primes = found.keys().cloned().collect();
        self.witnesses
            .extend(found.into_iter().map(|(p, z)| ((k, p), z)));
        self.per_power.push((k, primes));
        Ok(())
    }
}

/// An [`ass_powers`] run that hit an error part-way; `report` holds the
/// powers completed before the failing one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialReport {
    pub report: AssReport,
    pub failed_at: u32,
    pub error: Error,
}

impl fmt::Display for PartialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "power {}: {}", self.failed_at, self.error)
    }
}

impl core::error::Error for PartialReport {}

/// `Ass(I^k)` for `k = 1..=k_max`. No stabilisation is claimed.
pub fn ass_powers(
    ideal: &MonomialIdeal,
    k_max: u32,
    limits: &Limits,
) -> core::result::Result<AssReport, Box<PartialReport>> {
    let mut report = AssReport {
        per_power: Vec::new(),
        stabilized_at: None,
        certified: false,
        witnesses: BTreeMap::new(),
    };
    let fail = |report: AssReport, k, error| {
        Box::new(PartialReport {
            report,
            failed_at: k,
            error,
        })
    };
    if k_max == 0 {
        return Err(fail(report, 0, Error::InvalidParameter("k_max must be at least 1")));
    }
    let mut power = MonomialIdeal::unit(ideal.nvars());
    for k in 1..=k_max {
        let step = power
            .product(ideal)
            .and_then(|p| ass(&p, limits).map(|a| (p, a)));
        let (p, found) = match step {
            Ok(v) => v,
            Err(e) => return Err(fail(report, k, e)),
        };
        if let Err(e) = report.push(k, &p, found) {
            return Err(fail(report, k, e));
        }
        power = p;
    }
    Ok(report)
}

/// The index of stability `astab(I)` of a polymatroidal ideal, certified.
///
/// Polymatroidal ideals have the persistence property, so the chain
/// `Ass(I^k)` only grows and its limit is the rank-computed `Ass^∞(I)`;
/// the first `k` reaching it is `astab(I)`.
pub fn astab_certified(ideal: &MonomialIdeal, limits: &Limits) -> Result<(u32, AssReport)> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !polymatroid::is_polymatroidal(ideal) {
        return Err(Error::NotPolymatroidal);
    }
    let target = stable::ass_infinity_unchecked(ideal, limits)?;
    let mut report = AssReport {
        per_power: Vec::new(),
        stabilized_at: None,
        certified: false,
        witnesses: BTreeMap::new(),
    };
    let mut power = MonomialIdeal::unit(ideal.nvars());
    let mut previous = PrimeSet::new();
    for k in 1u32.. {
        power = power.product(ideal)?;
        let found = ass(&power, limits)?;
        let primes: PrimeSet = found.keys().cloned().collect();
        if !primes.is_subset(&target) {
            return Err(Error::Internal(format!(
                "Ass(I^{k}) is not contained in the stable set"
            )));
        }
        if !previous.is_subset(&primes) {
            return Err(Error::Internal(format!(
                "persistence fails between powers {} and {k}",
                k - 1
            )));
        }
        report.push(k, &power, found)?;
        if primes == target {
            report.stabilized_at = Some(k);
            report.certified = true;
            return Ok((k, report));
        }
        previous = primes;
    }
    unreachable!("power loop is unbounded")
}
