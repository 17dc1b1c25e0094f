use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::limits::check_mask_width;
use crate::prime::subsets_by_size;
use crate::{Error, Limits, Monomial, MonomialPrime, PrimeSet, Result};

/// A monomial ideal, held as its minimal generating set `G(I)`.
///
/// Generators form an antichain under divisibility and are sorted by
/// [`Monomial::graded_cmp`]. The unit ideal is the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// `I(P_F)`: the ideal obtained by setting `x_i = 1` for `i ∉ F`, living in
/// the polynomial ring on the variables of `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedIdeal {
    pub ideal: MonomialIdeal,
    /// `vars[j]` is the original index of local variable `j`.
    pub vars: Vec<usize>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary generating set.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        let n = gens.first().ok_or(Error::EmptyInput)?.nvars();
        for g in &gens {
            Error::check_dim(n, g.nvars())?;
        }
        Ok(MonomialIdeal {
            n,
            gens: minimal_antichain(gens),
        })
    }

    /// Like [`MonomialIdeal::minimalize`], with an explicit ambient size so
    /// that an empty or mismatched list is reported against `n`.
    pub fn from_generators(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            Error::check_dim(n, g.nvars())?;
        }
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(MonomialIdeal {
            n,
            gens: minimal_antichain(gens),
        })
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_exponents(n: usize, rows: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        Self::from_generators(n, rows.into_iter().map(Monomial::new))
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The prime `P_F` as an ideal of the `n`-variable ring.
    pub fn from_prime(n: usize, p: &MonomialPrime) -> Result<Self> {
        if p.min_ambient() > n {
            return Err(Error::VariableOutOfRange {
                index: p.min_ambient() - 1,
                n,
            });
        }
        Ok(MonomialIdeal {
            n,
            gens: p.support().iter().map(|&i| Monomial::var(n, i)).collect(),
        })
    }

    /// `P_F^e`: all monomials of degree `e` in the variables of `F`.
    pub fn prime_power(n: usize, p: &MonomialPrime, e: u32) -> Result<Self> {
        let base = Self::from_prime(n, p)?;
        base.power(e)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// The common degree of the generators, if there is one.
    pub fn common_degree(&self) -> Option<u64> {
        let d = self.gens[0].degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    /// Union of the generator supports as a mask.
    pub(crate) fn support_mask(&self) -> u64 {
        self.gens.iter().fold(0, |m, g| m | g.support_mask())
    }

    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        Error::check_dim(self.n, u.nvars())?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        Error::check_dim(self.n, other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.mul(v)?);
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimal_antichain(gens),
        })
    }

    /// `I^k`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I : (z)`.
    pub fn colon(&self, z: &Monomial) -> Result<Self> {
        Error::check_dim(self.n, z.nvars())?;
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimal_antichain(self.gens.iter().map(|u| u.strip(z)).collect()),
        })
    }

    /// `I ∩ J` via the lcms of generator pairs.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<Self> {
        Error::check_dim(self.n, other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimal_antichain(gens),
        })
    }

    /// `I ∩ P_F^e`, using that the minimal lcms with `P_F^e` are the
    /// products `u·w` with `w` a monomial in `F` of degree
    /// `max(0, e - deg_F(u))`.
    pub fn intersect_prime_power(&self, p: &MonomialPrime, e: u32) -> Result<Self> {
        if p.min_ambient() > self.n {
            return Err(Error::VariableOutOfRange {
                index: p.min_ambient() - 1,
                n: self.n,
            });
        }
        let mut gens = Vec::new();
        let vars = p.support();
        for u in &self.gens {
            let in_p: u64 = vars.iter().map(|&i| u64::from(u.exponents()[i])).sum();
            let missing = u64::from(e).saturating_sub(in_p) as u32;
            let mut w = vec![0u32; vars.len()];
            for_each_composition(&mut w, missing, &mut |w| {
                let mut exps = u.exponents().to_vec();
                for (slot, &i) in w.iter().zip(vars) {
                    exps[i] += slot;
                }
                gens.push(Monomial::new(exps));
            });
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimal_antichain(gens),
        })
    }

    /// Substitutes `x_i = 1` for every `i ∉ F` and views the result in the
    /// ring on the variables of `F`.
    pub fn localize(&self, f: &MonomialPrime) -> Result<LocalizedIdeal> {
        if f.min_ambient() > self.n {
            return Err(Error::VariableOutOfRange {
                index: f.min_ambient() - 1,
                n: self.n,
            });
        }
        let vars = f.support().to_vec();
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::new(vars.iter().map(|&i| g.exponents()[i]).collect()))
            .collect();
        Ok(LocalizedIdeal {
            ideal: MonomialIdeal {
                n: vars.len(),
                gens: minimal_antichain(gens),
            },
            vars,
        })
    }

    /// Same substitution as [`MonomialIdeal::localize`] but keeping the
    /// ambient: the exponents of the variables in `removed` are zeroed.
    pub(crate) fn drop_variables(&self, removed: u64) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial::new(
                    g.exponents()
                        .iter()
                        .enumerate()
                        .map(|(i, &e)| if removed >> i & 1 == 1 { 0 } else { e })
                        .collect(),
                )
            })
            .collect();
        MonomialIdeal {
            n: self.n,
            gens: minimal_antichain(gens),
        }
    }

    /// The same generators viewed in a ring with `n >= self.nvars()`
    /// variables (new variables appended).
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: n,
            });
        }
        Ok(MonomialIdeal {
            n,
            gens: self
                .gens
                .iter()
                .map(|g| {
                    let mut e = g.exponents().to_vec();
                    e.resize(n, 0);
                    Monomial::new(e)
                })
                .collect(),
        })
    }

    /// Minimal primes: the inclusion-minimal variable sets meeting every
    /// generator support (minimal transversals of the support hypergraph).
    pub fn minimal_primes(&self) -> Result<PrimeSet> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        check_mask_width(self.n)?;
        let mut edges: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        edges.sort_unstable_by_key(|e| (e.count_ones(), *e));
        edges.dedup();
        // Berge's incremental transversal construction.
        let mut covers: Vec<u64> = vec![0];
        for &edge in &edges {
            let mut next: Vec<u64> = Vec::new();
            for &t in &covers {
                if t & edge != 0 {
                    next.push(t);
                } else {
                    let mut bits = edge;
                    while bits != 0 {
                        let b = bits & bits.wrapping_neg();
                        next.push(t | b);
                        bits ^= b;
                    }
                }
            }
            next.sort_unstable_by_key(|m| (m.count_ones(), *m));
            next.dedup();
            let mut minimal: Vec<u64> = Vec::with_capacity(next.len());
            for m in next {
                if minimal.iter().all(|&kept| kept & !m != 0) {
                    minimal.push(m);
                }
            }
            covers = minimal;
        }
        Ok(covers.into_iter().map(MonomialPrime::from_mask).collect())
    }

    /// `V*(I)`: every monomial prime containing `I`.
    pub fn vstar(&self, limits: &Limits) -> Result<PrimeSet> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        limits.check_subsets(self.n)?;
        let supports: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        Ok(subsets_by_size(self.n)
            .filter(|&f| supports.iter().all(|&s| s & f != 0))
            .map(MonomialPrime::from_mask)
            .collect())
    }

    /// Whether `self` and `other` are equal as ideals in the same ring.
    pub fn same_as(&self, other: &MonomialIdeal) -> bool {
        self == other
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Sorts, deduplicates and drops every monomial divisible by another one.
fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable_by(Monomial::graded_cmp);
    gens.dedup();
    let Some(first) = gens.first() else {
        return gens;
    };
    let d = first.degree();
    if gens.iter().all(|g| g.degree() == d) {
        return gens;
    }
    // A proper divisor has strictly smaller degree, so it is already kept.
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.degree() < g.degree() && k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Calls `visit` on every `w` of length `w.len()` with `|w| = total`, in
/// lexicographically decreasing order.
pub(crate) fn for_each_composition(w: &mut [u32], total: u32, visit: &mut impl FnMut(&[u32])) {
    fn rec(w: &mut [u32], pos: usize, left: u32, visit: &mut impl FnMut(&[u32])) {
        if pos + 1 == w.len() {
            w[pos] = left;
            visit(w);
            return;
        }
        for e in (0..=left).rev() {
            w[pos] = e;
            rec(w, pos + 1, left - e, visit);
        }
    }
    if w.is_empty() {
        if total == 0 {
            visit(w);
        }
        return;
    }
    rec(w, 0, total, visit);
}
