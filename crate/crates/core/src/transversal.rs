//! Transversal polymatroidal ideals `I = P_{F_1} ⋯ P_{F_r}`.
//!
//! Everything is read off the intersection graph `G_I` on the factors
//! (`i ~ j` iff `F_i ∩ F_j ≠ ∅`):
//!
//! * `Ass(I)` is the set of unions `∪_{i ∈ V} F_i` over connected vertex
//!   sets `V` of `G_I`, and `Ass(I^k) = Ass(I)` for all `k`;
//! * `𝔪 ∈ Ass(I)` iff the factors cover `[n]` and `G_I` is connected, with
//!   a socle witness built from a spanning tree;
//! * `depth S/I^k = c(G_I) - 1 + n - |∪ F_i|` for every `k`;
//! * `I^k = ∩_j P_j^{k a_j}` irredundantly, where `a_j` counts the factors
//!   contained in `P_j`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::limits::check_mask_width;
use crate::polymatroid::transversal_ideal;
use crate::{Error, Limits, Monomial, MonomialIdeal, MonomialPrime, PrimeSet, Result};

/// A product of monomial primes in `n` variables, factors in the order given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransversalPresentation {
    n: usize,
    factors: Vec<MonomialPrime>,
}

impl TransversalPresentation {
    pub fn new(n: usize, factors: Vec<MonomialPrime>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_mask_width(n)?;
        if let Some(f) = factors.iter().find(|f| f.min_ambient() > n) {
            return Err(Error::VariableOutOfRange {
                index: f.min_ambient() - 1,
                n,
            });
        }
        Ok(TransversalPresentation { n, factors })
    }

    /// Builds the presentation `∏ P_{G_j}^{a_j}` from its normalized form.
    pub fn from_normalized(n: usize, parts: &[(MonomialPrime, u32)]) -> Result<Self> {
        let factors = parts
            .iter()
            .flat_map(|(g, a)| core::iter::repeat_n(g.clone(), *a as usize))
            .collect();
        Self::new(n, factors)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[MonomialPrime] {
        &self.factors
    }

    /// `∏ P_{G_j}^{a_j}` with the `G_j` distinct, sorted canonically.
    pub fn normalized(&self) -> Vec<(MonomialPrime, u32)> {
        let mut counts: BTreeMap<&MonomialPrime, u32> = BTreeMap::new();
        for f in &self.factors {
            *counts.entry(f).or_default() += 1;
        }
        counts.into_iter().map(|(g, a)| (g.clone(), a)).collect()
    }

    /// The product ideal.
    pub fn expand(&self) -> Result<MonomialIdeal> {
        transversal_ideal(self.n, &self.factors)
    }

    /// Presentation of `I^k`: every factor repeated `k` times.
    pub fn power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("power must be at least 1"));
        }
        let mut factors = Vec::with_capacity(self.factors.len() * k as usize);
        for _ in 0..k {
            factors.extend(self.factors.iter().cloned());
        }
        Ok(TransversalPresentation { n: self.n, factors })
    }

    fn cover(&self) -> u64 {
        self.factors.iter().fold(0, |m, f| m | f.mask())
    }

    pub fn intersection_graph(&self) -> IntersectionGraph {
        let r = self.factors.len();
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); r];
        for i in 0..r {
            for j in i + 1..r {
                if self.factors[i].intersects(&self.factors[j]) {
                    edges.push((i, j));
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        IntersectionGraph { adj, edges }
    }
}

/// `G_I`: vertices are factor positions (0-based), edges join intersecting
/// factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl IntersectionGraph {
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for s in 0..self.adj.len() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first spanning tree from vertex 0; `None` if disconnected.
    pub fn bfs_tree(&self) -> Option<Vec<(usize, usize)>> {
        let r = self.adj.len();
        if r == 0 {
            return Some(Vec::new());
        }
        let mut seen = vec![false; r];
        let mut tree = Vec::with_capacity(r - 1);
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    tree.push((v, w));
                    queue.push_back(w);
                }
            }
        }
        (tree.len() + 1 == r).then_some(tree)
    }
}

/// Socle witness for `𝔪 ∈ Ass(I)`: `None` unless the factors cover `[n]`
/// and `G_I` is connected. Otherwise `z = ∏ x_{l_k}` over the edges of the
/// breadth-first spanning tree, with `l_k` the smallest variable shared by
/// the two factors. `I : z = 𝔪` is checked before returning.
pub fn socle_witness(pres: &TransversalPresentation) -> Result<Option<Monomial>> {
    let n = pres.n;
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    if pres.cover() != full {
        return Ok(None);
    }
    let graph = pres.intersection_graph();
    let Some(tree) = graph.bfs_tree() else {
        return Ok(None);
    };
    let mut exps = vec![0u32; n];
    for (i, j) in tree {
        let shared = pres.factors[i].mask() & pres.factors[j].mask();
        exps[shared.trailing_zeros() as usize] += 1;
    }
    let z = Monomial::new(exps);
    let ideal = pres.expand()?;
    let m = MonomialIdeal::from_prime(n, &MonomialPrime::maximal(n)?)?;
    if ideal.contains(&z)? || ideal.colon(&z)? != m {
        return Err(Error::Internal(format!(
            "spanning-tree monomial {z} is not a socle witness"
        )));
    }
    Ok(Some(z))
}

pub fn max_in_ass_transversal(pres: &TransversalPresentation) -> Result<bool> {
    Ok(socle_witness(pres)?.is_some())
}

/// `Ass(I)`: unions of factors over connected vertex sets of `G_I`.
///
/// Grown from each factor by repeatedly adjoining a factor that meets the
/// current union; states are deduplicated by the union itself.
pub fn ass_transversal(pres: &TransversalPresentation) -> PrimeSet {
    let mut masks: Vec<u64> = pres.factors.iter().map(MonomialPrime::mask).collect();
    masks.sort_unstable();
    masks.dedup();
    let mut seen: BTreeSet<u64> = masks.iter().copied().collect();
    let mut queue: Vec<u64> = masks.clone();
    while let Some(a) = queue.pop() {
        for &f in &masks {
            if f & a != 0 {
                let b = a | f;
                if seen.insert(b) {
                    queue.push(b);
                }
            }
        }
    }
    seen.into_iter().map(MonomialPrime::from_mask).collect()
}

/// First pair `A, B ∈ ℱ` with `A ∩ B ≠ ∅` and `A ∪ B ∉ ℱ`.
pub fn closure_violation(family: &PrimeSet) -> Option<(MonomialPrime, MonomialPrime)> {
    for a in family {
        for b in family.range(a..) {
            if a.intersects(b) && !family.contains(&a.union(b)) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// `ℱ` is `{A : P_A ∈ Ass(I)}` for some transversal `I` iff it is closed
/// under unions of intersecting members.
pub fn family_realizable(family: &PrimeSet) -> bool {
    !family.is_empty() && closure_violation(family).is_none()
}

/// `∏_{A ∈ ℱ} P_A`, whose associated primes are exactly `ℱ` (checked).
pub fn realize(n: usize, family: &PrimeSet) -> Result<TransversalPresentation> {
    if family.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some((a, b)) = closure_violation(family) {
        return Err(Error::ConditionViolation { a, b });
    }
    let pres = TransversalPresentation::new(n, family.iter().cloned().collect())?;
    if ass_transversal(&pres) != *family {
        return Err(Error::Internal(
            "realized presentation has extra associated primes".into(),
        ));
    }
    Ok(pres)
}

/// `I^k = ∩ P_j^{e_j}` for a transversal ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    n: usize,
    components: Vec<(MonomialPrime, u32)>,
    verified: bool,
}

impl PrimaryDecomposition {
    pub fn components(&self) -> &[(MonomialPrime, u32)] {
        &self.components
    }

    /// Whether the intersection was checked against the power itself.
    pub fn verified(&self) -> bool {
        self.verified
    }

    /// `∩ P_j^{e_j}` computed directly.
    pub fn intersect(&self) -> Result<MonomialIdeal> {
        intersect_components(self.n, &self.components)
    }

    /// Dropping component `j` gives a strictly larger ideal, for every `j`.
    pub fn is_irredundant(&self) -> Result<bool> {
        let whole = self.intersect()?;
        for skip in 0..self.components.len() {
            let rest: Vec<_> = self
                .components
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != skip)
                .map(|(_, c)| c.clone())
                .collect();
            if intersect_components(self.n, &rest)? == whole {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn intersect_components(n: usize, parts: &[(MonomialPrime, u32)]) -> Result<MonomialIdeal> {
    parts.iter().try_fold(MonomialIdeal::unit(n), |acc, (p, e)| {
        acc.intersect_prime_power(p, *e)
    })
}

/// Irredundant primary decomposition of `I^k`: for each `P_j ∈ Ass(I)` the
/// exponent is `k · #{i : F_i ⊆ P_j}`.
///
/// The intersection is compared with `I^k` whenever `I^k` has at most
/// `limits.max_generators` generators by the binomial bound
/// `C(kr + n - 1, n - 1)`; [`PrimaryDecomposition::verified`] reports it.
pub fn primary_decomposition_power(
    pres: &TransversalPresentation,
    k: u32,
    limits: &Limits,
) -> Result<PrimaryDecomposition> {
    if k == 0 {
        return Err(Error::InvalidParameter("power must be at least 1"));
    }
    let mut components = Vec::new();
    for p in ass_transversal(pres) {
        let inside = pres.factors.iter().filter(|f| f.is_subset(&p)).count() as u32;
        let e = inside
            .checked_mul(k)
            .ok_or(Error::ExponentOverflow)?;
        components.push((p, e));
    }
    let mut dec = PrimaryDecomposition {
        n: pres.n,
        components,
        verified: false,
    };
    let degree = pres.factors.len() as u128 * u128::from(k);
    if binomial(degree + pres.n as u128 - 1, pres.n as u128 - 1) <= limits.max_generators {
        let target = pres.expand()?.power(k)?;
        if dec.intersect()? != target {
            return Err(Error::Internal(format!(
                "decomposition does not intersect to I^{k}"
            )));
        }
        dec.verified = true;
    }
    Ok(dec)
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// `depth S/I = c(G_I) - 1 + n - |∪ F_i|`.
pub fn depth_transversal(pres: &TransversalPresentation) -> usize {
    let c = pres.intersection_graph().components().len();
    c - 1 + pres.n - pres.cover().count_ones() as usize
}

/// `depth S/I^k` does not depend on `k`.
pub fn dstab_transversal(_pres: &TransversalPresentation) -> u32 {
    1
}

/// `ℓ(I) = n - depth S/I`.
pub fn spread_transversal(pres: &TransversalPresentation) -> usize {
    pres.n - depth_transversal(pres)
}

/// Recovers the unique normalized presentation of a transversal ideal.
///
/// If the generators cover `U`, the factors avoiding a variable `i ∈ U` are
/// exactly the factors of `I_{i}` (substitute `x_i = 1`), recovered
/// recursively; `P_U` takes the remaining degree. The result is re-expanded
/// and compared with `I`; any disagreement means `I` was not transversal.
pub fn recover_presentation(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<TransversalPresentation> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.nvars();
    check_mask_width(n)?;
    let support = ideal.support_mask().count_ones() as usize;
    limits.check_subsets(support)?;
    let mut memo = BTreeMap::new();
    let parts = recover_rec(ideal, 0, &mut memo)?;
    let normalized: Vec<(MonomialPrime, u32)> = parts
        .into_iter()
        .map(|(m, a)| (MonomialPrime::from_mask(m), a))
        .collect();
    let pres = TransversalPresentation::from_normalized(n, &normalized)?;
    if pres.expand()? != *ideal {
        return Err(Error::ReconstructionMismatch(
            "re-expanded presentation differs from the input",
        ));
    }
    Ok(pres)
}

type Parts = BTreeMap<u64, u32>;

fn recover_rec(
    ideal: &MonomialIdeal,
    removed: u64,
    memo: &mut BTreeMap<u64, Parts>,
) -> Result<Parts> {
    if let Some(p) = memo.get(&removed) {
        return Ok(p.clone());
    }
    let local = ideal.drop_variables(removed);
    let mut parts = Parts::new();
    if !local.is_unit() {
        let d = local
            .common_degree()
            .ok_or(Error::ReconstructionMismatch("generators differ in degree"))?;
        let cover = local.support_mask();
        let mut bits = cover;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            bits ^= b;
            for (g, a) in recover_rec(ideal, removed | b, memo)? {
                match parts.insert(g, a) {
                    Some(old) if old != a => {
                        return Err(Error::ReconstructionMismatch(
                            "localizations disagree on a factor exponent",
                        ))
                    }
                    _ => {}
                }
            }
        }
        let used: u64 = parts.values().map(|&a| u64::from(a)).sum();
        if used > d {
            return Err(Error::ReconstructionMismatch(
                "localized factors exceed the generator degree",
            ));
        }
        if used < d {
            let rest = u32::try_from(d - used).map_err(|_| Error::ExponentOverflow)?;
            parts.insert(cover, rest);
        }
    }
    memo.insert(removed, parts.clone());
    Ok(parts)
}
