//! Independent reference computations and generators shared by the
//! integration tests. Nothing here calls the search code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use stableass::polymatroid::{transversal_ideal, veronese_ideal, VeroneseSpec};
use stableass::transversal::TransversalPresentation;
use stableass::{MonomialIdeal, MonomialPrime, PrimeSet};

pub fn prime(support: &[usize]) -> MonomialPrime {
    MonomialPrime::new(support.iter().copied()).unwrap()
}

fn divides(u: &[u32], z: &[u32]) -> bool {
    u.iter().zip(z).all(|(a, b)| a <= b)
}

fn member(gens: &[Vec<u32>], z: &[u32]) -> bool {
    gens.iter().any(|u| divides(u, z))
}

/// Associated primes by exhaustive colon computation over all divisors of
/// the lcm of the generators, working directly on exponent vectors.
pub fn brute_ass(ideal: &MonomialIdeal) -> PrimeSet {
    let n = ideal.nvars();
    let gens: Vec<Vec<u32>> = ideal
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect();
    let top = ideal.lcm().into_exponents();
    let mut out = BTreeSet::new();
    let mut z = vec![0u32; n];
    loop {
        if !member(&gens, &z) {
            let f: Vec<usize> = (0..n)
                .filter(|&i| {
                    z[i] += 1;
                    let inside = member(&gens, &z);
                    z[i] -= 1;
                    inside
                })
                .collect();
            // I:z is generated by u / gcd(u, z); it equals P_F iff every such
            // quotient involves a variable of F.
            let prime_colon = !f.is_empty()
                && gens
                    .iter()
                    .all(|u| f.iter().any(|&i| u[i] > z[i]));
            if prime_colon {
                out.insert(prime(&f));
            }
        }
        // Odometer step over the box [0, top].
        let mut i = 0;
        while i < n && z[i] == top[i] {
            z[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        z[i] += 1;
    }
    out
}

/// Determinant by cofactor expansion; only used on tiny matrices.
fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in &mut with {
        s.push(n - 1);
    }
    let mut without = subsets(n - 1, k);
    without.extend(with);
    without
}

/// Rank as the size of the largest non-vanishing minor.
pub fn minor_rank(rows: &[Vec<i64>]) -> usize {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    for k in (1..=m.min(n)).rev() {
        for rs in subsets(m, k) {
            for cs in subsets(n, k) {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| i128::from(rows[r][c])).collect())
                    .collect();
                if det(&sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

/// Subsets of `0..n` as primes, all of them.
pub fn all_primes(n: usize) -> Vec<MonomialPrime> {
    (1u32..1 << n)
        .map(|m| prime(&(0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>()))
        .collect()
}

pub fn arb_prime(n: usize) -> impl Strategy<Value = MonomialPrime> {
    (1u32..1 << n).prop_map(move |m| {
        prime(&(0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
    })
}

/// Small arbitrary monomial ideals: `n` in 1..=4, up to 4 generators with
/// exponents at most 2.
pub fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..=4).prop_filter_map(
            "unit ideal",
            move |rows| {
                let ideal = MonomialIdeal::from_exponents(n, rows).ok()?;
                (!ideal.is_unit()).then_some(ideal)
            },
        )
    })
}

pub fn arb_presentation(max_n: usize, max_r: usize) -> impl Strategy<Value = TransversalPresentation> {
    (1usize..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(arb_prime(n), 1..=max_r)
            .prop_map(move |fs| TransversalPresentation::new(n, fs).unwrap())
    })
}

pub fn arb_veronese_spec(max_n: usize, max_d: u32, max_cap: u32) -> impl Strategy<Value = VeroneseSpec> {
    (1usize..=max_n)
        .prop_flat_map(move |n| (Just(n), 1u32..=max_d.min(n as u32 * max_cap)))
        .prop_flat_map(move |(n, d)| {
        prop::collection::vec(0u32..=max_cap, n)
            .prop_filter_map("caps too small", move |caps| VeroneseSpec::new(d, caps).ok())
    })
}

/// Random polymatroidal ideals from either classical construction, with
/// at least two variables.
pub fn arb_polymatroidal() -> impl Strategy<Value = MonomialIdeal> {
    prop_oneof![
        arb_veronese_spec(4, 3, 3)
            .prop_filter("one variable", |s| s.nvars() >= 2)
            .prop_map(|s| veronese_ideal(&s).unwrap()),
        arb_presentation(4, 3)
            .prop_filter("one variable", |p| p.nvars() >= 2)
            .prop_map(|p| transversal_ideal(p.nvars(), p.factors()).unwrap()),
    ]
}
