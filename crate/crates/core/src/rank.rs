//! Exact rank over the rationals by fraction-free (Bareiss) elimination.
//!
//! Elimination first runs in `i128` with checked arithmetic and restarts with
//! arbitrary-precision integers if any intermediate minor overflows.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of the integer matrix given by `rows`. Rows may have different
/// lengths only if all are empty; an empty matrix has rank 0.
pub fn exact_rank<R: AsRef<[i64]>>(rows: &[R]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.as_ref().iter().map(|&x| i128::from(x)).collect())
        .collect();
    if let Some(rank) = bareiss_i128(small) {
        return rank;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_big(big)
}

/// Rank of a matrix of exponents.
pub fn exponent_rank<R: AsRef<[u32]>>(rows: &[R]) -> usize {
    let rows: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.as_ref().iter().map(|&x| i64::from(x)).collect())
        .collect();
    exact_rank(&rows)
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col];
        for row in bottom {
            let lead = row[col];
            for (x, &y) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                let t = pivot.checked_mul(*x)?.checked_sub(lead.checked_mul(y)?)?;
                *x = t / prev;
            }
            row[col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in bottom {
            let lead = core::mem::take(&mut row[col]);
            for (x, y) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                let t = &pivot * &*x - &lead * y;
                *x = t / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
