//! The stable set `Ass^∞(I)` of a polymatroidal ideal from its exponent
//! matrix, and the analytic spread / limit depth that come with it.
//!
//! For `F ⊆ [n]`, restrict the rows of the exponent matrix to the columns in
//! `F` and keep the rows whose restriction is componentwise minimal. Then
//! `P_F ∈ Ass^∞(I)` exactly when those rows have rank `|F|` on the columns
//! of `F`. This is the full-rank test for the localisation `I(P_F)`, which
//! is again polymatroidal, and whose generators are the minimal restricted
//! rows.

use alloc::vec::Vec;

use crate::prime::subsets_by_size;
use crate::rank::exponent_rank;
use crate::{polymatroid, Error, Limits, MonomialIdeal, MonomialPrime, PrimeSet, Result};

/// Rows `u_1, …, u_m` of `G(I)` as an `m × n` integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl ExponentMatrix {
    pub fn new(n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        for r in &rows {
            Error::check_dim(n, r.len())?;
        }
        Ok(ExponentMatrix { n, rows })
    }

    pub fn of_ideal(ideal: &MonomialIdeal) -> Self {
        ExponentMatrix {
            n: ideal.nvars(),
            rows: ideal
                .generators()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Indices of rows whose restriction to `F` is minimal under
    /// componentwise order. Rows with equal restrictions are all kept.
    pub fn minimal_rows(&self, f: &MonomialPrime) -> Result<Vec<usize>> {
        if f.min_ambient() > self.n {
            return Err(Error::VariableOutOfRange {
                index: f.min_ambient() - 1,
                n: self.n,
            });
        }
        Ok(self.minimal_rows_on(f.support()))
    }

    fn minimal_rows_on(&self, cols: &[usize]) -> Vec<usize> {
        let below = |a: &[u32], b: &[u32]| {
            // a < b on cols
            let mut strict = false;
            for &c in cols {
                if a[c] > b[c] {
                    return false;
                }
                strict |= a[c] < b[c];
            }
            strict
        };
        (0..self.rows.len())
            .filter(|&i| !self.rows.iter().any(|r| below(r, &self.rows[i])))
            .collect()
    }

    /// Rank of the minimal rows restricted to the columns of `F`.
    pub fn localized_rank(&self, f: &MonomialPrime) -> Result<usize> {
        let rows = self.minimal_rows(f)?;
        Ok(self.rank_on(&rows, f.support()))
    }

    fn rank_on(&self, rows: &[usize], cols: &[usize]) -> usize {
        let mut sub: Vec<Vec<u32>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&c| self.rows[i][c]).collect())
            .collect();
        // Duplicate rows do not change the rank.
        sub.sort_unstable();
        sub.dedup();
        exponent_rank(&sub)
    }

    /// Rank of the whole matrix.
    pub fn rank(&self) -> usize {
        exponent_rank(&self.rows)
    }
}

/// `Ass^∞(I)` for a polymatroidal ideal `I`.
pub fn ass_infinity(ideal: &MonomialIdeal, limits: &Limits) -> Result<PrimeSet> {
    require_polymatroidal(ideal)?;
    ass_infinity_unchecked(ideal, limits)
}

/// The rank test without the polymatroid check; the answer is only
/// meaningful for polymatroidal input.
pub(crate) fn ass_infinity_unchecked(ideal: &MonomialIdeal, limits: &Limits) -> Result<PrimeSet> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.nvars();
    limits.check_subsets(n)?;
    let matrix = ExponentMatrix::of_ideal(ideal);
    let mut out = PrimeSet::new();
    let mut cols = Vec::with_capacity(n);
    for mask in subsets_by_size(n) {
        cols.clear();
        cols.extend((0..n).filter(|i| mask >> i & 1 == 1));
        let rows = matrix.minimal_rows_on(&cols);
        if matrix.rank_on(&rows, &cols) == cols.len() {
            out.insert(MonomialPrime::from_mask(mask));
        }
    }
    Ok(out)
}

/// `ℓ(I)`, the rank of the exponent matrix of an equigenerated ideal.
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    require_polymatroidal(ideal)?;
    Ok(ExponentMatrix::of_ideal(ideal).rank())
}

/// `lim depth S/I^k = n - ℓ(I)`, valid because polymatroidal ideals have
/// normal (hence Cohen–Macaulay) Rees rings.
pub fn limit_depth(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.nvars() - analytic_spread(ideal)?)
}

fn require_polymatroidal(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !polymatroid::is_polymatroidal(ideal) {
        return Err(Error::NotPolymatroidal);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymatroid::{transversal_ideal, veronese_ideal, VeroneseSpec};
    use alloc::vec;

    fn prime(s: &[usize]) -> MonomialPrime {
        MonomialPrime::new(s.iter().copied()).unwrap()
    }

    #[test]
    fn minimal_rows_examples() {
        let a = ExponentMatrix::new(3, vec![vec![1, 1, 0], vec![1, 0, 1]]).unwrap();
        assert_eq!(a.minimal_rows(&prime(&[0])).unwrap(), [0, 1]);
        assert_eq!(a.minimal_rows(&prime(&[1, 2])).unwrap(), [0, 1]);
        let v = veronese_ideal(&VeroneseSpec::new(2, vec![1, 1, 1]).unwrap()).unwrap();
        let m = ExponentMatrix::of_ideal(&v);
        let kept: Vec<Vec<u32>> = m
            .minimal_rows(&prime(&[0, 1]))
            .unwrap()
            .into_iter()
            .map(|i| m.rows()[i].clone())
            .collect();
        assert_eq!(kept.len(), 2);
        assert!(kept.contains(&vec![1, 0, 1]));
        assert!(kept.contains(&vec![0, 1, 1]));
        assert!(a.minimal_rows(&prime(&[3])).is_err());
    }

    #[test]
    fn ass_infinity_examples() {
        let l = Limits::default();
        let i = MonomialIdeal::from_exponents(3, [vec![1, 1, 0], vec![1, 0, 1]]).unwrap();
        let expected: PrimeSet = [prime(&[0]), prime(&[1, 2])].into_iter().collect();
        assert_eq!(ass_infinity(&i, &l).unwrap(), expected);

        let v = veronese_ideal(&VeroneseSpec::new(2, vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(ass_infinity(&v, &l).unwrap(), v.vstar(&l).unwrap());

        let bad = MonomialIdeal::from_exponents(2, [vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(ass_infinity(&bad, &l), Err(Error::NotPolymatroidal));
    }

    #[test]
    fn spread_examples() {
        let t = transversal_ideal(
            5,
            &[prime(&[0, 1]), prime(&[0, 1, 2, 3]), prime(&[2, 4]), prime(&[3, 4])],
        )
        .unwrap();
        assert_eq!(analytic_spread(&t).unwrap(), 5);
        assert_eq!(limit_depth(&t).unwrap(), 0);
        let p = MonomialIdeal::from_exponents(3, [vec![1, 2, 0]]).unwrap();
        assert_eq!(analytic_spread(&p).unwrap(), 1);
        assert_eq!(limit_depth(&p).unwrap(), 2);
        let v = veronese_ideal(&VeroneseSpec::new(3, vec![2, 2, 1]).unwrap()).unwrap();
        assert_eq!(analytic_spread(&v).unwrap(), 3);
        assert_eq!(limit_depth(&v).unwrap(), 0);
    }
}
