//! Exact rational matrices.
//!
//! Used for linear matroid representations and Orlik-Terao arrangements.
//! Rank goes through fraction-free (Bareiss) elimination over big integers,
//! nullspace solving through exact rational reduction.  No floating point.

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::error::Error;

/// A dense rows x cols matrix of exact rationals, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    a: Vec<BigRational>,
}

/// Parses "p" or "p/q" with optional sign.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Schema(format!("cannot parse rational {s:?}"));
    let mut parts = s.trim().splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl RatMat {
    pub fn new(rows: usize, cols: usize, a: Vec<BigRational>) -> Result<RatMat, Error> {
        if a.len() != rows * cols {
            return Err(Error::LengthMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                a.len()
            )));
        }
        Ok(RatMat { rows, cols, a })
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(columns: &[Vec<BigRational>]) -> Result<RatMat, Error> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::LengthMismatch("ragged columns".into()));
        }
        let mut a = vec![BigRational::zero(); rows * cols];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                a[i * cols + j] = v.clone();
            }
        }
        Ok(RatMat { rows, cols, a })
    }

    /// Parses the column-per-element string form used in matroid JSON.
    pub fn from_string_columns(columns: &[Vec<String>]) -> Result<RatMat, Error> {
        let parsed: Result<Vec<Vec<BigRational>>, Error> = columns
            .iter()
            .map(|c| c.iter().map(|s| parse_rational(s)).collect())
            .collect();
        RatMat::from_columns(&parsed?)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.a[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_string_columns(&self) -> Vec<Vec<String>> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| format_rational(self.get(i, j))).collect())
            .collect()
    }

    pub fn column_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_zero())
    }

    /// True when columns i and j are nonzero scalar multiples of each other.
    pub fn columns_proportional(&self, i: usize, j: usize) -> bool {
        if self.column_is_zero(i) || self.column_is_zero(j) {
            return false;
        }
        // cross-multiply every pair of rows
        for r in 0..self.rows {
            for s in r + 1..self.rows {
                let lhs = self.get(r, i) * self.get(s, j);
                let rhs = self.get(s, i) * self.get(r, j);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Rank of the submatrix made of the given columns, by Bareiss
    /// fraction-free elimination with column pivoting.
    pub fn rank_of_columns(&self, cols: &[usize]) -> usize {
        let nr = self.rows;
        let nc = cols.len();
        if nr == 0 || nc == 0 {
            return 0;
        }
        // clear denominators column by column; column scaling keeps rank
        let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); nc]; nr];
        for (jj, &j) in cols.iter().enumerate() {
            let mut lcm = BigInt::one();
            for i in 0..nr {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            for (i, row) in m.iter_mut().enumerate() {
                let v = self.get(i, j);
                row[jj] = v.numer() * (&lcm / v.denom());
            }
        }
        let mut rank = 0usize;
        let mut prev = BigInt::one();
        for col in 0..nc {
            let pivot_row = (rank..nr).find(|&r| !m[r][col].is_zero());
            let Some(p) = pivot_row else { continue };
            m.swap(rank, p);
            for r in rank + 1..nr {
                for c in col + 1..nc {
                    let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                    m[r][c] = num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == nr {
                break;
            }
        }
        rank
    }

    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.cols).collect();
        self.rank_of_columns(&all)
    }

    /// Nullspace of the chosen-column submatrix when it is one dimensional.
    /// Returns the spanning vector (unnormalized) or None when the nullity
    /// is not exactly one.
    pub fn nullspace_one_dim(&self, cols: &[usize]) -> Option<Vec<BigRational>> {
        let nr = self.rows;
        let nc = cols.len();
        let mut m: Vec<Vec<BigRational>> = (0..nr)
            .map(|i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        // exact Gauss-Jordan to reduced row echelon form
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut row = 0usize;
        for col in 0..nc {
            let Some(p) = (row..nr).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for c in col..nc {
                let v = &m[row][c] * &inv;
                m[row][c] = v;
            }
            for r in 0..nr {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..nc {
                        let v = &m[r][c] - &factor * &m[row][c];
                        m[r][c] = v;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == nr {
                break;
            }
        }
        if nc - pivot_cols.len() != 1 {
            return None;
        }
        let free = (0..nc).find(|c| !pivot_cols.contains(c))?;
        let mut x = vec![BigRational::zero(); nc];
        x[free] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = -m[r][free].clone();
        }
        Some(x)
    }

    /// Contracts the linear matroid by the given column: eliminates along a
    /// pivot entry and drops the pivot row plus the column.  None when the
    /// column is zero, which is the loop case the caller turns into deletion.
    pub fn contract_column(&self, col: usize) -> Option<RatMat> {
        let pivot_row = (0..self.rows).find(|&i| !self.get(i, col).is_zero())?;
        let pv = self.get(pivot_row, col).clone();
        let mut out: Vec<BigRational> = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in 0..self.rows {
            if i == pivot_row {
                continue;
            }
            for j in 0..self.cols {
                if j == col {
                    continue;
                }
                let v = self.get(i, j) - self.get(i, col) * self.get(pivot_row, j) / &pv;
                out.push(v);
            }
        }
        Some(RatMat {
            rows: self.rows - 1,
            cols: self.cols - 1,
            a: out,
        })
    }

    pub fn drop_column(&self, col: usize) -> RatMat {
        let mut out = Vec::with_capacity(self.rows * (self.cols - 1));
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j != col {
                    out.push(self.get(i, j).clone());
                }
            }
        }
        RatMat {
            rows: self.rows,
            cols: self.cols - 1,
            a: out,
        }
    }

    /// Keeps exactly the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> RatMat {
        let mut out = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                out.push(self.get(i, j).clone());
            }
        }
        RatMat {
            rows: self.rows,
            cols: cols.len(),
            a: out,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(cols: &[&[i64]]) -> RatMat {
        let columns: Vec<Vec<BigRational>> = cols
            .iter()
            .map(|c| c.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        RatMat::from_columns(&columns).unwrap()
    }

    /// Plain rational elimination, used as a second route for rank.
    fn rank_by_rational_elimination(m: &RatMat) -> usize {
        let mut a: Vec<Vec<BigRational>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..m.rows()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..m.rows() {
                if !a[r][col].is_zero() {
                    let f = &a[r][col] / &a[rank][col];
                    for c in col..m.cols() {
                        let v = &a[r][c] - &f * &a[rank][c];
                        a[r][c] = v;
                    }
                }
            }
            rank += 1;
            if rank == m.rows() {
                break;
            }
        }
        rank
    }

    #[test]
    fn rank_of_three_plane_vectors() {
        let m = mat(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_of_columns(&[0, 2]), 2);
        assert_eq!(m.rank_of_columns(&[2]), 1);
    }

    #[test]
    fn rank_with_zero_and_proportional_columns() {
        let m = mat(&[&[0, 0], &[2, 4], &[1, 2], &[3, 0]]);
        assert!(m.column_is_zero(0));
        assert!(m.columns_proportional(1, 2));
        assert!(!m.columns_proportional(1, 3));
        assert!(!m.columns_proportional(0, 1));
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_of_columns(&[0, 1, 2]), 1);
    }

    #[test]
    fn bareiss_agrees_with_rational_elimination() {
        // deterministic congruential stream of small rationals
        let mut state: u64 = 0x9E37_79B9;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for _ in 0..200 {
            let rows = 1 + (next().unsigned_abs() as usize % 4);
            let cols = 1 + (next().unsigned_abs() as usize % 5);
            let entries: Vec<BigRational> = (0..rows * cols)
                .map(|_| {
                    let n = next();
                    let d = 1 + next().abs();
                    BigRational::new(n.into(), d.into())
                })
                .collect();
            let m = RatMat::new(rows, cols, entries).unwrap();
            assert_eq!(m.rank(), rank_by_rational_elimination(&m));
        }
    }

    #[test]
    fn nullspace_of_dependent_triple() {
        let m = mat(&[&[1, 0], &[0, 1], &[1, 1]]);
        let x = m.nullspace_one_dim(&[0, 1, 2]).unwrap();
        // check A x = 0
        for i in 0..2 {
            let mut acc = BigRational::zero();
            for (j, xv) in x.iter().enumerate() {
                acc += m.get(i, j) * xv;
            }
            assert!(acc.is_zero());
        }
        assert!(x.iter().all(|v| !v.is_zero()));
        // independent pair has trivial nullspace, full triple of rank 1 has nullity 2
        assert!(m.nullspace_one_dim(&[0, 1]).is_none());
        let flat = mat(&[&[1, 0], &[2, 0], &[3, 0]]);
        assert!(flat.nullspace_one_dim(&[0, 1, 2]).is_none());
    }

    #[test]
    fn contract_column_reduces_rank_by_one() {
        let m = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let c = m.contract_column(3).unwrap();
        assert_eq!(c.rows(), 2);
        assert_eq!(c.cols(), 3);
        assert_eq!(c.rank(), 2);
        let zero_col = mat(&[&[0, 0], &[1, 0]]);
        assert!(zero_col.contract_column(0).is_none());
    }

    #[test]
    fn rational_parsing_round_trip() {
        let r = parse_rational("-3/6").unwrap();
        assert_eq!(format_rational(&r), "-1/2");
        assert_eq!(format_rational(&parse_rational("4").unwrap()), "4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
