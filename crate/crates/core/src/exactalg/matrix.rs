use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

/// A dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: alloc::vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(invalid("ragged matrix rows"));
        }
        Ok(ExactMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Zero-based access.
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(invalid("matrix product dimension mismatch"));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact rank: rows are cleared of denominators, then eliminated
    /// fraction-free.
    pub fn rank(&self) -> usize {
        let rows = (0..self.rows)
            .map(|i| {
                let row = &self.entries[i * self.cols..(i + 1) * self.cols];
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        bareiss_echelon(rows, self.cols).pivots.len()
    }

    /// All entries as integers, if they are integral.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let x = self.get(i, j);
                        x.is_integer().then(|| x.to_integer())
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Result of fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Pivot column of each nonzero echelon row, increasing.
    pub pivots: Vec<usize>,
}

/// Bareiss fraction-free row reduction of an integer matrix with `cols`
/// columns; columns are scanned left to right.  All divisions are exact.
pub fn bareiss_echelon(mut m: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let (top, rest) = m.split_at_mut(r + 1);
        let piv_row = &top[r];
        let piv = &piv_row[c];
        for row in rest.iter_mut() {
            let lead = core::mem::take(&mut row[c]);
            for k in c + 1..cols {
                let v = if lead.is_zero() {
                    if row[k].is_zero() {
                        continue;
                    }
                    piv * &row[k]
                } else {
                    piv * &row[k] - &lead * &piv_row[k]
                };
                row[k] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = piv.clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { pivots }
}

/// Exact rank of an integer matrix.
pub fn integer_rank(rows: Vec<Vec<BigInt>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    bareiss_echelon(rows, cols).pivots.len()
}
