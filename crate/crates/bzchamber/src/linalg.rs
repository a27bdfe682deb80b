//! Exact linear algebra over the rationals.
//!
//! Definiteness tests read leading principal minors off fraction-free Bareiss
//! elimination on a denominator-cleared integer copy, signatures come from
//! symmetric congruence reduction (Sylvester's law), and solves and inverses
//! use exact Gaussian elimination.

use crate::error::{Error, Result};
use crate::rat::Rational;
use num::{BigInt, One, Signed, Zero};

/// A square symmetric matrix of rationals. Symmetry is checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    size: usize,
    rows: Vec<Vec<Rational>>,
}

impl SymmetricMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|row| row.len() != size) {
            return Err(Error::NotSquare);
        }
        for i in 0..size {
            for j in (i + 1)..size {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self { size, rows })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let converted = rows
            .iter()
            .map(|row| row.iter().map(|&n| crate::rat::rat_int(n)).collect())
            .collect();
        Self::new(converted)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Principal submatrix on the given (distinct) indices, in the given order.
    pub fn submatrix(&self, indices: &[usize]) -> SymmetricMatrix {
        let rows = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.rows[i][j].clone()).collect())
            .collect();
        SymmetricMatrix {
            size: indices.len(),
            rows,
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.size, "vector length must match matrix size");
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Scales every entry by the least common denominator, returning an
    /// integer matrix with the same minor signs.
    fn denominator_cleared(&self) -> Vec<Vec<BigInt>> {
        let mut lcm = BigInt::one();
        for row in &self.rows {
            for entry in row {
                lcm = num::integer::lcm(lcm, entry.denom().clone());
            }
        }
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|entry| entry.numer() * (&lcm / entry.denom()))
                    .collect()
            })
            .collect()
    }

    /// Negative definiteness via the alternating-sign test on leading
    /// principal minors: (-1)^k * minor_k > 0 for k = 1..size. The empty
    /// matrix is vacuously negative definite. Minors are read off Bareiss
    /// fraction-free elimination, so the test is exact.
    pub fn is_negative_definite(&self) -> bool {
        if self.size == 0 {
            return true;
        }
        let mut a = self.denominator_cleared();
        let mut prev = BigInt::one();
        for k in 0..self.size {
            // After k elimination rounds a[k][k] is the (k+1)-st leading
            // principal minor of the integer matrix; positive scaling by the
            // common denominator preserves its sign.
            let minor = a[k][k].clone();
            let sign_ok = if (k + 1) % 2 == 1 {
                minor.is_negative()
            } else {
                minor.is_positive()
            };
            if !sign_ok {
                return false;
            }
            for i in (k + 1)..self.size {
                for j in (k + 1)..self.size {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = minor;
        }
        true
    }

    /// Exact determinant via Bareiss elimination with row pivoting.
    pub fn determinant(&self) -> Rational {
        if self.size == 0 {
            return Rational::one();
        }
        let mut lcm = BigInt::one();
        for row in &self.rows {
            for entry in row {
                lcm = num::integer::lcm(lcm, entry.denom().clone());
            }
        }
        let mut a = self.denominator_cleared();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..self.size {
            if a[k][k].is_zero() {
                match ((k + 1)..self.size).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in (k + 1)..self.size {
                for j in (k + 1)..self.size {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let signed = if negate { -prev } else { prev };
        Rational::new(signed, num::pow::pow(lcm, self.size))
    }

    /// Signature (positive, negative, zero inertia counts) by symmetric
    /// congruence reduction. Exact, so Sylvester's law applies verbatim.
    pub fn signature(&self) -> (usize, usize, usize) {
        let n = self.size;
        let mut a = self.rows.clone();
        let mut active: Vec<usize> = (0..n).collect();
        let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
        while !active.is_empty() {
            if let Some(&d) = active.iter().find(|&&i| !a[i][i].is_zero()) {
                if a[d][d].is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                let others: Vec<usize> = active.iter().copied().filter(|&i| i != d).collect();
                let pivot = a[d][d].clone();
                for &i in &others {
                    let factor = &a[i][d] / &pivot;
                    if factor.is_zero() {
                        continue;
                    }
                    for &j in &others {
                        let delta = &factor * &a[d][j];
                        a[i][j] = &a[i][j] - &delta;
                    }
                }
                active = others;
            } else if let Some((i, j)) = first_nonzero_pair(&a, &active) {
                // All active diagonal entries vanish; make one nonzero by the
                // congruence row_i += row_j, col_i += col_j. The new (i,i)
                // entry is 2*a[i][j] != 0.
                for &k in &active {
                    if k != i {
                        let sum = &a[i][k] + &a[j][k];
                        a[i][k] = sum.clone();
                        a[k][i] = sum;
                    }
                }
                a[i][i] = &a[i][j] + &a[j][i];
            } else {
                zero += active.len();
                break;
            }
        }
        (pos, neg, zero)
    }

    /// Solves self * x = rhs exactly. Errors on singular systems.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>> {
        if rhs.len() != self.size {
            return Err(Error::DimensionMismatch {
                expected: self.size,
                got: rhs.len(),
            });
        }
        let n = self.size;
        let mut a = self.rows.clone();
        let mut b = rhs.to_vec();
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&r| !a[r][k].is_zero())
                .ok_or(Error::SingularSystem)?;
            a.swap(k, pivot_row);
            b.swap(k, pivot_row);
            for i in (k + 1)..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let factor = &a[i][k] / &a[k][k];
                for j in k..n {
                    let delta = &factor * &a[k][j];
                    a[i][j] = &a[i][j] - &delta;
                }
                let delta = &factor * &b[k];
                b[i] = &b[i] - &delta;
            }
        }
        let mut x = vec![Rational::zero(); n];
        for k in (0..n).rev() {
            let mut acc = b[k].clone();
            for j in (k + 1)..n {
                acc = acc - &a[k][j] * &x[j];
            }
            x[k] = acc / &a[k][k];
        }
        Ok(x)
    }

    /// Exact inverse. Errors on singular matrices.
    pub fn inverse(&self) -> Result<SymmetricMatrix> {
        let n = self.size;
        let mut a = self.rows.clone();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&r| !a[r][k].is_zero())
                .ok_or(Error::SingularSystem)?;
            a.swap(k, pivot_row);
            inv.swap(k, pivot_row);
            let pivot = a[k][k].clone();
            for j in 0..n {
                a[k][j] = &a[k][j] / &pivot;
                inv[k][j] = &inv[k][j] / &pivot;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let factor = a[i][k].clone();
                for j in 0..n {
                    let da = &factor * &a[k][j];
                    a[i][j] = &a[i][j] - &da;
                    let di = &factor * &inv[k][j];
                    inv[i][j] = &inv[i][j] - &di;
                }
            }
        }
        // The inverse of a symmetric matrix is symmetric; exact arithmetic
        // preserves this on the nose.
        SymmetricMatrix::new(inv)
    }

    /// For a negative-definite matrix with nonnegative off-diagonal entries,
    /// every entry of the inverse is nonpositive. Returns whether that holds;
    /// errors when the preconditions fail.
    pub fn inverse_sign_property(&self) -> Result<bool> {
        if !self.is_negative_definite() {
            return Err(Error::NotABlock((0..self.size).collect()));
        }
        for i in 0..self.size {
            for j in 0..self.size {
                if i != j && self.rows[i][j].is_negative() {
                    return Err(Error::NegativeCoefficient(j));
                }
            }
        }
        let inv = self.inverse()?;
        Ok(inv
            .rows
            .iter()
            .all(|row| row.iter().all(|entry| !entry.is_positive())))
    }
}

fn first_nonzero_pair(a: &[Vec<Rational>], active: &[usize]) -> Option<(usize, usize)> {
    for (pos, &i) in active.iter().enumerate() {
        for &j in &active[(pos + 1)..] {
            if !a[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}
