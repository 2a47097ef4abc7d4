use super::intmat::IntMatrix;
use super::Rat;
use crate::error::LinalgError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Result<Self, LinalgError> {
        Ok(IntMatrix::from_i64(rows, cols, data)?.to_rat())
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RatMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|x| Rat::from_integer(x.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).to_integer());
            }
        }
        Some(m)
    }

    /// Scales each row by the lcm of its denominators. Returns the integer matrix and the row factors.
    pub fn clear_row_denominators(&self) -> (IntMatrix, Vec<BigInt>) {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        let mut factors = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let l = (0..self.cols).fold(BigInt::one(), |l, j| l.lcm(self.get(i, j).denom()));
            for j in 0..self.cols {
                let x = self.get(i, j);
                m.set(i, j, x.numer() * (&l / x.denom()));
            }
            factors.push(l);
        }
        (m, factors)
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
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
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch("shapes differ".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Solves `M·X = rhs` exactly with fraction-free Gauss–Jordan elimination.
pub fn solve(m: &RatMatrix, rhs: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    if !m.is_square() || rhs.rows != m.rows {
        return Err(LinalgError::DimensionMismatch("solve needs square M and matching rhs".into()));
    }
    let n = m.rows;
    let w = n + rhs.cols;
    let mut aug = RatMatrix::zeros(n, w);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        for j in 0..rhs.cols {
            aug.set(i, n + j, rhs.get(i, j).clone());
        }
    }
    let (int, _) = aug.clear_row_denominators();
    let mut a: Vec<BigInt> = int.entries().to_vec();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i * w + k].is_zero()).ok_or(LinalgError::SingularMatrix)?;
        if p != k {
            for j in 0..w {
                a.swap(p * w + j, k * w + j);
            }
        }
        let piv = a[k * w + k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = a[i * w + k].clone();
            for j in 0..w {
                if j == k {
                    continue;
                }
                a[i * w + j] = (&piv * &a[i * w + j] - &f * &a[k * w + j]) / &prev;
            }
            a[i * w + k] = BigInt::zero();
        }
        prev = piv;
    }
    // Every diagonal entry now equals the final pivot (up to the row-scaled determinant).
    let mut out = RatMatrix::zeros(n, rhs.cols);
    for i in 0..n {
        let d = &a[i * w + i];
        for j in 0..rhs.cols {
            out.set(i, j, Rat::new(a[i * w + n + j].clone(), d.clone()));
        }
    }
    Ok(out)
}
