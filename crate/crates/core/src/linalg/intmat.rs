use super::matrix::RatMatrix;
use super::poly::IntPoly;
use crate::error::LinalgError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries: data.iter().map(|&x| BigInt::from(x)).collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(BigInt::from(f(i, j)));
            }
        }
        IntMatrix { rows, cols, entries }
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
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

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
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
                let one = a.is_one();
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.entries[i * other.cols + j];
                    if one {
                        *slot += b;
                    } else {
                        *slot += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &IntMatrix, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<IntMatrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch("shapes differ".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    /// `self + c·I`.
    pub fn shift(&self, c: &BigInt) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m.entries[i * self.cols + i] += c;
        }
        m
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_int(self)
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(self.entries.clone(), self.rows, self.cols)
    }

    pub fn minimal_polynomial(&self) -> Result<IntPoly, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch("minimal polynomial of a non-square matrix".into()));
        }
        Ok(min_poly_int(self))
    }

    /// Characteristic polynomial det(xI − A) by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Result<IntPoly, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = IntMatrix::zeros(n, n);
        for k in 1..=n {
            m = self.mul(&m)?.shift(&coeffs[n - k + 1]);
            let t = self.mul(&m)?.trace();
            let (q, r) = (-t).div_rem(&BigInt::from(k));
            debug_assert!(r.is_zero());
            coeffs[n - k] = q;
        }
        Ok(IntPoly::new(coeffs))
    }
}

/// Rank by fraction-free elimination.
fn bareiss_rank(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else { continue };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let piv = a[r * cols + c].clone();
        for i in r + 1..rows {
            let f = a[i * cols + c].clone();
            for j in c..cols {
                let v = (&piv * &a[i * cols + j] - &f * &a[r * cols + j]) / &prev;
                a[i * cols + j] = v;
            }
        }
        prev = piv;
        r += 1;
    }
    r
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn min_poly_int(a: &IntMatrix) -> IntPoly {
    let n = a.rows;
    if n == 0 {
        return IntPoly::new(vec![BigInt::one()]);
    }
    let sym = a.is_symmetric();
    let vectorize = |m: &IntMatrix| -> Vec<BigInt> {
        if sym {
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| m.get(i, j).clone()).collect()
        } else {
            m.entries.clone()
        }
    };
    // Each basis row: (vector, coefficients in powers of A, pivot column).
    let mut basis: Vec<(Vec<BigInt>, Vec<BigInt>, usize)> = Vec::new();
    let mut power = IntMatrix::identity(n);
    for d in 0..=n {
        let mut v = vectorize(&power);
        let mut co = vec![BigInt::zero(); d + 1];
        co[d] = BigInt::one();
        for (bv, bc, p) in &basis {
            if v[*p].is_zero() {
                continue;
            }
            let g = v[*p].gcd(&bv[*p]);
            let fa = &bv[*p] / &g;
            let fb = &v[*p] / &g;
            for (x, y) in v.iter_mut().zip(bv) {
                *x = &fa * &*x - &fb * y;
            }
            for (i, x) in co.iter_mut().enumerate() {
                let y = bc.get(i).cloned().unwrap_or_default();
                *x = &fa * &*x - &fb * y;
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => {
                let lead = co[d].clone();
                let coeffs: Vec<BigInt> = co.iter().map(|c| c / &lead).collect();
                debug_assert!(co.iter().all(|c| (c % &lead).is_zero()));
                return IntPoly::new(coeffs);
            }
            Some(p) => {
                let mut g = content(&v).gcd(&content(&co));
                if v[p].is_negative() {
                    g = -g;
                }
                let v: Vec<BigInt> = v.into_iter().map(|x| x / &g).collect();
                let co: Vec<BigInt> = co.into_iter().map(|x| x / &g).collect();
                basis.push((v, co, p));
            }
        }
        power = a.mul(&power).expect("square");
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

fn require_integral_square(a: &RatMatrix) -> Result<IntMatrix, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::DimensionMismatch("matrix must be square".into()));
    }
    a.to_int().ok_or(LinalgError::NotInteger)
}

pub fn minimal_polynomial(a: &RatMatrix) -> Result<IntPoly, LinalgError> {
    require_integral_square(a)?.minimal_polynomial()
}

pub fn char_poly(a: &RatMatrix) -> Result<IntPoly, LinalgError> {
    require_integral_square(a)?.char_poly()
}

/// dim ker(A − θI).
pub fn eigenvalue_multiplicity(a: &RatMatrix, theta: i64) -> Result<usize, LinalgError> {
    let m = require_integral_square(a)?;
    Ok(m.rows - m.shift(&BigInt::from(-theta)).rank())
}

pub fn rank(a: &RatMatrix) -> usize {
    let (int, _) = a.clear_row_denominators();
    int.rank()
}
