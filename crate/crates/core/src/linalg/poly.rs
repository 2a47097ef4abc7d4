use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Integer polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Monic polynomial with the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Self::from_i64(&[1]), |p, &r| p.mul(&Self::from_i64(&[-r, 1])))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Synthetic division by (x − r); returns quotient and remainder.
    pub fn div_linear(&self, r: &BigInt) -> (IntPoly, BigInt) {
        if self.coeffs.is_empty() {
            return (self.clone(), BigInt::zero());
        }
        let mut q = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut acc = BigInt::zero();
        for i in (0..self.coeffs.len()).rev() {
            acc = acc * r + &self.coeffs[i];
            if i > 0 {
                q[i - 1] = acc.clone();
            }
        }
        (IntPoly::new(q), acc)
    }

    /// Distinct integer roots, ascending.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        let Some(deg) = self.degree() else { return vec![] };
        if deg == 0 {
            return vec![];
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        while p.coeffs.first().is_some_and(|c| c.is_zero()) {
            if roots.is_empty() {
                roots.push(BigInt::zero());
            }
            p = IntPoly::new(p.coeffs[1..].to_vec());
        }
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        // Cauchy bound on root magnitude.
        let lead = p.coeffs.last().unwrap().abs();
        let bound: BigInt = p.coeffs.iter().map(|c| c.abs()).max().unwrap() / &lead + 1;
        let c0 = p.coeffs[0].abs();
        let mut cands = Vec::new();
        if let Some(b) = bound.to_i64().filter(|&b| b < 1 << 20) {
            for r in 1..=b {
                if (&c0 % BigInt::from(r)).is_zero() {
                    cands.push(BigInt::from(r));
                }
            }
        } else {
            // Fall back to divisors of the constant term up to its square root.
            let mut d = BigInt::one();
            while &d * &d <= c0 {
                if (&c0 % &d).is_zero() {
                    cands.push(d.clone());
                    cands.push(&c0 / &d);
                }
                d += 1;
            }
        }
        for c in cands {
            for r in [c.clone(), -c] {
                if p.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        roots.sort();
        roots
    }

    /// Content-free primitive part with positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        let g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return self.clone();
        }
        let g = if self.coeffs.last().unwrap().is_negative() { -g } else { g };
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_and_display() {
        let p = IntPoly::from_roots(&[5, 1, -2]);
        assert_eq!(p.to_string(), "x^3 - 4x^2 - 7x + 10");
        let r: Vec<i64> = p.integer_roots().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(r, vec![-2, 1, 5]);
    }

    #[test]
    fn roots_with_zero_and_irrational() {
        // x(x-3)(x^2-5)
        let p = IntPoly::from_roots(&[0, 3]).mul(&IntPoly::from_i64(&[-5, 0, 1]));
        let r: Vec<i64> = p.integer_roots().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(r, vec![0, 3]);
    }

    #[test]
    fn synthetic_division() {
        let p = IntPoly::from_roots(&[2, -1, -1]);
        let (q, rem) = p.div_linear(&BigInt::from(2));
        assert!(rem.is_zero());
        assert_eq!(q, IntPoly::from_roots(&[-1, -1]));
        assert_eq!(IntPoly::from_i64(&[0, 1]).to_string(), "x");
        assert_eq!(IntPoly::from_i64(&[]).degree(), None);
    }
}
