//! Exact arithmetic: rationals, integer and rational matrices, integer polynomials.

mod intmat;
mod matrix;
mod poly;

pub use intmat::{char_poly, eigenvalue_multiplicity, minimal_polynomial, rank, IntMatrix};
pub use matrix::{solve, RatMatrix};
pub use poly::IntPoly;

use crate::error::LinalgError;
use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer square root; `None` when `x` is not a perfect square.
pub fn integer_sqrt(x: &BigInt) -> Result<Option<BigInt>, LinalgError> {
    if x.is_negative() {
        return Err(LinalgError::NegativeInput);
    }
    if x.is_zero() {
        return Ok(Some(BigInt::zero()));
    }
    let r = x.sqrt();
    Ok(if &r * &r == *x { Some(r) } else { None })
}

pub fn isqrt_i64(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    let r = (x as u64).sqrt() as i64;
    (r * r == x).then_some(r)
}

/// Floor of the square root for nonnegative `x`.
pub fn floor_sqrt(x: i64) -> i64 {
    if x <= 0 {
        0
    } else {
        (x as u64).sqrt() as i64
    }
}


#[cfg(test)]
mod props;
