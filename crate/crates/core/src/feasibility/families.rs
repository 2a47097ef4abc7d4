use super::{evaluate, AlphaData, Candidate, Infeasible};
use crate::error::FeasibilityError;
use crate::linalg::isqrt_i64;
use serde::{Deserialize, Serialize};

/// Parameters (n, k, λ, μ) of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

impl SrgParams {
    pub fn new(n: i64, k: i64, lambda: i64, mu: i64) -> Result<Self, FeasibilityError> {
        let p = SrgParams { n, k, lambda, mu };
        if n < 2 || k < 1 || k >= n - 1 || lambda < 0 || mu < 1 || k * (k - lambda - 1) != (n - k - 1) * mu {
            return Err(FeasibilityError::InvalidSrgParameters(format!("{p:?}")));
        }
        Ok(p)
    }

    /// Restricted eigenvalues (r, s), if integral.
    pub fn eigenvalues(&self) -> Option<(i64, i64)> {
        let d = self.lambda - self.mu;
        let root = isqrt_i64(d * d + 4 * (self.k - self.mu))?;
        if (d + root) % 2 != 0 {
            return None;
        }
        Some(((d + root) / 2, (d - root) / 2))
    }
}

/// Whether the cone over an srg with these parameters has three eigenvalues, θ₂ being its smallest.
pub fn cone_feasible(p: SrgParams, theta2: i64) -> Result<bool, FeasibilityError> {
    let p = SrgParams::new(p.n, p.k, p.lambda, p.mu)?;
    if p.eigenvalues().is_none() {
        return Err(FeasibilityError::InvalidSrgParameters(format!("{p:?} has irrational eigenvalues")));
    }
    Ok(theta2 * (p.k - theta2) == -p.n)
}

/// Parameters whose complement also has three eigenvalues; θ₁ = −θ₂ = 2t² + 2t − 1.
pub fn family_comp(t: i64) -> Result<Candidate, Infeasible> {
    if t < 1 {
        return Err(Infeasible::Degenerate);
    }
    let theta1 = 2 * t * t + 2 * t - 1;
    let theta0 = theta1 + 2 * theta1 * (theta1 + 1);
    let alpha = AlphaData {
        a1_sq: 2 * (2 * t.pow(4) + 6 * t.pow(3) + 5 * t * t - 1),
        a2_sq: 2 * t * t * theta1,
        a12: theta1 * (theta1 + 1),
    };
    evaluate(theta0, theta1, -theta1, alpha)
}

/// Parameters for which switching with respect to V₁ gives another three-eigenvalue graph.
pub fn family_switch(s: i64, t: i64) -> Result<Candidate, Infeasible> {
    if t < 1 {
        return Err(Infeasible::Degenerate);
    }
    family_switch_by_theta1(s, s * t)
}

/// The same family parametrised by θ₁ = st, allowing t = θ₁/s to be fractional.
pub fn family_switch_by_theta1(s: i64, theta1: i64) -> Result<Candidate, Infeasible> {
    if s < 2 || theta1 < 1 {
        return Err(Infeasible::Degenerate);
    }
    // Scale by s so that t = θ₁/s stays integral: c = s(θ₁ − t + 1).
    let c = s * (theta1 + 1) - theta1;
    let num_theta0 = s * (2 * theta1 + 1) * c;
    let num_k1 = (s * s * (theta1 + 1) + s * theta1) * c;
    let num_k2 = (s * theta1 + theta1 + 1) * c;
    if num_theta0 % s != 0 || num_k1 % s != 0 || num_k2 % s != 0 {
        return Err(Infeasible::NonIntegral("switch family"));
    }
    let theta2 = -(s - 1) * theta1 - s;
    let (theta0, k1, k2) = (num_theta0 / s, num_k1 / s, num_k2 / s);
    let t12 = theta1 * theta2;
    let (a, b) = (k1 + t12, k2 + t12);
    evaluate(theta0, theta1, theta2, AlphaData { a1_sq: a, a2_sq: b, a12: s * b })
}

/// Quantities forced when both a graph and its complement have three eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementPair {
    pub n: i64,
    pub k1: i64,
    pub k2: i64,
    pub theta0c: i64,
    pub theta1c: i64,
    pub theta2c: i64,
}

pub fn complement_pair_constraints(theta0: i64, theta1: i64, theta2: i64) -> Result<ComplementPair, Infeasible> {
    if !(theta0 > theta1 && theta1 > theta2) {
        return Err(Infeasible::Degenerate);
    }
    let den = theta0 - theta1 + theta1 * theta2 + theta2;
    if den == 0 {
        return Err(Infeasible::DivisionByZero);
    }
    let num = (theta0 - theta1) * (theta0 - theta1);
    if num % den != 0 {
        return Err(Infeasible::NonIntegral("n"));
    }
    let n = num / den;
    if n <= 0 {
        return Err(Infeasible::NonPositive("n"));
    }
    let s = n + theta1 + theta2;
    let u = s + 2 * theta1 * theta2;
    let disc = u * u - 4 * theta2 * theta2 * (theta1 + 1) * (theta1 + 1);
    let root = if disc < 0 { None } else { isqrt_i64(disc) }.ok_or(Infeasible::NonIntegral("valencies"))?;
    if (s + root) % 2 != 0 {
        return Err(Infeasible::NonIntegral("valencies"));
    }
    let (k1, k2) = ((s + root) / 2, (s - root) / 2);
    if k2 <= 0 || k1 >= n {
        return Err(Infeasible::NonPositive("valencies"));
    }
    Ok(ComplementPair { n, k1, k2, theta0c: n - 1 - theta0 + theta1 - theta2, theta1c: -1 - theta2, theta2c: -1 - theta1 })
}
