//! Feasible valency-arrays and spectra of biregular graphs with three eigenvalues.

mod bounds;
mod families;
mod table;

pub use bounds::{bell_rowlinson_ok, lemma37_ok, BoundSet};
pub use families::{
    complement_pair_constraints, cone_feasible, family_comp, family_switch, family_switch_by_theta1, ComplementPair,
    SrgParams,
};
pub use table::{format_table, golden_rows, golden_text, parse_table_rows, Existence, TableRow, TABLE_HEADER};

use crate::error::{CertifyError, FeasibilityError};
use crate::graph::QuotientMatrix;
use crate::linalg::{Rat, RatMatrix};
use crate::spectral::{predict_complement_spectrum, predict_switch_spectrum, PredictedEigenvalue, Spectrum3};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// α₁², α₂² and α₁α₂ for the two valency classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphaData {
    pub a1_sq: i64,
    pub a2_sq: i64,
    pub a12: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Candidate {
    pub n: i64,
    pub n1: i64,
    pub n2: i64,
    pub k1: i64,
    pub k2: i64,
    pub theta0: i64,
    pub theta1: i64,
    pub theta2: i64,
    pub m1: i64,
    pub m2: i64,
    pub alpha: AlphaData,
    /// [[k₁₁, k₁₂], [k₂₁, k₂₂]]
    pub q: [[i64; 2]; 2],
    /// The eigenvalue of Q other than θ₀.
    pub theta: i64,
}

impl Candidate {
    pub fn spectrum(&self) -> Spectrum3 {
        Spectrum3::integral(self.theta0, self.theta1, self.theta2, self.m1 as usize, self.m2 as usize)
    }

    pub fn valency_array(&self) -> String {
        format!("({},{};{},{})", self.n1, self.n2, self.k1, self.k2)
    }

    pub fn is_cone(&self) -> bool {
        self.n1 == 1
    }

    pub fn k12(&self) -> i64 {
        self.q[0][1]
    }

    pub fn quotient_matrix(&self) -> QuotientMatrix {
        let b = RatMatrix::from_i64(2, 2, &[self.q[0][0], self.q[0][1], self.q[1][0], self.q[1][1]]).expect("2×2");
        QuotientMatrix { b, cell_sizes: vec![self.n1 as usize, self.n2 as usize] }
    }

    /// Spectrum of the complement of any graph with these parameters.
    pub fn predicted_complement_spectrum(&self) -> Result<Vec<PredictedEigenvalue>, CertifyError> {
        let trace_a2 = self.n1 * self.k1 + self.n2 * self.k2;
        predict_complement_spectrum(&self.spectrum(), &self.quotient_matrix(), trace_a2, self.n as usize)
    }

    /// Spectrum after switching with respect to V₁.
    pub fn predicted_switch_spectrum(&self) -> Result<Vec<PredictedEigenvalue>, CertifyError> {
        predict_switch_spectrum(&self.spectrum(), &self.quotient_matrix(), self.n1 as usize, self.n2 as usize)
    }

    /// Sort key: (n, θ₀, θ₁, k₁).
    pub fn key(&self) -> (i64, i64, i64, i64, i64, i64) {
        (self.n, self.theta0, self.theta1, self.k1, self.theta2, self.k2)
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {} {}", self.n, self.valency_array(), self.spectrum())
    }
}

/// The first violated condition for a parameter set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Infeasible {
    Degenerate,
    AlphaProduct,
    DivisionByZero,
    NonIntegral(&'static str),
    NonPositive(&'static str),
    NegativeEntry,
    QuotientNotRealizable,
    QuotientEigenvalues,
    TraceIdentity,
    EdgeIdentity,
    NotEquitable,
    ConeShape,
    PrimeOrder,
    K21IsOne,
    AlphaInequality,
    Lemma37,
    VertexBound,
    LargestEigenvalueBound,
    ValencyBound,
}

/// Filters applied on top of the feasibility conditions; all on by default.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Filters {
    /// Drop θ₁ = 0 (complete bipartite graphs).
    pub drop_bipartite: bool,
    /// For θ₁ = 1 keep only the two graphs that exist (11 and 14 vertices).
    pub theta1_one: bool,
    /// Drop rows where a multiplicity violates n ≤ t(t+1)/2 with t = n − m.
    pub bell_rowlinson: bool,
}

impl Default for Filters {
    fn default() -> Self {
        Filters { drop_bipartite: true, theta1_one: true, bell_rowlinson: true }
    }
}

impl Filters {
    pub fn none() -> Self {
        Filters { drop_bipartite: false, theta1_one: false, bell_rowlinson: false }
    }

    pub fn admits(&self, c: &Candidate) -> bool {
        if self.drop_bipartite && c.theta1 == 0 {
            return false;
        }
        if self.theta1_one && c.theta1 == 1 && !matches!((c.n, c.theta0), (11, 5) | (14, 8)) {
            return false;
        }
        if self.bell_rowlinson && c.theta1 != 0 && !(bell_rowlinson_ok(c.n, c.m1) && bell_rowlinson_ok(c.n, c.m2)) {
            return false;
        }
        true
    }
}

fn exact_div(num: i64, den: i64, what: &'static str) -> Result<i64, Infeasible> {
    if den == 0 {
        return Err(Infeasible::DivisionByZero);
    }
    if num % den != 0 {
        return Err(Infeasible::NonIntegral(what));
    }
    Ok(num / den)
}

/// Radical-free evaluation of the quotient entries [[k₁₁, k₁₂], [k₂₁, k₂₂]].
pub fn derive_quotient(theta0: i64, alpha: AlphaData, k1: i64, k2: i64) -> Result<[[i64; 2]; 2], Infeasible> {
    let AlphaData { a1_sq: a, a2_sq: b, a12: p } = alpha;
    if a <= b {
        return Err(Infeasible::Degenerate);
    }
    // Multiply numerator and denominator of each entry by α₁ + α₂.
    let d = a - b;
    let k11 = exact_div(a * theta0 + p * theta0 - p * k1 - b * k1, d, "k11")?;
    let k12 = exact_div((k1 - theta0) * (a + p), d, "k12")?;
    let k21 = exact_div((theta0 - k2) * (p + b), d, "k21")?;
    let k22 = exact_div(a * k2 + p * k2 - p * theta0 - b * theta0, d, "k22")?;
    if [k11, k12, k21, k22].iter().any(|&x| x < 0) {
        return Err(Infeasible::NegativeEntry);
    }
    Ok([[k11, k12], [k21, k22]])
}

/// n, n₁, n₂ from the spectrum and α data, as exact rationals.
pub fn compute_n_n1_n2(theta0: i64, theta1: i64, theta2: i64, alpha: AlphaData) -> Result<(Rat, Rat, Rat), FeasibilityError> {
    let AlphaData { a1_sq: a, a2_sq: b, a12: p } = alpha;
    let t12 = theta1 * theta2;
    let spread = (theta0 - theta1) * (theta0 - theta2);
    let base = theta0 + t12 + p;
    if base == 0 || p == 0 || a == p || p == b {
        return Err(FeasibilityError::OutOfScope("division by zero".into()));
    }
    let r = |num: i64, den: i64| Rat::new(BigInt::from(num), BigInt::from(den));
    let n = r((a + p + b - theta0 - t12) * spread, base * p);
    // (α₁ − α₂)α₁ = α₁² − α₁α₂ and (α₁ − α₂)α₂ = α₁α₂ − α₂².
    let n1 = r((theta0 - b + t12) * spread, base * (a - p));
    let n2 = r((a - theta0 - t12) * spread, base * (p - b));
    Ok((n, n1, n2))
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Applies every feasibility condition to (θ₀, θ₁, θ₂; α₁², α₂², α₁α₂).
pub fn evaluate(theta0: i64, theta1: i64, theta2: i64, alpha: AlphaData) -> Result<Candidate, Infeasible> {
    let AlphaData { a1_sq: a, a2_sq: b, a12: p } = alpha;
    if !(theta0 > theta1 && theta1 > theta2) || a <= b || b < 1 {
        return Err(Infeasible::Degenerate);
    }
    let theta = if p == -theta2 * (theta1 + 1) {
        theta2
    } else if p == -theta1 * (theta2 + 1) {
        theta1
    } else {
        return Err(Infeasible::AlphaProduct);
    };
    if p * p != a * b {
        return Err(Infeasible::AlphaProduct);
    }
    let t12 = theta1 * theta2;
    let (k1, k2) = (a - t12, b - t12);
    if k2 < 1 {
        return Err(Infeasible::NonPositive("k2"));
    }
    let spread = (theta0 - theta1) * (theta0 - theta2);
    let n = exact_div((a + p + b - theta0 - t12) * spread, (theta0 + t12 + p) * p, "n")?;
    if n <= 0 {
        return Err(Infeasible::NonPositive("n"));
    }
    let q = derive_quotient(theta0, alpha, k1, k2)?;
    let [[k11, k12], [k21, k22]] = q;
    let n1 = exact_div(k21 * n, k12 + k21, "n1")?;
    let n2 = n - n1;
    if n1 <= 0 || n2 <= 0 {
        return Err(Infeasible::NonPositive("n1/n2"));
    }
    let m1 = exact_div(-((n - 1) * theta2 + theta0), theta1 - theta2, "m1")?;
    let m2 = exact_div((n - 1) * theta1 + theta0, theta1 - theta2, "m2")?;
    if m1 <= 0 || m2 <= 0 {
        return Err(Infeasible::NonPositive("multiplicity"));
    }
    if k11 > n1 - 1 || k22 > n2 - 1 || k12 > n2 || k21 > n1 {
        return Err(Infeasible::QuotientNotRealizable);
    }
    if k11 + k22 != theta0 + theta || k11 * k22 - k12 * k21 != theta0 * theta {
        return Err(Infeasible::QuotientEigenvalues);
    }
    if theta0 + m1 * theta1 + m2 * theta2 != 0 {
        return Err(Infeasible::TraceIdentity);
    }
    if theta0 * theta0 + m1 * theta1 * theta1 + m2 * theta2 * theta2 != n1 * k1 + n2 * k2 {
        return Err(Infeasible::EdgeIdentity);
    }
    if n1 * k12 != n2 * k21 {
        return Err(Infeasible::NotEquitable);
    }
    let cone = n1 == 1;
    if cone != (k21 == n1) || cone != (k12 == n2) {
        return Err(Infeasible::ConeShape);
    }
    if n >= 3 && is_prime(n) && !cone {
        return Err(Infeasible::PrimeOrder);
    }
    if k21 == 1 && n1 != 1 {
        return Err(Infeasible::K21IsOne);
    }
    if theta1 != 0 && !cone {
        // α₁ − 1 ≤ (α₁ − α₂)α₂ ≤ min{−(θ₁+1)(θ₂+1), −θ₁θ₂}, squared out exactly.
        let hi = (-(theta1 + 1) * (theta2 + 1)).min(-t12);
        if a > (p - b + 1) * (p - b + 1) || p - b > hi {
            return Err(Infeasible::AlphaInequality);
        }
    }
    let c = Candidate { n, n1, n2, k1, k2, theta0, theta1, theta2, m1, m2, alpha, q, theta };
    BoundSet::for_candidate(&c).check(&c)?;
    Ok(c)
}

/// Largest |θ| allowed for θ₁ or θ₂ on at most `max_n` vertices.
fn theta_bound(max_n: i64) -> i64 {
    let mut t = 1;
    while lemma37_ok(max_n, 0, t + 1) {
        t += 1;
    }
    t
}

fn divisors_below(p: i64) -> Vec<i64> {
    let sq = p * p;
    (1..p).filter(|b| sq % b == 0).collect()
}

fn enumerate_pair(theta1: i64, theta2: i64, max_n: i64, filters: Filters) -> Vec<Candidate> {
    let mut out = Vec::new();
    let t12 = theta1 * theta2;
    for p in [-theta2 * (theta1 + 1), -theta1 * (theta2 + 1)] {
        if p <= 0 {
            continue;
        }
        for b in divisors_below(p) {
            let a = p * p / b;
            let (k1, k2) = (a - t12, b - t12);
            if k2 < 1 || k1 > max_n - 1 {
                continue;
            }
            // θ₀ lies strictly between the valencies and above θ₁.
            for theta0 in k2.max(theta1) + 1..k1 {
                if let Ok(c) = evaluate(theta0, theta1, theta2, AlphaData { a1_sq: a, a2_sq: b, a12: p }) {
                    if c.n <= max_n && filters.admits(&c) {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// All feasible (valency-array, spectrum) pairs with n ≤ `max_n`, sorted by (n, θ₀, θ₁, k₁).
pub fn enumerate(max_n: i64, filters: Filters) -> Result<Vec<Candidate>, FeasibilityError> {
    if max_n < 1 {
        return Err(FeasibilityError::InvalidRange(format!("max_n = {max_n}")));
    }
    let bound = theta_bound(max_n);
    let mut pairs: Vec<(i64, i64)> = (1..=bound).flat_map(|t1| (2..=bound).map(move |t2| (t1, -t2))).collect();
    if !filters.drop_bipartite {
        // Complete bipartite K_{n1,n2}: θ₂ = −√(n1 n2) can reach −max_n/2.
        pairs.extend((1..=max_n / 2 + 1).map(|t| (0, -t)));
    }
    let mut out: Vec<Candidate> = pairs
        .par_iter()
        .flat_map_iter(|&(t1, t2)| enumerate_pair(t1, t2, max_n, filters))
        .collect();
    out.sort_by_key(Candidate::key);
    out.dedup();
    Ok(out)
}



#[cfg(test)]
mod props;
