use super::{Candidate, Infeasible};

/// n ≤ t(t+1)/2 with t = n − m.
pub fn bell_rowlinson_ok(n: i64, m: i64) -> bool {
    let t = n - m;
    2 * n <= t * (t + 1)
}

/// θ_l² ≤ 2(n − 1 + 1/n) and θ_s² ≤ n√((n−1)/2) + 1/(2(n−1)), both squared out to integers.
fn lemma37_pair(n: i64, tl: i64, ts: i64) -> bool {
    let n = n as i128;
    let (tl, ts) = (tl as i128, ts as i128);
    if n * tl * tl > 2 * n * n - 2 * n + 2 {
        return false;
    }
    if n < 2 {
        return true;
    }
    let x = 2 * (n - 1) * ts * ts - 1;
    x <= 0 || x * x <= 2 * n * n * (n - 1).pow(3)
}

/// Lemma bound on the two restricted eigenvalues; `tl` has the larger multiplicity.
pub fn lemma37_ok(n: i64, tl: i64, ts: i64) -> bool {
    lemma37_pair(n, tl, ts)
}

/// Bounds a candidate must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSet {
    /// ℓ = min{1 − (θ₁+1)(θ₂+1), 1 − θ₁θ₂}.
    pub ell: i64,
    /// k_max ≤ (1 − (θ₁+1)(θ₂+1))² − θ₁θ₂.
    pub kmax_any: i64,
    /// k_max ≤ ℓ² − θ₁θ₂ when the complement is connected (not a cone).
    pub kmax_coconnected: i64,
    /// n ≤ θ₀² + 1.
    pub n_max: i64,
}

impl BoundSet {
    pub fn for_candidate(c: &Candidate) -> Self {
        let (t1, t2) = (c.theta1, c.theta2);
        let u = 1 - (t1 + 1) * (t2 + 1);
        let ell = u.min(1 - t1 * t2);
        BoundSet {
            ell,
            kmax_any: u * u - t1 * t2,
            kmax_coconnected: ell * ell - t1 * t2,
            n_max: c.theta0 * c.theta0 + 1,
        }
    }

    pub fn check(&self, c: &Candidate) -> Result<(), Infeasible> {
        if c.n > self.n_max {
            return Err(Infeasible::VertexBound);
        }
        let (tl, ts, tie) = match c.m1.cmp(&c.m2) {
            std::cmp::Ordering::Greater => (c.theta1, c.theta2, false),
            std::cmp::Ordering::Less => (c.theta2, c.theta1, false),
            std::cmp::Ordering::Equal => (c.theta1, c.theta2, true),
        };
        if !(lemma37_ok(c.n, tl, ts) || tie && lemma37_ok(c.n, ts, tl)) {
            return Err(Infeasible::Lemma37);
        }
        if c.theta1 == 0 {
            return Ok(());
        }
        if c.n >= 30 && c.theta0 > c.n - 6 {
            return Err(Infeasible::LargestEigenvalueBound);
        }
        if c.k1 > self.kmax_any || (!c.is_cone() && c.k1 > self.kmax_coconnected) {
            return Err(Infeasible::ValencyBound);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell() {
        assert!(bell_rowlinson_ok(10, 5));
        assert!(!bell_rowlinson_ok(30, 26));
    }

    #[test]
    fn lemma37_edges() {
        // Petersen-cone data: n = 11, θ = 1, −2.
        assert!(lemma37_ok(11, 1, -2));
        assert!(!lemma37_ok(11, 5, 1));
        // θ_s² bound: 11·√5 + 1/20 ≈ 24.64 allows |θ_s| = 4 but not 5.
        assert!(lemma37_ok(11, 1, 4));
        assert!(!lemma37_ok(11, 1, 5));
    }
}
