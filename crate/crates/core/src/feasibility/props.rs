use super::*;
use crate::linalg::rat;

fn consistent(c: &Candidate) -> Result<(), &'static str> {
    let (t0, t1, t2) = (c.theta0, c.theta1, c.theta2);
    let [[k11, k12], [k21, k22]] = c.q;
    let checks = [
        (1 + c.m1 + c.m2 == c.n, "multiplicities sum"),
        (t0 + c.m1 * t1 + c.m2 * t2 == 0, "trace"),
        (t0 * t0 + c.m1 * t1 * t1 + c.m2 * t2 * t2 == c.n1 * c.k1 + c.n2 * c.k2, "trace of A²"),
        (c.m1 * (t1 - t2) == -((c.n - 1) * t2 + t0), "m₁ formula"),
        (c.m2 * (t1 - t2) == (c.n - 1) * t1 + t0, "m₂ formula"),
        (c.n1 + c.n2 == c.n, "cell sizes"),
        (k11 + k12 == c.k1 && k21 + k22 == c.k2, "quotient rows"),
        (c.n1 * k12 == c.n2 * k21, "edge count between cells"),
        (k11 + k22 == t0 + c.theta && k11 * k22 - k12 * k21 == t0 * c.theta, "quotient eigenvalues"),
        (c.k1 == c.alpha.a1_sq - t1 * t2 && c.k2 == c.alpha.a2_sq - t1 * t2, "valencies"),
        (c.alpha.a12 * c.alpha.a12 == c.alpha.a1_sq * c.alpha.a2_sq, "α product"),
    ];
    match checks.iter().find(|x| !x.0) {
        Some(&(_, what)) => Err(what),
        None => Ok(()),
    }
}

#[test]
fn enumerated_candidates_are_consistent() {
    for filters in [Filters::default(), Filters::none()] {
        let cs = enumerate(100, filters).unwrap();
        assert!(!cs.is_empty());
        for c in &cs {
            assert_eq!(consistent(c), Ok(()), "{c}");
            let (n, n1, n2) = compute_n_n1_n2(c.theta0, c.theta1, c.theta2, c.alpha).unwrap();
            assert_eq!((n, n1, n2), (rat(c.n), rat(c.n1), rat(c.n2)));
        }
        assert!(cs.windows(2).all(|w| w[0].key() < w[1].key()));
    }
}

#[test]
fn filtered_is_subset() {
    let all = enumerate(80, Filters::none()).unwrap();
    for c in enumerate(80, Filters::default()).unwrap() {
        assert!(all.contains(&c), "{c}");
    }
}
