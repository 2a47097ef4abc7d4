use super::*;
use proptest::prelude::*;

fn square(max: usize) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (1..=max).prop_flat_map(|n| (Just(n), prop::collection::vec(-5i64..=5, n * n)))
}

fn symmetric_01(max: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            IntMatrix::from_fn(n, n, |i, j| {
                let (a, b) = (i.min(j), i.max(j));
                (a != b && bits[a * n + b]) as i64
            })
        })
    })
}

fn eval_at(p: &IntPoly, a: &IntMatrix) -> IntMatrix {
    let n = a.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(a).unwrap().shift(c);
    }
    acc
}

proptest! {
    #[test]
    fn solve_satisfies_system((n, data) in square(5), rhs in prop::collection::vec(-9i64..=9, 10)) {
        let m = RatMatrix::from_i64(n, n, &data).unwrap();
        let b = RatMatrix::from_i64(n, 2, &rhs[..2 * n]).unwrap();
        match solve(&m, &b) {
            Ok(x) => prop_assert_eq!(m.mul(&x).unwrap(), b),
            Err(_) => prop_assert!(rank(&m) < n),
        }
    }

    #[test]
    fn polynomials_annihilate(a in symmetric_01(9)) {
        let n = a.rows();
        let mp = a.minimal_polynomial().unwrap();
        let cp = a.char_poly().unwrap();
        prop_assert!(eval_at(&mp, &a).is_zero());
        prop_assert!(eval_at(&cp, &a).is_zero());
        prop_assert_eq!(cp.degree(), Some(n));
        prop_assert!(mp.degree().unwrap() <= n);
        // x^n − e·x^(n−2) + … for a graph with e edges.
        let e: BigInt = a.entries().iter().sum::<BigInt>() / 2;
        prop_assert!(n < 2 || cp.coeffs()[n - 1].is_zero());
        prop_assert!(n < 2 || cp.coeffs()[n - 2] == -e);
        for r in mp.integer_roots() {
            prop_assert!(cp.eval(&r).is_zero());
        }
    }
}
