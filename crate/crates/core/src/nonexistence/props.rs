use super::*;
use crate::constructions::{catalog, petersen, rook_graph, shrikhande, triangular_graph};
use crate::feasibility::{enumerate, Filters};
use crate::graph::{valency_partition, Graph};
use crate::spectral::integer_eigenvalue_multiplicities;
use num_bigint::BigInt;
use proptest::prelude::*;

fn cs_holds(g: &Graph) -> usize {
    let n = g.n() as i64;
    let k = g.degree(0) as i64;
    let ts: Vec<i64> = (-n..=n).collect();
    let mut checked = 0;
    for (theta, m) in integer_eigenvalue_multiplicities(g, &ts) {
        if theta == k {
            continue;
        }
        match cauchy_schwarz_filter(n, k, theta, m as i64) {
            Ok(c) => {
                assert!(c.pass, "{g:?}: {c:?}");
                checked += 1;
            }
            Err(NonexistenceError::DegenerateRange { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }
    checked
}

#[test]
fn cauchy_schwarz_on_regular_induced_subgraphs() {
    let mut checked = 0;
    let mut graphs: Vec<Graph> = vec![petersen(), shrikhande(), rook_graph(4), triangular_graph(8)];
    for (_, g) in catalog() {
        for cell in valency_partition(&g).cells() {
            graphs.push(g.induced(cell).unwrap());
        }
    }
    for g in graphs.iter().filter(|g| g.is_regular() && g.n() > 2) {
        checked += cs_holds(g);
    }
    assert!(checked >= 10);
}

#[test]
fn pigeonhole_quiet_where_graphs_exist() {
    let cs = enumerate(70, Filters::none()).unwrap();
    let mut matched = 0;
    for (name, g) in catalog() {
        let (s, _) = crate::spectral::certify(&g).unwrap();
        let mut d = g.degrees();
        d.sort_unstable();
        for c in cs.iter().filter(|c| c.spectrum() == s && degree_profile(c) == d) {
            assert!(pigeonhole_filter(c).is_empty(), "{name}");
            assert!(refute(c).is_none(), "{name}");
            matched += 1;
        }
    }
    assert_eq!(matched, catalog().len());
}

proptest! {
    #[test]
    fn cauchy_schwarz_matches_bigint(n in 3i64..400, k in 0i64..400, theta in -40i64..40, m in 0i64..400) {
        prop_assume!(k < n && n > m + 1 && theta != k);
        let c = cauchy_schwarz_filter(n, k, theta, m).unwrap();
        let b = BigInt::from;
        let lhs = (b(k) + b(m) * b(theta)).pow(2);
        let rhs = b(n - 1 - m) * (b(n) * b(k) - b(k) * b(k) - b(m) * b(theta) * b(theta));
        prop_assert_eq!(b(c.lhs), lhs.clone());
        prop_assert_eq!(b(c.rhs), rhs.clone());
        prop_assert_eq!(c.pass, lhs <= rhs);
        prop_assert!(Step::CauchySchwarz(c.clone()).verify());
        let mut t = c;
        t.lhs += 1;
        prop_assert!(!Step::CauchySchwarz(t).verify());
    }
}
