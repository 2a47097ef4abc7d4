use super::*;
use proptest::prelude::*;
use std::collections::HashSet;

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for x in 0..n {
                for y in x + 1..n {
                    if bits[k] {
                        g.set_edge(x, y);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graph_and_perm(max: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), n).prop_map(|b| b.iter().enumerate().filter(|x| *x.1).map(|x| x.0).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(16)) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
        let lab = canonical_labeling(&h);
        prop_assert_eq!(h.permute(&lab).to_graph6().into_bytes(), canonical_form(&g));
    }

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn switch_and_complement((g, w) in graph(14).prop_flat_map(|g| { let n = g.n(); (Just(g), subset(n)) })) {
        let s = g.switch(&w).unwrap();
        prop_assert_eq!(&s.switch(&w).unwrap(), &g);
        prop_assert_eq!(&g.complement().complement(), &g);
        prop_assert_eq!(s.complement(), g.complement().switch(&w).unwrap());
        let rest: Vec<usize> = (0..g.n()).filter(|x| !w.contains(x)).collect();
        prop_assert_eq!(g.switch(&rest).unwrap(), s);
    }
}

/// Isomorphism classes of all labelled graphs on n vertices.
fn classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let mut seen = HashSet::new();
    for bits in 0u32..1 << pairs.len() {
        let mut g = Graph::new(n);
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                g.set_edge(x, y);
            }
        }
        seen.insert(canonical_form(&g));
    }
    seen.len()
}

#[test]
fn exhaustive_small_orders() {
    // Numbers of unlabelled graphs on 1..7 vertices.
    let expected = [1, 2, 4, 11, 34, 156, 1044];
    for (n, &k) in (1..=7).zip(&expected) {
        assert_eq!(classes(n), k, "n = {n}");
    }
}
