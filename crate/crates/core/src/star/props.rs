use super::*;
use crate::spectral::verify_theta12_minus1_structure;
use proptest::prelude::*;

fn canon_set(o: &SearchOutcome) -> Vec<String> {
    o.graphs.iter().map(|(c, _)| c.clone()).collect()
}

#[test]
fn outputs_satisfy_reconstruction_identity() {
    let p30 = problem_30_smoke();
    let out = p30.run(None, None).unwrap().outcome;
    assert_eq!(out.graphs.len(), 1);
    for g in out.assembled() {
        assert!(reconstruction_identity_holds(&g, 15, 2).unwrap());
        // {[12]¹, [2]¹⁵, [−3]¹⁴} with two valency classes of 15.
        assert!(verify_theta12_minus1_structure(&g).unwrap().all_hold());
    }
    let c = Graph::from_graph6("QwCW?CB???_B????_?W????C??W").unwrap();
    let p = StarProblem::new(c, -3, 18).unwrap().with_counts(&[((0..9).collect(), 6), ((9..18).collect(), 3)]).unwrap();
    let out = search(&p, None).unwrap();
    assert_eq!(out.graphs.len(), 1);
    assert!(reconstruction_identity_holds(&out.assembled()[0], 18, -3).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn search_ignores_complement_labels(perm in Just((0..15).collect::<Vec<usize>>()).prop_shuffle()) {
        let base = problem_30_smoke();
        let c = &base.complements[0];
        let p = StarProblem::new(c.clone(), 2, 15).unwrap().with_counts(&base.counts).unwrap();
        let q = StarProblem::new(c.permute(&perm), 2, 15).unwrap().with_counts(&base.counts).unwrap();
        let (a, b) = (search(&p, None).unwrap(), search(&q, None).unwrap());
        prop_assert_eq!(canon_set(&a), canon_set(&b));
        prop_assert_eq!(a.candidates, b.candidates);
        for g in b.assembled() {
            prop_assert!(reconstruction_identity_holds(&g, 15, 2).unwrap());
        }
    }
}
