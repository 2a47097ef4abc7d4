use super::*;
use crate::constructions::catalog;
use crate::feasibility::{derive_quotient, AlphaData};
use proptest::prelude::*;

/// Checks the Perron, trace, multiplicity, quotient and prediction identities on a certified
/// biregular graph, recomputing each side from the adjacency matrix.
pub(crate) fn identities(g: &Graph) -> Result<(), String> {
    let (s, p) = certify(g).map_err(|e| e.to_string())?;
    let (t0, t1, t2) = s.thetas().ok_or("non-integral spectrum")?;
    let (m1, m2) = s.multiplicities();
    let n = g.n();
    let e2 = 2 * g.edge_count() as i64;
    let (m1i, m2i, ni) = (m1 as i64, m2 as i64, n as i64);
    if 1 + m1 + m2 != n || t0 + m1i * t1 + m2i * t2 != 0 || t0 * t0 + m1i * t1 * t1 + m2i * t2 * t2 != e2 {
        return Err("trace identities".into());
    }
    if m1i * (t1 - t2) != -((ni - 1) * t2 + t0) || m2i * (t1 - t2) != (ni - 1) * t1 + t0 {
        return Err("multiplicity formulas".into());
    }
    if integer_eigenvalue_multiplicities(g, &[t0, t1, t2]) != vec![(t0, 1), (t1, m1), (t2, m2)] {
        return Err("kernel dimensions".into());
    }

    let a = g.adjacency_int();
    let m = a.mul(&a).unwrap().sub(&a.scale(&(t1 + t2).into())).unwrap().shift(&(t1 * t2).into());
    if m.rank() != 1 {
        return Err("(A−θ₁I)(A−θ₂I) is not rank one".into());
    }
    let class: Vec<usize> =
        p.valencies.iter().map(|d| p.class_valencies.iter().position(|c| c == d).unwrap()).collect();
    for x in 0..n {
        if g.degree(x) as i64 != p.alpha_sq[x] - t1 * t2 || *m.get(x, x) != p.alpha_sq[x].into() {
            return Err(format!("d_x identity at {x}"));
        }
        for y in 0..n {
            if x == y {
                continue;
            }
            let ab = p.alpha_prod[class[x]][class[y]].ok_or("irrational α product")?;
            let nu = (t1 + t2) * g.has_edge(x, y) as i64 + ab;
            if g.common_neighbours(x, y) as i64 != nu || *m.get(x, y) != ab.into() {
                return Err(format!("ν identity at {x},{y}"));
            }
        }
    }

    let (qm, q) = biregular_quotient(g).ok_or("valency partition not equitable")?;
    let alpha = AlphaData { a1_sq: p.alpha_sq_by_class[0], a2_sq: p.alpha_sq_by_class[1], a12: p.alpha_prod[0][1].unwrap() };
    let (k1, k2) = (p.class_valencies[0] as i64, p.class_valencies[1] as i64);
    if derive_quotient(t0, alpha, k1, k2).ok() != Some(q) {
        return Err("quotient differs from the α formula".into());
    }

    let pred = predict_complement_spectrum(&s, &qm, e2, n).map_err(|e| e.to_string())?;
    if pred.iter().map(|e| e.at_least).sum::<usize>() != n || !prediction_holds(&g.complement(), &pred) {
        return Err("complement prediction".into());
    }
    let v1 = valency_partition(g).cells()[0].clone();
    let (n1, n2) = (v1.len(), n - v1.len());
    let pred = predict_switch_spectrum(&s, &qm, n1, n2).map_err(|e| e.to_string())?;
    if pred.iter().map(|e| e.at_least).sum::<usize>() != n || !prediction_holds(&g.switch(&v1).unwrap(), &pred) {
        return Err("switch prediction".into());
    }
    if t1 + t2 == -1 && n1 == n2 && !verify_theta12_minus1_structure(g).map_err(|e| e.to_string())?.all_hold() {
        return Err("block identities".into());
    }
    Ok(())
}

#[test]
fn catalog_identities() {
    for (name, g) in catalog() {
        assert_eq!(identities(&g), Ok(()), "{name}");
    }
}

fn catalog_and_perm() -> impl Strategy<Value = (usize, Vec<usize>)> {
    let sizes: Vec<usize> = catalog().iter().map(|(_, g)| g.n()).collect();
    (0..sizes.len()).prop_flat_map(move |i| (Just(i), Just((0..sizes[i]).collect::<Vec<_>>()).prop_shuffle()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn relabeling_preserves_certification((i, perm) in catalog_and_perm()) {
        let g = catalog().swap_remove(i).1;
        let h = g.permute(&perm);
        let (s, p) = certify(&g).unwrap();
        let (sh, ph) = certify(&h).unwrap();
        prop_assert_eq!(&s, &sh);
        prop_assert_eq!(&p.alpha_prod, &ph.alpha_prod);
        prop_assert_eq!(&p.alpha_sq_by_class, &ph.alpha_sq_by_class);
        prop_assert!((0..g.n()).all(|x| p.alpha_sq[x] == ph.alpha_sq[perm[x]]));
        prop_assert_eq!(classify(&g, &s).unwrap(), classify(&h, &sh).unwrap());
        prop_assert_eq!(crate::graph::canonical_form(&g), crate::graph::canonical_form(&h));
    }
}
