//! Star complement reconstruction: candidate neighbourhoods, compatibility graph, cliques, assembly.

mod bundled;
mod clique;
mod cycles;

pub use bundled::{problem_30, problem_30_smoke, problem_36, BundledProblem};
pub use clique::{find_cliques, find_cliques_resumable, CliqueCursor};
pub use cycles::{cycle_partitions, cycle_type, cycles_graph, unions_of_cycles};

use crate::error::StarError;
use crate::graph::{canonical_form, Graph};
use crate::linalg::{eigenvalue_multiplicity, rat, solve, Rat, RatMatrix};
use crate::spectral::certify;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

pub const MAX_COMPLEMENT: usize = 40;

/// A star complement C, eigenvalue θ and target multiplicity m.
#[derive(Clone, Debug)]
pub struct StarProblem {
    c: Graph,
    theta: i64,
    m: usize,
    gram: RatMatrix,
    /// denom · (θI − C)⁻¹ as integers, row-major.
    scaled: Vec<i64>,
    denom: i64,
    /// Required number of neighbours inside each vertex mask of C.
    counts: Vec<(u64, usize)>,
}

/// A 0/1 vector (bit k = vertex k of C) with ⟨v,v⟩ = θ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CandidateVector {
    pub mask: u64,
    pub len: usize,
    pub self_value: Rat,
}

impl CandidateVector {
    pub fn bits(&self) -> Vec<u8> {
        (0..self.len).map(|k| ((self.mask >> k) & 1) as u8).collect()
    }

    pub fn weight(&self) -> usize {
        self.mask.count_ones() as usize
    }
}

impl StarProblem {
    pub fn new(c: Graph, theta: i64, m: usize) -> Result<Self, StarError> {
        if m == 0 {
            return Err(StarError::InvalidParameters("multiplicity must be positive".into()));
        }
        let s = c.n();
        let shifted = {
            let mut a = RatMatrix::zeros(s, s);
            for i in 0..s {
                for j in 0..s {
                    let v = if i == j { theta } else { 0 } - c.has_edge(i, j) as i64;
                    a.set(i, j, rat(v));
                }
            }
            a
        };
        if s > 0 && eigenvalue_multiplicity(&c.adjacency(), theta)? != 0 {
            return Err(StarError::ThetaIsEigenvalueOfC);
        }
        let gram = solve(&shifted, &RatMatrix::identity(s))?;
        let mut denom = BigInt::one();
        for i in 0..s {
            for j in 0..s {
                denom = denom.lcm(gram.get(i, j).denom());
            }
        }
        let mut scaled = Vec::with_capacity(s * s);
        for i in 0..s {
            for j in 0..s {
                let x = gram.get(i, j).numer() * (&denom / gram.get(i, j).denom());
                scaled.push(x.to_i64().ok_or(StarError::Overflow)?);
            }
        }
        let denom = denom.to_i64().ok_or(StarError::Overflow)?;
        let budget = i64::MAX / 4 / ((s * s).max(1) as i64);
        if scaled.iter().any(|x| x.abs() > budget) || (theta.abs() as i128) * (denom as i128) > budget as i128 {
            return Err(StarError::Overflow);
        }
        Ok(StarProblem { c, theta, m, gram, scaled, denom, counts: Vec::new() })
    }

    /// Restricts candidates to vectors with exactly `count` ones on each given vertex set of C.
    pub fn with_counts(mut self, constraints: &[(Vec<usize>, usize)]) -> Result<Self, StarError> {
        let s = self.s();
        if s > 64 {
            return Err(StarError::ComplementTooLarge(s));
        }
        for (set, count) in constraints {
            if set.iter().any(|&v| v >= s) || *count > set.len() {
                return Err(StarError::InvalidParameters(format!("bad count constraint {set:?} = {count}")));
            }
            let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
            self.counts.push((mask, *count));
        }
        Ok(self)
    }

    pub fn complement(&self) -> &Graph {
        &self.c
    }

    pub fn theta(&self) -> i64 {
        self.theta
    }

    pub fn multiplicity(&self) -> usize {
        self.m
    }

    /// (θI − C)⁻¹.
    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    fn s(&self) -> usize {
        self.c.n()
    }

    fn g(&self, i: usize, j: usize) -> i64 {
        self.scaled[i * self.s() + j]
    }

    /// ⟨v,w⟩ = v⊤(θI − C)⁻¹w.
    pub fn gram_form(&self, v: &[u8], w: &[u8]) -> Result<Rat, StarError> {
        let s = self.s();
        for x in [v, w] {
            if x.len() != s {
                return Err(StarError::DimensionMismatch(x.len()));
            }
        }
        let mut acc = Rat::zero();
        for i in (0..s).filter(|&i| v[i] != 0) {
            for j in (0..s).filter(|&j| w[j] != 0) {
                acc += self.gram.get(i, j) * Rat::from_integer(BigInt::from(v[i] as i64 * w[j] as i64));
            }
        }
        Ok(acc)
    }

    /// denom · ⟨e_k, v⟩ for every k.
    fn cross(&self, mask: u64) -> Vec<i64> {
        let s = self.s();
        (0..s).map(|k| (0..s).filter(|&i| mask >> i & 1 == 1).map(|i| self.g(i, k)).sum()).collect()
    }
}

/// Every nonzero 0/1 vector v with ⟨v,v⟩ = θ, in increasing order of the bit mask.
pub fn enumerate_candidates(p: &StarProblem) -> Result<Vec<CandidateVector>, StarError> {
    let s = p.s();
    if s > MAX_COMPLEMENT {
        return Err(StarError::ComplementTooLarge(s));
    }
    let target = p.theta * p.denom;
    let pos_tail: Vec<i64> = (0..s).map(|j| (j + 1..s).map(|l| p.g(j, l).max(0)).sum()).collect();
    let neg_tail: Vec<i64> = (0..s).map(|j| (j + 1..s).map(|l| p.g(j, l).min(0)).sum()).collect();

    struct Walk<'a> {
        p: &'a StarProblem,
        target: i64,
        pos_tail: Vec<i64>,
        neg_tail: Vec<i64>,
        cross: Vec<i64>,
        out: Vec<u64>,
    }

    impl Walk<'_> {
        fn go(&mut self, k: usize, mask: u64, val: i64) {
            let s = self.p.s();
            let (mut ub, mut lb) = (0i64, 0i64);
            for j in k..s {
                let base = self.p.g(j, j) + 2 * self.cross[j];
                ub += (base + 2 * self.pos_tail[j]).max(0);
                lb += (base + 2 * self.neg_tail[j]).min(0);
            }
            if val + ub < self.target || val + lb > self.target {
                return;
            }
            let free = if k >= 64 { 0 } else { !0u64 << k };
            for &(set, want) in &self.p.counts {
                let have = (mask & set).count_ones() as usize;
                if have > want || have + ((set & free).count_ones() as usize) < want {
                    return;
                }
            }
            if k == s {
                if val == self.target && mask != 0 {
                    self.out.push(mask);
                }
                return;
            }
            self.go(k + 1, mask, val);
            let gain = self.p.g(k, k) + 2 * self.cross[k];
            for j in 0..s {
                self.cross[j] += self.p.g(k, j);
            }
            self.go(k + 1, mask | 1 << k, val + gain);
            for j in 0..s {
                self.cross[j] -= self.p.g(k, j);
            }
        }
    }

    let mut w = Walk { p, target, pos_tail, neg_tail, cross: vec![0; s], out: Vec::new() };
    w.go(0, 0, 0);
    let mut masks = w.out;
    masks.sort_unstable();
    Ok(masks
        .into_iter()
        .map(|mask| CandidateVector { mask, len: s, self_value: rat(p.theta) })
        .collect())
}

/// Candidates adjacent when ⟨v,w⟩ ∈ {0, −1}.
pub fn compatibility_graph(p: &StarProblem, cands: &[CandidateVector]) -> Graph {
    let crosses: Vec<Vec<i64>> = cands.par_iter().map(|c| p.cross(c.mask)).collect();
    let rows: Vec<Vec<usize>> = (0..cands.len())
        .into_par_iter()
        .map(|i| {
            (i + 1..cands.len())
                .filter(|&j| {
                    let mut m = cands[j].mask;
                    let mut dot = 0i64;
                    while m != 0 {
                        let k = m.trailing_zeros() as usize;
                        dot += crosses[i][k];
                        m &= m - 1;
                    }
                    dot == 0 || dot == -p.denom
                })
                .collect()
        })
        .collect();
    let mut h = Graph::new(cands.len());
    for (i, row) in rows.into_iter().enumerate() {
        for j in row {
            h.set_edge(i, j);
        }
    }
    h
}

/// The graph with vertices X = 0..m (one per chosen vector) followed by C, with
/// A_X := θI − B⊤(θI − C)⁻¹B.
pub fn assemble(p: &StarProblem, clique: &[&CandidateVector]) -> Result<Graph, StarError> {
    let (m, s) = (clique.len(), p.s());
    if m != p.m {
        return Err(StarError::InvalidParameters(format!("clique of size {m}, expected {}", p.m)));
    }
    let mut g = Graph::new(m + s);
    for (a, b) in p.c.edges() {
        g.set_edge(m + a, m + b);
    }
    for (i, v) in clique.iter().enumerate() {
        if v.len != s {
            return Err(StarError::DimensionMismatch(v.len));
        }
        for k in (0..s).filter(|&k| v.mask >> k & 1 == 1) {
            g.set_edge(i, m + k);
        }
    }
    let crosses: Vec<Vec<i64>> = clique.iter().map(|v| p.cross(v.mask)).collect();
    for i in 0..m {
        for j in i..m {
            let mut dot = 0i64;
            for k in (0..s).filter(|&k| clique[j].mask >> k & 1 == 1) {
                dot += crosses[i][k];
            }
            let scaled = if i == j { p.theta * p.denom } else { 0 } - dot;
            if scaled % p.denom != 0 {
                return Err(StarError::NonGraphicalAX(format!("non-integral entry at ({i},{j})")));
            }
            let a = scaled / p.denom;
            match (i == j, a) {
                (true, 0) | (false, 0) => {}
                (false, 1) => g.set_edge(i, j),
                _ => return Err(StarError::NonGraphicalAX(format!("entry {a} at ({i},{j})"))),
            }
        }
    }
    Ok(g)
}

/// Checks θI − A_X = B⊤(θI − C)⁻¹B exactly, with X the first m vertices of `g`.
pub fn reconstruction_identity_holds(g: &Graph, m: usize, theta: i64) -> Result<bool, StarError> {
    let n = g.n();
    if m > n {
        return Err(StarError::InvalidParameters(format!("m = {m} > n = {n}")));
    }
    let rest: Vec<usize> = (m..n).collect();
    let p = StarProblem::new(g.induced(&rest)?, theta, m.max(1))?;
    let s = n - m;
    let b = RatMatrix::new(s, m, (0..s * m).map(|e| rat(g.has_edge(m + e / m, e % m) as i64)).collect())?;
    let rhs = b.transpose().mul(p.gram())?.mul(&b)?;
    Ok((0..m).all(|i| {
        (0..m).all(|j| {
            let lhs = if i == j { theta } else { 0 } - g.has_edge(i, j) as i64;
            *rhs.get(i, j) == rat(lhs)
        })
    }))
}

/// Summary of one or more searches.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub candidates: usize,
    pub cliques_tested: usize,
    /// (canonical graph6, assembled graph6 with X first) per isomorphism class, sorted by canonical form.
    pub graphs: Vec<(String, String)>,
}

impl SearchOutcome {
    pub fn assembled(&self) -> Vec<Graph> {
        self.graphs.iter().map(|(_, g)| Graph::from_graph6(g).expect("stored graph6 is valid")).collect()
    }

    fn merge(&mut self, other: SearchOutcome) {
        self.candidates += other.candidates;
        self.cliques_tested += other.cliques_tested;
        let mut all: BTreeMap<String, String> = self.graphs.drain(..).collect();
        for (k, v) in other.graphs {
            all.entry(k).or_insert(v);
        }
        self.graphs = all.into_iter().collect();
    }
}

/// Full pipeline for one star complement: candidates, compatibility graph, m-cliques,
/// assembly and certification, deduplicated up to isomorphism.
pub fn search(p: &StarProblem, limit: Option<usize>) -> Result<SearchOutcome, StarError> {
    let cands = enumerate_candidates(p)?;
    let h = compatibility_graph(p, &cands);
    let cliques = find_cliques(&h, p.m, limit);
    let assembled: Vec<(String, String)> = cliques
        .par_iter()
        .filter_map(|cl| {
            let vecs: Vec<&CandidateVector> = cl.iter().map(|&i| &cands[i]).collect();
            let g = assemble(p, &vecs).ok()?;
            let canon = String::from_utf8(canonical_form(&g)).expect("graph6 is ascii");
            Some((canon, g.to_graph6()))
        })
        .collect();
    let mut unique: BTreeMap<String, String> = BTreeMap::new();
    for (canon, g6) in assembled {
        unique.entry(canon).or_insert(g6);
    }
    let mut classes: Vec<(String, String)> = unique
        .into_par_iter()
        .filter(|(_, g6)| Graph::from_graph6(g6).map(|g| certify(&g).is_ok()).unwrap_or(false))
        .collect();
    classes.sort();
    Ok(SearchOutcome { candidates: cands.len(), cliques_tested: cliques.len(), graphs: classes })
}

/// Progress of a search over many star complements, saved after each complement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarCheckpoint {
    pub theta: i64,
    pub m: usize,
    pub completed: Vec<String>,
    pub outcome: SearchOutcome,
}

impl StarCheckpoint {
    pub fn load(path: &Path) -> Result<Option<Self>, StarError> {
        match std::fs::read_to_string(path) {
            Ok(text) => serde_json::from_str(&text).map(Some).map_err(|e| StarError::Checkpoint(e.to_string())),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(StarError::Checkpoint(e.to_string())),
        }
    }

    pub fn save(&self, path: &Path) -> Result<(), StarError> {
        let tmp = path.with_extension("tmp");
        let text = serde_json::to_string_pretty(self).map_err(|e| StarError::Checkpoint(e.to_string()))?;
        std::fs::write(&tmp, text).map_err(|e| StarError::Checkpoint(e.to_string()))?;
        std::fs::rename(&tmp, path).map_err(|e| StarError::Checkpoint(e.to_string()))
    }
}

/// Searches each complement in turn, skipping those already recorded in the checkpoint file.
pub fn search_corpus(
    complements: &[Graph],
    theta: i64,
    m: usize,
    counts: &[(Vec<usize>, usize)],
    limit: Option<usize>,
    checkpoint: Option<&Path>,
) -> Result<StarCheckpoint, StarError> {
    let mut state = match checkpoint.map(StarCheckpoint::load).transpose()?.flatten() {
        Some(cp) if cp.theta == theta && cp.m == m => cp,
        Some(_) => return Err(StarError::Checkpoint("checkpoint was written for different θ or m".into())),
        None => StarCheckpoint { theta, m, ..Default::default() },
    };
    for c in complements {
        let key = c.to_graph6();
        if state.completed.contains(&key) {
            continue;
        }
        let p = StarProblem::new(c.clone(), theta, m)?.with_counts(counts)?;
        state.outcome.merge(search(&p, limit)?);
        state.completed.push(key);
        if let Some(path) = checkpoint {
            state.save(path)?;
        }
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_frac;

    #[test]
    fn gram_on_k2() {
        let p = StarProblem::new(Graph::complete(2), 2, 1).unwrap();
        assert_eq!(p.gram_form(&[1, 1], &[1, 1]).unwrap(), rat(2));
        assert_eq!(p.gram_form(&[1, 0], &[1, 0]).unwrap(), rat_frac(2, 3));
        assert_eq!(p.gram_form(&[0, 0], &[1, 1]).unwrap(), rat(0));
        assert!(matches!(p.gram_form(&[1], &[1, 1]), Err(StarError::DimensionMismatch(1))));
    }

    #[test]
    fn candidates_on_k2() {
        let p = StarProblem::new(Graph::complete(2), 2, 1).unwrap();
        let c = enumerate_candidates(&p).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].bits(), vec![1, 1]);
        let h = compatibility_graph(&p, &c);
        assert_eq!((h.n(), h.edge_count()), (1, 0));
        // m = 1: the apex over K₂ is a triangle.
        let g = assemble(&p, &[&c[0]]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(reconstruction_identity_holds(&g, 1, 2).unwrap());
    }

    #[test]
    fn eigenvalue_of_complement_rejected() {
        assert!(matches!(StarProblem::new(Graph::complete(3), 2, 1), Err(StarError::ThetaIsEigenvalueOfC)));
        assert!(matches!(StarProblem::new(Graph::new(41), 1, 1).map(|p| enumerate_candidates(&p)), Ok(Err(StarError::ComplementTooLarge(41)))));
    }

    #[test]
    fn brute_force_candidates() {
        let c = Graph::cycle(7);
        let p = StarProblem::new(c, -3, 3).unwrap();
        let got: Vec<u64> = enumerate_candidates(&p).unwrap().iter().map(|c| c.mask).collect();
        let want: Vec<u64> = (1u64..128)
            .filter(|&m| {
                let v: Vec<u8> = (0..7).map(|k| (m >> k & 1) as u8).collect();
                p.gram_form(&v, &v).unwrap() == rat(-3)
            })
            .collect();
        assert_eq!(got, want);
    }
}

#[cfg(test)]
mod props;
