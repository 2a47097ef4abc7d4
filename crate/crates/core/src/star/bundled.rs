use super::{search_corpus, unions_of_cycles, StarCheckpoint};
use crate::error::StarError;
use crate::graph::{read_graph6_str, Graph};
use std::path::Path;

const REG4: &str = include_str!("../../data/star30_reg4.g6");
const REG10: &str = include_str!("../../data/star30_reg10.g6");

/// Index into the 4-regular corpus of a complement that yields a graph on its own.
const SMOKE_INDEX: usize = 18;

/// A star-complement search shipped with the crate.
#[derive(Clone, Debug)]
pub struct BundledProblem {
    pub name: &'static str,
    pub theta: i64,
    pub m: usize,
    /// Required number of ones of each candidate vector on a vertex subset of the complement.
    pub counts: Vec<(Vec<usize>, usize)>,
    pub complements: Vec<Graph>,
}

impl BundledProblem {
    pub fn run(&self, limit: Option<usize>, checkpoint: Option<&Path>) -> Result<StarCheckpoint, StarError> {
        search_corpus(&self.complements, self.theta, self.m, &self.counts, limit, checkpoint)
    }
}

fn corpus(text: &str) -> Vec<Graph> {
    read_graph6_str(text).expect("bundled corpus parses")
}

/// Valency-array (15,15;14,8), θ = 2, m = 15: star complements are the 4-regular or the
/// 10-regular cell, and every vertex of the star set has 4 neighbours in it.
pub fn problem_30() -> BundledProblem {
    let mut complements = corpus(REG4);
    complements.extend(corpus(REG10));
    BundledProblem { name: "star30", theta: 2, m: 15, counts: vec![((0..15).collect(), 4)], complements }
}

pub fn problem_30_smoke() -> BundledProblem {
    let c = corpus(REG4).swap_remove(SMOKE_INDEX);
    BundledProblem { complements: vec![c], name: "star30-smoke", ..problem_30() }
}

/// Valency-array (18,9,9;24,14,8), θ = −3, m = 18: complements are two 9-vertex unions of
/// cycles; star-set vertices have 6 neighbours in the first and 3 in the second.
pub fn problem_36() -> BundledProblem {
    let halves = unions_of_cycles(9);
    let complements = halves.iter().flat_map(|a| halves.iter().map(move |b| a.disjoint_union(b))).collect();
    BundledProblem {
        name: "star36",
        theta: -3,
        m: 18,
        counts: vec![((0..9).collect(), 6), ((9..18).collect(), 3)],
        complements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        assert_eq!(corpus(REG4).len(), 43);
        assert_eq!(corpus(REG10).len(), 94);
        assert!(corpus(REG4).iter().all(|g| g.n() == 15 && g.degrees().iter().all(|&d| d == 4)));
        assert!(corpus(REG10).iter().all(|g| g.n() == 15 && g.degrees().iter().all(|&d| d == 10)));
        assert_eq!(problem_36().complements.len(), 16);
    }
}
