//! Refutation certificates for feasible parameter sets, and the existence column of the table.

mod steps;

pub use steps::{CsCheck, Step};

use crate::constructions::catalog;
use crate::error::NonexistenceError;
use crate::feasibility::{golden_rows, Candidate, Existence};
use crate::graph::Graph;
use crate::spectral::{certify, Spectrum3};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use steps::{apex_extensions, cs_sides, pigeonhole_bound, quadratic_form};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    CauchySchwarz,
    Pigeonhole,
    InterlacingDecomposition,
    Reference,
}

/// A named group of steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub name: String,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub candidate: Candidate,
    pub method: Method,
    pub stages: Vec<Stage>,
}

impl Refutation {
    /// Every step re-verifies, at least one of them is a contradiction, and the steps are the ones
    /// derived from the stored candidate.
    pub fn verify(&self) -> bool {
        let all = || self.stages.iter().flat_map(|s| &s.steps);
        let derived = match self.method {
            Method::CauchySchwarz => refute_100(&self.candidate),
            Method::InterlacingDecomposition => refute_48(&self.candidate),
            Method::Pigeonhole => refute_pigeonhole(&self.candidate),
            Method::Reference => return false,
        };
        all().all(Step::verify) && all().any(Step::is_contradiction) && derived.is_ok_and(|d| d.stages == self.stages)
    }
}

/// Both sides of (k + mθ)² ≤ (n − 1 − m)(nk − k² − mθ²); failure rules out an n-vertex k-regular
/// graph with eigenvalue θ ≠ k at multiplicity at least m.
pub fn cauchy_schwarz_filter(n: i64, k: i64, theta: i64, m: i64) -> Result<CsCheck, NonexistenceError> {
    if n <= 1 + m {
        return Err(NonexistenceError::DegenerateRange { n, m });
    }
    if k < 0 || k >= n || m < 0 || theta == k {
        return Err(NonexistenceError::InvalidParameters(format!("n={n} k={k} theta={theta} m={m}")));
    }
    let (lhs, rhs) = cs_sides(n, k, theta, m).ok_or(NonexistenceError::Overflow)?;
    Ok(CsCheck { n, k, theta, m, lhs, rhs, pass: lhs <= rhs })
}

fn numbers(c: &Candidate) -> [i64; 9] {
    [c.n, c.n1, c.n2, c.k1, c.k2, c.theta0, c.theta1, c.theta2, c.k12()]
}

const ROWS_100: [[i64; 9]; 2] = [[100, 50, 50, 69, 33, 57, 7, -3, 24], [100, 50, 50, 64, 28, 52, 2, -8, 24]];
const ROWS_48: [[i64; 9]; 2] = [[48, 24, 24, 33, 15, 27, 3, -3, 12], [48, 24, 24, 32, 14, 26, 2, -4, 12]];

fn not_applicable(c: &Candidate) -> NonexistenceError {
    NonexistenceError::NotApplicable(c.to_string())
}

/// The 100-vertex rows: V₂ induces a regular graph whose forced eigenvalue multiplicity breaks
/// the Cauchy–Schwarz bound.
pub fn refute_100(c: &Candidate) -> Result<Refutation, NonexistenceError> {
    if !ROWS_100.contains(&numbers(c)) {
        return Err(not_applicable(c));
    }
    let degree = c.q[1][1];
    // The eigenvalue of Γ that can be pushed furthest into the subgraph.
    let (theta, mult) = if c.m1 >= c.m2 { (c.theta1, c.m1) } else { (c.theta2, c.m2) };
    let lower = mult - (c.n - c.n2);
    let cs = cauchy_schwarz_filter(c.n2, degree, theta, lower)?;
    Ok(Refutation {
        candidate: c.clone(),
        method: Method::CauchySchwarz,
        stages: vec![
            Stage { name: "regular".into(), steps: vec![Step::InducedDegree { valency: c.k2, outside: c.q[1][0], degree }] },
            Stage {
                name: "interlacing".into(),
                steps: vec![Step::Interlacing { n: c.n, order: c.n2, theta, multiplicity: mult, lower }],
            },
            Stage { name: "connected".into(), steps: vec![Step::Connected { theta1: c.theta1, degree }] },
            Stage { name: "cauchy-schwarz".into(), steps: vec![Step::CauchySchwarz(cs)] },
        ],
    })
}

fn min_witness(g: &Graph, theta: i64) -> (Vec<i64>, i64) {
    let n = g.n() as u32;
    let mut best = (vec![0; g.n()], 0);
    let mut u = vec![0i64; g.n()];
    for code in 0..5u64.pow(n) {
        let mut r = code;
        for slot in u.iter_mut() {
            *slot = (r % 5) as i64 - 2;
            r /= 5;
        }
        let v = quadratic_form(g, theta, &u);
        if v < best.1 {
            best = (u.clone(), v);
        }
    }
    best
}

fn stages_48(c: &Candidate) -> Vec<Stage> {
    let (k21, k22) = (c.q[1][0], c.q[1][1]);
    let base = Graph::complete_bipartite(3, 3);
    let parts = (c.n2 / 6) as usize;
    let lower = c.m2 - (c.n - c.n2);
    let mut quotient = Vec::new();
    for i in 0..parts {
        let mut row = vec![0; parts + 1];
        row[i] = k22;
        row[parts] = k21;
        quotient.push(row);
    }
    let mut last = vec![c.q[0][1] / parts as i64; parts];
    last.push(c.q[0][0]);
    quotient.push(last);
    let mut eigenvalues = vec![c.theta0];
    eigenvalues.extend(std::iter::repeat(k22).take(parts - 1));
    let trace: i64 = (0..=parts).map(|i| quotient[i][i]).sum();
    eigenvalues.push(trace - eigenvalues.iter().sum::<i64>());

    let mut cases: Vec<Graph> = Vec::new();
    for g in apex_extensions(&base, k21 as usize / parts) {
        if !cases.iter().any(|h| crate::graph::are_isomorphic(h, &g)) {
            cases.push(g);
        }
    }
    let witnesses = cases
        .iter()
        .map(|g| {
            let (u, value) = min_witness(g, c.theta2);
            Step::NegativeWitness { graph: g.to_graph6(), theta: c.theta2, u, value }
        })
        .collect::<Vec<_>>();
    let mut ext = vec![Step::ExtensionCases {
        base: base.to_graph6(),
        apex_degree: k21 as usize / parts,
        cases: cases.iter().map(Graph::to_graph6).collect(),
    }];
    ext.extend(witnesses);
    vec![
        Stage {
            name: "a: V2 is a union of K3,3".into(),
            steps: vec![
                Step::InducedDegree { valency: c.k2, outside: k21, degree: k22 },
                Step::Interlacing { n: c.n, order: c.n2, theta: c.theta2, multiplicity: c.m2, lower },
                Step::CubicComponents { order: c.n2, lower, smallest: base.to_graph6() },
            ],
        },
        Stage {
            name: "b: refined partition is equitable".into(),
            steps: vec![Step::TightInterlacing {
                quotient,
                eigenvalues,
                spectrum: vec![(c.theta0, 1), (c.theta1, c.m1), (c.theta2, c.m2)],
            }],
        },
        Stage { name: "c: no admissible extension".into(), steps: ext },
    ]
}

fn link_stage(from: &Candidate, to: &[i64; 9]) -> Stage {
    Stage {
        name: "d: complement link".into(),
        steps: vec![Step::ComplementLink {
            source: [from.n, from.k1, from.k2, from.theta0, from.theta1, from.theta2],
            target: [to[0], to[3], to[4], to[5], to[6], to[7]],
        }],
    }
}

/// The 48-vertex rows, linked to each other by complementation.
pub fn refute_48(c: &Candidate) -> Result<Refutation, NonexistenceError> {
    let key = numbers(c);
    let stages = if key == ROWS_48[0] {
        let mut s = stages_48(c);
        s.push(link_stage(c, &ROWS_48[1]));
        s
    } else if key == ROWS_48[1] {
        let other = crate::feasibility::enumerate(48, crate::feasibility::Filters::default())
            .map_err(|e| NonexistenceError::InvalidParameters(e.to_string()))?
            .into_iter()
            .find(|d| numbers(d) == ROWS_48[0])
            .ok_or_else(|| not_applicable(c))?;
        let mut s = vec![link_stage(c, &ROWS_48[0])];
        s.extend(stages_48(&other));
        s
    } else {
        return Err(not_applicable(c));
    };
    Ok(Refutation { candidate: c.clone(), method: Method::InterlacingDecomposition, stages })
}

/// Common-neighbour counts of adjacent pairs against the pigeonhole bound from the quotient.
/// Returns the violated checks (empty means pass).
pub fn pigeonhole_filter(c: &Candidate) -> Vec<Step> {
    let sizes = [c.n1, c.n2];
    let alpha = [[c.alpha.a1_sq, c.alpha.a12], [c.alpha.a12, c.alpha.a2_sq]];
    let mut out = Vec::new();
    for (i, j) in [(0, 0), (0, 1), (1, 1)] {
        if c.q[i][j] == 0 || (i == j && sizes[i] < 2) {
            continue;
        }
        let step = Step::Pigeonhole {
            sizes,
            q: c.q,
            theta_sum: c.theta1 + c.theta2,
            alpha_prod: alpha[i][j],
            cells: (i, j),
            bound: pigeonhole_bound(sizes, c.q, (i, j)),
            nu: c.theta1 + c.theta2 + alpha[i][j],
        };
        if step.is_contradiction() {
            out.push(step);
        }
    }
    out
}

pub fn refute_pigeonhole(c: &Candidate) -> Result<Refutation, NonexistenceError> {
    let steps = pigeonhole_filter(c);
    if steps.is_empty() {
        return Err(not_applicable(c));
    }
    Ok(Refutation { candidate: c.clone(), method: Method::Pigeonhole, stages: vec![Stage { name: "pigeonhole".into(), steps }] })
}

/// Any of the local refutations that applies.
pub fn refute(c: &Candidate) -> Option<Refutation> {
    refute_48(c).ok().or_else(|| refute_100(c).ok()).or_else(|| refute_pigeonhole(c).ok())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Refutation { method: Method },
    /// A built-in graph has these parameters; the count itself is a reference value.
    Catalog { name: String },
    Reference,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotated {
    pub candidate: Candidate,
    pub existence: Existence,
    pub source: Source,
    pub comment: String,
}

fn degree_profile(c: &Candidate) -> Vec<usize> {
    let mut d = vec![c.k1 as usize; c.n1 as usize];
    d.extend(std::iter::repeat(c.k2 as usize).take(c.n2 as usize));
    d.sort_unstable();
    d
}

/// Fills the existence column: local refutations first, then built-in graphs, then the bundled table.
pub fn annotate_existence(candidates: &[Candidate]) -> Vec<Annotated> {
    let golden = golden_rows();
    let known: Vec<(&str, Spectrum3, Vec<usize>)> = catalog()
        .into_par_iter()
        .filter_map(|(name, g)| {
            let (s, _) = certify(&g).ok()?;
            let mut d = g.degrees();
            d.sort_unstable();
            Some((name, s, d))
        })
        .collect();
    candidates
        .par_iter()
        .map(|c| {
            let row = golden.iter().find(|r| r.matches(c));
            let comment = row.map(|r| r.comment.clone()).unwrap_or_default();
            if let Some(r) = refute(c).filter(Refutation::verify) {
                return Annotated {
                    candidate: c.clone(),
                    existence: Existence::Exactly(0),
                    source: Source::Refutation { method: r.method },
                    comment,
                };
            }
            let profile = degree_profile(c);
            let hit = known.iter().find(|(_, s, d)| *s == c.spectrum() && *d == profile);
            let (existence, source) = match (row, hit) {
                (Some(r), Some((name, ..))) => (r.existence, Source::Catalog { name: name.to_string() }),
                (None, Some((name, ..))) => (Existence::AtLeast(1), Source::Catalog { name: name.to_string() }),
                (Some(r), None) => (r.existence, Source::Reference),
                (None, None) => (Existence::Unknown, Source::None),
            };
            Annotated { candidate: c.clone(), existence, source, comment }
        })
        .collect()
}


#[cfg(test)]
mod props;
