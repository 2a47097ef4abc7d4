use crate::feasibility::complement_pair_constraints;
use crate::graph::{are_isomorphic, Graph};
use crate::linalg::{eigenvalue_multiplicity, IntMatrix, IntPoly};
use serde::{Deserialize, Serialize};

/// Both sides of (k + mθ)² ≤ (n − 1 − m)(nk − k² − mθ²).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsCheck {
    pub n: i64,
    pub k: i64,
    pub theta: i64,
    pub m: i64,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

pub(crate) fn cs_sides(n: i64, k: i64, theta: i64, m: i64) -> Option<(i64, i64)> {
    let t = theta;
    let s = k.checked_add(m.checked_mul(t)?)?;
    let lhs = s.checked_mul(s)?;
    let inner = n.checked_mul(k)?.checked_sub(k.checked_mul(k)?)?.checked_sub(m.checked_mul(t.checked_mul(t)?)?)?;
    let rhs = (n - 1 - m).checked_mul(inner)?;
    Some((lhs, rhs))
}

/// One exactly checkable claim in a refutation transcript.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    /// Vertices of valency `valency` with `outside` neighbours in the other cell have `degree` inside.
    InducedDegree { valency: i64, outside: i64, degree: i64 },
    /// An induced subgraph of order `order` in an n-vertex graph keeps θ with multiplicity ≥ `lower`.
    Interlacing { n: i64, order: i64, theta: i64, multiplicity: i64, lower: i64 },
    /// λ₂ of the subgraph is at most θ₁ < its degree, so the subgraph is connected.
    Connected { theta1: i64, degree: i64 },
    CauchySchwarz(CsCheck),
    /// Among connected cubic graphs on at most `smallest` order vertices, only `smallest` has
    /// eigenvalue −3; `lower` such components fill all `order` vertices.
    CubicComponents { order: i64, lower: i64, smallest: String },
    /// Quotient eigenvalues (char poly) interlace the spectrum tightly.
    TightInterlacing { quotient: Vec<Vec<i64>>, eigenvalues: Vec<i64>, spectrum: Vec<(i64, i64)> },
    /// Every apex of degree `apex_degree` over `base` gives a graph isomorphic to one of `cases`.
    ExtensionCases { base: String, apex_degree: usize, cases: Vec<String> },
    /// uᵀ(A − θI)u = value < 0, so λ_min(A) < θ.
    NegativeWitness { graph: String, theta: i64, u: Vec<i64>, value: i64 },
    /// The complement of a graph with `source` (n, k₁, k₂, θ₀, θ₁, θ₂) has parameters `target`.
    ComplementLink { source: [i64; 6], target: [i64; 6] },
    /// Lower bound on common neighbours of an adjacent pair in cells (i, j) against the exact count.
    Pigeonhole { sizes: [i64; 2], q: [[i64; 2]; 2], theta_sum: i64, alpha_prod: i64, cells: (usize, usize), bound: i64, nu: i64 },
}

impl Step {
    /// Recomputes the claim from its stored inputs.
    pub fn verify(&self) -> bool {
        match self {
            Step::InducedDegree { valency, outside, degree } => valency - outside == *degree && *degree >= 0,
            Step::Interlacing { n, order, multiplicity, lower, .. } => {
                order <= n && *lower == multiplicity - (n - order) && *lower > 0
            }
            Step::Connected { theta1, degree } => theta1 < degree,
            Step::CauchySchwarz(c) => match cs_sides(c.n, c.k, c.theta, c.m) {
                Some((l, r)) => c.n > 1 + c.m && l == c.lhs && r == c.rhs && c.pass == (l <= r),
                None => false,
            },
            Step::CubicComponents { order, lower, smallest } => verify_cubic(*order, *lower, smallest),
            Step::TightInterlacing { quotient, eigenvalues, spectrum } => verify_tight(quotient, eigenvalues, spectrum),
            Step::ExtensionCases { base, apex_degree, cases } => verify_cases(base, *apex_degree, cases),
            Step::NegativeWitness { graph, theta, u, value } => match Graph::from_graph6(graph) {
                Ok(g) if g.n() == u.len() => quadratic_form(&g, *theta, u) == *value && *value < 0,
                _ => false,
            },
            Step::ComplementLink { source, target } => verify_link(source, target),
            Step::Pigeonhole { sizes, q, theta_sum, alpha_prod, cells, bound, nu } => {
                cells.0 < 2
                    && cells.1 < 2
                    && pigeonhole_bound(*sizes, *q, *cells) == *bound
                    && theta_sum + alpha_prod == *nu
            }
        }
    }

    /// Whether a verified instance of this step is contradictory on its own.
    pub fn is_contradiction(&self) -> bool {
        match self {
            Step::CauchySchwarz(c) => !c.pass,
            Step::NegativeWitness { .. } => true,
            Step::Pigeonhole { bound, nu, .. } => bound > nu,
            _ => false,
        }
    }
}

pub(crate) fn quadratic_form(g: &Graph, theta: i64, u: &[i64]) -> i64 {
    let n = g.n();
    let mut s = 0;
    for x in 0..n {
        s -= theta * u[x] * u[x];
        for y in g.neighbours(x) {
            s += u[x] * u[y];
        }
    }
    s
}

/// Connected cubic graphs on `order` vertices, by brute force over edge sets.
pub(crate) fn connected_cubic_graphs(order: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..order).flat_map(|a| (a + 1..order).map(move |b| (a, b))).collect();
    let m = 3 * order / 2;
    let mut found: Vec<Graph> = Vec::new();
    let mut pick = Vec::with_capacity(m);
    fn rec(pairs: &[(usize, usize)], start: usize, m: usize, pick: &mut Vec<usize>, deg: &mut [usize], out: &mut Vec<Vec<usize>>) {
        if pick.len() == m {
            out.push(pick.clone());
            return;
        }
        for i in start..pairs.len() {
            let (a, b) = pairs[i];
            if deg[a] < 3 && deg[b] < 3 {
                deg[a] += 1;
                deg[b] += 1;
                pick.push(i);
                rec(pairs, i + 1, m, pick, deg, out);
                pick.pop();
                deg[a] -= 1;
                deg[b] -= 1;
            }
        }
    }
    let mut sets = Vec::new();
    rec(&pairs, 0, m, &mut pick, &mut vec![0; order], &mut sets);
    for s in sets {
        let edges: Vec<_> = s.iter().map(|&i| pairs[i]).collect();
        let g = Graph::from_edges(order, &edges).expect("valid edges");
        if g.is_connected() && !found.iter().any(|h| are_isomorphic(h, &g)) {
            found.push(g);
        }
    }
    found
}

fn verify_cubic(order: i64, lower: i64, smallest: &str) -> bool {
    let Ok(s) = Graph::from_graph6(smallest) else { return false };
    let size = s.n();
    let mut with_eig = Vec::new();
    for v in (4..=size).step_by(2) {
        for g in connected_cubic_graphs(v) {
            if eigenvalue_multiplicity(&g.adjacency(), -3).unwrap_or(0) > 0 {
                with_eig.push(g);
            }
        }
    }
    with_eig.len() == 1 && are_isomorphic(&with_eig[0], &s) && lower * size as i64 == order
}

fn verify_tight(quotient: &[Vec<i64>], eigenvalues: &[i64], spectrum: &[(i64, i64)]) -> bool {
    let m = quotient.len();
    if m == 0 || quotient.iter().any(|r| r.len() != m) || eigenvalues.len() != m {
        return false;
    }
    let data: Vec<i64> = quotient.iter().flatten().copied().collect();
    let Ok(q) = IntMatrix::from_i64(m, m, &data) else { return false };
    match q.char_poly() {
        Ok(p) if p == IntPoly::from_roots(eigenvalues) => {}
        _ => return false,
    }
    let mut mu = eigenvalues.to_vec();
    mu.sort_unstable_by(|a, b| b.cmp(a));
    let mut lam: Vec<i64> = spectrum.iter().flat_map(|&(t, k)| std::iter::repeat(t).take(k.max(0) as usize)).collect();
    lam.sort_unstable_by(|a, b| b.cmp(a));
    let n = lam.len();
    if n < m {
        return false;
    }
    (0..=m).any(|k| (0..m).all(|i| mu[i] == if i < k { lam[i] } else { lam[n - m + i] }))
}

fn apex_graph(base: &Graph, nbrs: &[usize]) -> Graph {
    let n = base.n();
    let mut g = Graph::new(n + 1);
    for (x, y) in base.edges() {
        g.set_edge(x, y);
    }
    for &x in nbrs {
        g.set_edge(x, n);
    }
    g
}

/// All apex extensions of `base` whose apex has `d` neighbours.
pub(crate) fn apex_extensions(base: &Graph, d: usize) -> Vec<Graph> {
    let n = base.n();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize == d {
            let nbrs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            out.push(apex_graph(base, &nbrs));
        }
    }
    out
}

fn verify_cases(base: &str, d: usize, cases: &[String]) -> bool {
    let Ok(b) = Graph::from_graph6(base) else { return false };
    if b.n() > 20 {
        return false;
    }
    let Ok(cs) = cases.iter().map(|c| Graph::from_graph6(c)).collect::<Result<Vec<_>, _>>() else { return false };
    let mut used = vec![false; cs.len()];
    for g in apex_extensions(&b, d) {
        match cs.iter().position(|c| are_isomorphic(c, &g)) {
            Some(i) => used[i] = true,
            None => return false,
        }
    }
    used.iter().all(|&u| u)
}

fn verify_link(source: &[i64; 6], target: &[i64; 6]) -> bool {
    let [n, k1, k2, t0, t1, t2] = *source;
    let Ok(p) = complement_pair_constraints(t0, t1, t2) else { return false };
    let mut ks = [p.k1, p.k2];
    let mut src = [k1, k2];
    ks.sort_unstable();
    src.sort_unstable();
    let mut comp = [n - 1 - k1, n - 1 - k2];
    let mut tk = [target[1], target[2]];
    comp.sort_unstable();
    tk.sort_unstable();
    p.n == n && ks == src && target[0] == n && comp == tk && [p.theta0c, p.theta1c, p.theta2c] == target[3..]
}

/// Σ over cells of the forced common neighbours of adjacent x ∈ V_i, y ∈ V_j (x, y excluded).
pub(crate) fn pigeonhole_bound(sizes: [i64; 2], q: [[i64; 2]; 2], (i, j): (usize, usize)) -> i64 {
    (0..2)
        .map(|l| {
            let (x_in, y_in) = ((i == l) as i64, (j == l) as i64);
            let a = q[i][l] - y_in;
            let b = q[j][l] - x_in;
            (a + b - (sizes[l] - x_in - y_in)).max(0)
        })
        .sum()
}
