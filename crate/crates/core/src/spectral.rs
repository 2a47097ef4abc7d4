//! Exact certification of three-eigenvalue graphs, Perron data, classification and
//! spectral predictions for complements and switchings.

use crate::error::CertifyError;
use crate::graph::{quotient, valency_partition, Graph, QuotientMatrix};
use crate::linalg::{isqrt_i64, IntMatrix};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::fmt;

/// The spectrum {[θ₀]¹, [θ₁]^m₁, [θ₂]^m₂} of a connected graph with three eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Spectrum3 {
    Integral { theta0: i64, theta1: i64, theta2: i64, m1: usize, m2: usize },
    /// θ₁, θ₂ are the conjugate roots of x² − sum·x + product; both have multiplicity `m`.
    Quadratic { theta0: i64, sum: i64, product: i64, m: usize },
    /// K_{a,b}: θ₀ = √nm, θ₁ = 0, θ₂ = −√nm.
    CompleteBipartite { nm: i64, n: usize },
}

impl Spectrum3 {
    pub fn integral(theta0: i64, theta1: i64, theta2: i64, m1: usize, m2: usize) -> Self {
        Spectrum3::Integral { theta0, theta1, theta2, m1, m2 }
    }

    pub fn n(&self) -> usize {
        match *self {
            Spectrum3::Integral { m1, m2, .. } => 1 + m1 + m2,
            Spectrum3::Quadratic { m, .. } => 1 + 2 * m,
            Spectrum3::CompleteBipartite { n, .. } => n,
        }
    }

    pub fn is_integral(&self) -> bool {
        match self {
            Spectrum3::Integral { .. } => true,
            Spectrum3::CompleteBipartite { nm, .. } => isqrt_i64(*nm).is_some(),
            Spectrum3::Quadratic { .. } => false,
        }
    }

    /// (θ₀, θ₁, θ₂) when all three are integers.
    pub fn thetas(&self) -> Option<(i64, i64, i64)> {
        match *self {
            Spectrum3::Integral { theta0, theta1, theta2, .. } => Some((theta0, theta1, theta2)),
            Spectrum3::CompleteBipartite { nm, .. } => isqrt_i64(nm).map(|r| (r, 0, -r)),
            Spectrum3::Quadratic { .. } => None,
        }
    }

    /// (m₁, m₂).
    pub fn multiplicities(&self) -> (usize, usize) {
        match *self {
            Spectrum3::Integral { m1, m2, .. } => (m1, m2),
            Spectrum3::Quadratic { m, .. } => (m, m),
            Spectrum3::CompleteBipartite { n, .. } => (n - 2, 1),
        }
    }

    /// θ₁ + θ₂ and θ₁θ₂, always integers.
    pub fn sum_product(&self) -> (i64, i64) {
        match *self {
            Spectrum3::Integral { theta1, theta2, .. } => (theta1 + theta2, theta1 * theta2),
            Spectrum3::Quadratic { sum, product, .. } => (sum, product),
            Spectrum3::CompleteBipartite { nm, .. } => {
                // θ₁ = 0 so the product vanishes; the sum −√nm is reported only when integral.
                (isqrt_i64(nm).map_or(0, |r| -r), 0)
            }
        }
    }

    /// Eigenvalues with multiplicities, largest first.
    pub fn eigenvalues(&self) -> Vec<(QuadValue, usize)> {
        match *self {
            Spectrum3::Integral { theta0, theta1, theta2, m1, m2 } => vec![
                (QuadValue::int(theta0), 1),
                (QuadValue::int(theta1), m1),
                (QuadValue::int(theta2), m2),
            ],
            Spectrum3::Quadratic { theta0, sum, product, m } => {
                let d = sum * sum - 4 * product;
                vec![(QuadValue::int(theta0), 1), (QuadValue::new(sum, 1, d), m), (QuadValue::new(sum, -1, d), m)]
            }
            Spectrum3::CompleteBipartite { nm, n } => vec![
                (QuadValue::new(0, 1, 4 * nm), 1),
                (QuadValue::int(0), n - 2),
                (QuadValue::new(0, -1, 4 * nm), 1),
            ],
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Spectrum3::Integral { .. } => "integral",
            Spectrum3::Quadratic { .. } => "quadratic",
            Spectrum3::CompleteBipartite { .. } => "complete_bipartite",
        }
    }

    pub fn to_json(&self) -> Value {
        let ev = self.eigenvalues();
        let show = |v: &QuadValue| match v.as_integer() {
            Some(i) => json!(i),
            None => json!(v.to_string()),
        };
        json!({
            "theta0": show(&ev[0].0),
            "theta1": show(&ev[1].0),
            "theta2": show(&ev[2].0),
            "m1": ev[1].1,
            "m2": ev[2].1,
            "kind": self.kind(),
        })
    }
}

impl fmt::Display for Spectrum3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.eigenvalues().iter().map(|(v, m)| format!("[{v}]^{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Exact value (a + s·√d)/2 with s ∈ {−1, 0, 1}; when s ≠ 0, d is positive and not a perfect square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadValue {
    a: i64,
    s: i8,
    d: i64,
}

impl QuadValue {
    pub fn int(x: i64) -> Self {
        QuadValue { a: 2 * x, s: 0, d: 0 }
    }

    /// (a + s·√d)/2, normalized.
    pub fn new(a: i64, s: i8, d: i64) -> Self {
        assert!(d >= 0, "negative discriminant");
        if s == 0 || d == 0 {
            return QuadValue { a, s: 0, d: 0 };
        }
        match isqrt_i64(d) {
            Some(r) => QuadValue { a: a + s as i64 * r, s: 0, d: 0 },
            None => QuadValue { a, s: s.signum(), d },
        }
    }

    /// Both eigenvalues of a 2×2 integer matrix, larger first.
    pub fn eig2(m: [[i64; 2]; 2]) -> [QuadValue; 2] {
        let tr = m[0][0] + m[1][1];
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let disc = tr * tr - 4 * det;
        [QuadValue::new(tr, 1, disc), QuadValue::new(tr, -1, disc)]
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.s == 0 && self.a % 2 == 0).then_some(self.a / 2)
    }

    pub fn to_f64(&self) -> f64 {
        (self.a as f64 + self.s as f64 * (self.d as f64).sqrt()) / 2.0
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 0 {
            return if self.a % 2 == 0 { write!(f, "{}", self.a / 2) } else { write!(f, "{}/2", self.a) };
        }
        let sign = if self.s > 0 { "+" } else { "-" };
        if self.a == 0 && self.d % 4 == 0 {
            let pre = if self.s < 0 { "-" } else { "" };
            return write!(f, "{pre}√{}", self.d / 4);
        }
        write!(f, "({} {sign} √{})/2", self.a, self.d)
    }
}

/// α data: α_x² per vertex and the products α_iα_j per valency-class pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerronData {
    pub alpha_sq: Vec<i64>,
    pub valencies: Vec<usize>,
    /// Distinct valencies, decreasing; class i holds the vertices of valency `class_valencies[i]`.
    pub class_valencies: Vec<usize>,
    pub alpha_sq_by_class: Vec<i64>,
    /// α_iα_j, `None` when irrational (cross pairs of a complete bipartite graph with non-square product).
    pub alpha_prod: Vec<Vec<Option<i64>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Label {
    #[serde(rename = "regular/srg")]
    RegularSrg,
    #[serde(rename = "biregular")]
    Biregular,
    #[serde(rename = "cone")]
    Cone,
    #[serde(rename = "complete-bipartite")]
    CompleteBipartite,
    #[serde(rename = "complement-disconnected")]
    ComplementDisconnected,
}

impl Label {
    pub fn as_str(&self) -> &'static str {
        match self {
            Label::RegularSrg => "regular/srg",
            Label::Biregular => "biregular",
            Label::Cone => "cone",
            Label::CompleteBipartite => "complete-bipartite",
            Label::ComplementDisconnected => "complement-disconnected",
        }
    }
}

fn complete_bipartite_sides(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for y in g.neighbours(x) {
            if side[y] == u8::MAX {
                side[y] = 1 - side[x];
                stack.push(y);
            } else if side[y] == side[x] {
                return None;
            }
        }
    }
    let a = side.iter().filter(|&&s| s == 0).count();
    (g.edge_count() == a * (n - a)).then_some((a, n - a))
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in g.neighbours(x) {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    stack.push(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
    }
    true
}

/// Certifies that `g` is connected with exactly three distinct eigenvalues and extracts its Perron data.
pub fn certify(g: &Graph) -> Result<(Spectrum3, PerronData), CertifyError> {
    let n = g.n();
    if n < 2 {
        return Err(CertifyError::TooSmall);
    }
    if !g.is_connected() {
        return Err(CertifyError::Disconnected);
    }
    if let Some((a, b)) = complete_bipartite_sides(g) {
        if n < 3 {
            return Err(CertifyError::NotThreeEigenvalues(2));
        }
        let s = Spectrum3::CompleteBipartite { nm: (a * b) as i64, n };
        let p = perron(g, &s)?;
        return Ok((s, p));
    }
    let mp = g.adjacency_int().minimal_polynomial()?;
    let deg = mp.degree().unwrap_or(0);
    if deg != 3 {
        return Err(CertifyError::NotThreeEigenvalues(deg));
    }
    let roots = mp.integer_roots();
    let two_e = 2 * g.edge_count() as i64;
    let spectrum = match roots.len() {
        3 => {
            let r: Vec<i64> = roots.iter().map(|x| x.to_i64().expect("root fits i64")).collect();
            let (t2, t1, t0) = (r[0], r[1], r[2]);
            let a = g.adjacency();
            let m1 = crate::linalg::eigenvalue_multiplicity(&a, t1)?;
            let m2 = crate::linalg::eigenvalue_multiplicity(&a, t2)?;
            let m0 = crate::linalg::eigenvalue_multiplicity(&a, t0)?;
            if m0 != 1 || 1 + m1 + m2 != n {
                return Err(CertifyError::PerronInconsistent(format!(
                    "multiplicities {m0}+{m1}+{m2} do not describe a connected graph on {n} vertices"
                )));
            }
            let (m1i, m2i) = (m1 as i64, m2 as i64);
            if t0 + m1i * t1 + m2i * t2 != 0 || t0 * t0 + m1i * t1 * t1 + m2i * t2 * t2 != two_e {
                return Err(CertifyError::TraceMismatch);
            }
            Spectrum3::integral(t0, t1, t2, m1, m2)
        }
        1 => {
            let r = &roots[0];
            let (q, rem) = mp.div_linear(r);
            debug_assert!(rem.is_zero());
            let c = q.coeffs();
            let t0 = r.to_i64().expect("root fits i64");
            let (sum, product) = (-c[1].to_i64().expect("fits"), c[0].to_i64().expect("fits"));
            if !g.is_regular() {
                return Err(CertifyError::PerronInconsistent(
                    "irrational eigenvalue pair on a graph that is neither regular nor complete bipartite".into(),
                ));
            }
            if (n - 1) % 2 != 0 {
                return Err(CertifyError::TraceMismatch);
            }
            let m = (n - 1) / 2;
            let mi = m as i64;
            if t0 + mi * sum != 0 || t0 * t0 + mi * (sum * sum - 2 * product) != two_e {
                return Err(CertifyError::TraceMismatch);
            }
            Spectrum3::Quadratic { theta0: t0, sum, product, m }
        }
        k => {
            return Err(CertifyError::PerronInconsistent(format!(
                "minimal polynomial {mp} has {k} integer roots"
            )))
        }
    };
    let p = perron(g, &spectrum)?;
    Ok((spectrum, p))
}

/// Reads α off the rank-one matrix (A − θ₁I)(A − θ₂I) = αα⊤ and checks it entrywise.
fn perron(g: &Graph, s: &Spectrum3) -> Result<PerronData, CertifyError> {
    let n = g.n();
    let deg = g.degrees();
    let vp = valency_partition(g);
    let class_valencies: Vec<usize> = vp.cells().iter().map(|c| deg[c[0]]).collect();
    let mut class_of = vec![0; n];
    for (i, c) in vp.cells().iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let classes = class_valencies.len();
    if let Spectrum3::CompleteBipartite { .. } = s {
        // A² + √nm·A = αα⊤ with θ₁ = 0: α_x² = d_x, α_xα_y = ν_xy within sides, √nm across.
        let cb = complete_bipartite_sides(g).expect("checked by caller");
        let alpha_sq: Vec<i64> = deg.iter().map(|&d| d as i64).collect();
        let (a, b) = (cb.0 as i64, cb.1 as i64);
        let cross = isqrt_i64(a * b);
        let mut alpha_prod = vec![vec![None; classes]; classes];
        for i in 0..classes {
            for j in 0..classes {
                alpha_prod[i][j] = if i == j && classes == 2 {
                    Some(class_valencies[i] as i64)
                } else {
                    cross
                };
            }
        }
        let alpha_sq_by_class = class_valencies.iter().map(|&k| k as i64).collect();
        return Ok(PerronData { alpha_sq, valencies: deg, class_valencies, alpha_sq_by_class, alpha_prod });
    }
    let (sum, product) = s.sum_product();
    let mut alpha_sq = Vec::with_capacity(n);
    for x in 0..n {
        let v = deg[x] as i64 + product;
        if v < 1 {
            return Err(CertifyError::PerronInconsistent(format!("α² = {v} at vertex {x}")));
        }
        alpha_sq.push(v);
    }
    let mut alpha_prod: Vec<Vec<Option<i64>>> = vec![vec![None; classes]; classes];
    for x in 0..n {
        for y in x + 1..n {
            let a = g.has_edge(x, y) as i64;
            let m = g.common_neighbours(x, y) as i64 - sum * a;
            if m <= 0 || m * m != alpha_sq[x] * alpha_sq[y] {
                return Err(CertifyError::PerronInconsistent(format!(
                    "(A−θ₁I)(A−θ₂I) is not αα⊤ at ({x},{y}): entry {m}, α² values {} and {}",
                    alpha_sq[x], alpha_sq[y]
                )));
            }
            let (i, j) = (class_of[x], class_of[y]);
            for (p, q) in [(i, j), (j, i)] {
                match alpha_prod[p][q] {
                    None => alpha_prod[p][q] = Some(m),
                    Some(old) if old != m => {
                        return Err(CertifyError::PerronInconsistent(format!(
                            "α_iα_j not constant on classes ({p},{q})"
                        )))
                    }
                    _ => {}
                }
            }
        }
    }
    let alpha_sq_by_class: Vec<i64> = vp.cells().iter().map(|c| alpha_sq[c[0]]).collect();
    for i in 0..classes {
        if alpha_prod[i][i].is_none() {
            alpha_prod[i][i] = Some(alpha_sq_by_class[i]);
        }
    }
    Ok(PerronData { alpha_sq, valencies: deg, class_valencies, alpha_sq_by_class, alpha_prod })
}

/// Structural labels; also re-checks the bipartite and complement-disconnected equivalences.
pub fn classify(g: &Graph, s: &Spectrum3) -> Result<BTreeSet<Label>, CertifyError> {
    let mut labels = BTreeSet::new();
    let deg = g.degrees();
    let n = g.n();
    let mut ds = deg.clone();
    ds.sort_unstable();
    ds.dedup();
    match ds.len() {
        1 => {
            labels.insert(Label::RegularSrg);
        }
        2 => {
            labels.insert(Label::Biregular);
        }
        _ => {}
    }
    let cone = deg.iter().any(|&d| d == n - 1);
    if cone {
        labels.insert(Label::Cone);
    }
    let cb = complete_bipartite_sides(g).is_some();
    if cb {
        labels.insert(Label::CompleteBipartite);
    }
    let theta1_zero = match s {
        Spectrum3::CompleteBipartite { .. } => true,
        Spectrum3::Integral { theta1, .. } => *theta1 == 0,
        Spectrum3::Quadratic { .. } => false,
    };
    let bip = is_bipartite(g);
    if bip != cb || cb != theta1_zero {
        return Err(CertifyError::PerronInconsistent(format!(
            "classification contradiction: bipartite={bip}, complete bipartite={cb}, θ₁=0: {theta1_zero}"
        )));
    }
    let cdis = !g.complement().is_connected();
    if cdis {
        labels.insert(Label::ComplementDisconnected);
        if !(cone || cb) {
            return Err(CertifyError::PerronInconsistent(
                "classification contradiction: complement disconnected but neither cone nor complete bipartite".into(),
            ));
        }
    }
    Ok(labels)
}

/// The 2×2 valency-partition quotient as integers, for biregular certified graphs.
pub fn biregular_quotient(g: &Graph) -> Option<(QuotientMatrix, [[i64; 2]; 2])> {
    let vp = valency_partition(g);
    if vp.len() != 2 {
        return None;
    }
    let (q, eq) = quotient(g, &vp).ok()?;
    if !eq {
        return None;
    }
    let m = q.to_i64()?;
    Some((q, [[m[0][0], m[0][1]], [m[1][0], m[1][1]]]))
}

/// An eigenvalue with a multiplicity lower bound (exact when the bounds sum to n).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedEigenvalue {
    pub value: QuadValue,
    pub at_least: usize,
}

fn merge(mut items: Vec<(QuadValue, usize)>) -> Vec<PredictedEigenvalue> {
    items.sort_by(|a, b| b.0.to_f64().partial_cmp(&a.0.to_f64()).expect("finite"));
    let mut out: Vec<PredictedEigenvalue> = Vec::new();
    for (v, m) in items {
        match out.last_mut() {
            Some(last) if last.value == v => last.at_least += m,
            _ => out.push(PredictedEigenvalue { value: v, at_least: m }),
        }
    }
    out
}

fn q_entries(q: &QuotientMatrix) -> Result<([[i64; 2]; 2], usize, usize), CertifyError> {
    let m = q
        .to_i64()
        .filter(|m| m.len() == 2)
        .ok_or_else(|| CertifyError::PerronInconsistent("not biregular: quotient must be an integer 2×2 matrix".into()))?;
    Ok(([[m[0][0], m[0][1]], [m[1][0], m[1][1]]], q.cell_sizes[0], q.cell_sizes[1]))
}

fn floors(s: &Spectrum3, theta: i64) -> Result<(i64, i64, usize, usize), CertifyError> {
    let Spectrum3::Integral { theta1, theta2, m1, m2, .. } = *s else {
        return Err(CertifyError::PerronInconsistent("prediction needs an integral spectrum".into()));
    };
    let f1 = if theta1 == theta { m1.saturating_sub(1) } else { m1 };
    let f2 = if theta2 == theta { m2.saturating_sub(1) } else { m2 };
    Ok((theta1, theta2, f1, f2))
}

/// Eigenvalues of the complement: −1−θ₁, −1−θ₂ with multiplicity floors, plus the two eigenvalues
/// of the complement's quotient matrix.
pub fn predict_complement_spectrum(
    s: &Spectrum3,
    q: &QuotientMatrix,
    trace_a2: i64,
    n: usize,
) -> Result<Vec<PredictedEigenvalue>, CertifyError> {
    let (m, n1, n2) = q_entries(q)?;
    let (n1, n2) = (n1 as i64, n2 as i64);
    if n1 + n2 != n as i64 {
        return Err(CertifyError::PerronInconsistent("cell sizes do not sum to n".into()));
    }
    let theta0 = s.thetas().map(|t| t.0).unwrap_or(0);
    let tr = m[0][0] + m[1][1];
    let theta = tr - theta0;
    let (t1, t2, f1, f2) = floors(s, theta)?;
    let qbar = [[n1 - 1 - m[0][0], n2 - m[0][1]], [n1 - m[1][0], n2 - 1 - m[1][1]]];
    let [a, b] = QuadValue::eig2(qbar);
    let formula = complement_quotient_formula(n, theta0, theta, trace_a2);
    if formula != [a, b] {
        return Err(CertifyError::PerronInconsistent(format!(
            "complement quotient eigenvalues {a}, {b} disagree with the closed form {}, {}",
            formula[0], formula[1]
        )));
    }
    Ok(merge(vec![(QuadValue::int(-1 - t1), f1), (QuadValue::int(-1 - t2), f2), (a, 1), (b, 1)]))
}

/// (n−2−(θ₀+θ))/2 ± √((n+θ₀+θ)² − 4(θ₀θ + tr A²))/2.
pub fn complement_quotient_formula(n: usize, theta0: i64, theta: i64, trace_a2: i64) -> [QuadValue; 2] {
    let n = n as i64;
    let a = n - 2 - (theta0 + theta);
    let d = (n + theta0 + theta).pow(2) - 4 * (theta0 * theta + trace_a2);
    [QuadValue::new(a, 1, d), QuadValue::new(a, -1, d)]
}

/// Eigenvalues after switching with respect to V₁: θ₁, θ₂ with multiplicity floors plus the
/// eigenvalues of [[k₁₁, n₂−k₁₂], [n₁−k₂₁, k₂₂]].
pub fn predict_switch_spectrum(
    s: &Spectrum3,
    q: &QuotientMatrix,
    n1: usize,
    n2: usize,
) -> Result<Vec<PredictedEigenvalue>, CertifyError> {
    let (m, _, _) = q_entries(q)?;
    let theta0 = s.thetas().map(|t| t.0).unwrap_or(0);
    let theta = m[0][0] + m[1][1] - theta0;
    let (t1, t2, f1, f2) = floors(s, theta)?;
    let qs = [[m[0][0], n2 as i64 - m[0][1]], [n1 as i64 - m[1][0], m[1][1]]];
    let [a, b] = QuadValue::eig2(qs);
    Ok(merge(vec![(QuadValue::int(t1), f1), (QuadValue::int(t2), f2), (a, 1), (b, 1)]))
}

/// Multiplicities of the given integers as eigenvalues of `g`, dropping non-eigenvalues.
pub fn integer_eigenvalue_multiplicities(g: &Graph, candidates: &[i64]) -> Vec<(i64, usize)> {
    let a = g.adjacency_int();
    candidates
        .iter()
        .map(|&t| (t, g.n() - a.shift(&(-t).into()).rank()))
        .filter(|&(_, m)| m > 0)
        .collect()
}

/// Checks a prediction against the exact eigenvalues of `h`. Irrational predicted values are checked
/// by requiring their minimal quadratic to divide the minimal polynomial of `h`.
pub fn prediction_holds(h: &Graph, pred: &[PredictedEigenvalue]) -> bool {
    let a = h.adjacency_int();
    let Ok(mp) = a.minimal_polynomial() else { return false };
    for p in pred {
        match p.value.as_integer() {
            Some(t) => {
                let m = h.n() - a.shift(&(-t).into()).rank();
                if m < p.at_least {
                    return false;
                }
            }
            None => {
                // (2x − a)² − d = 4x² − 4ax + a² − d must divide the minimal polynomial (up to content).
                let quad = crate::linalg::IntPoly::from_i64(&[p.value.a * p.value.a - p.value.d, -4 * p.value.a, 4]);
                if !divides(&quad, &mp) {
                    return false;
                }
            }
        }
    }
    pred.iter().map(|p| p.at_least).sum::<usize>() <= h.n()
}

fn divides(d: &crate::linalg::IntPoly, p: &crate::linalg::IntPoly) -> bool {
    use num_rational::BigRational;
    let dc: Vec<BigRational> = d.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let mut r: Vec<BigRational> = p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let dl = dc.len();
    while r.len() >= dl {
        let lead = r.last().unwrap().clone() / dc.last().unwrap();
        let shift = r.len() - dl;
        for (i, c) in dc.iter().enumerate() {
            r[shift + i] -= &lead * c;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r.is_empty()
}

/// Result of the structural check for θ₁ + θ₂ = −1 and n₁ = n₂.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub theta: i64,
    pub cospectral: bool,
    pub intertwining: bool,
    pub btb: bool,
    pub bbt: bool,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.cospectral && self.intertwining && self.btb && self.bbt
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.cospectral {
            Some("A1 and J-I-A2 are not cospectral")
        } else if !self.intertwining {
            Some("B*A1 != (J-I-A2)*B")
        } else if !self.btb {
            Some("B^T*B != (theta*I-A1)(theta*I-(J-I-A1))")
        } else if !self.bbt {
            Some("B*B^T != (theta*I-A2)(theta*I-(J-I-A2))")
        } else {
            None
        }
    }
}

/// Verifies the block identities for a biregular graph with θ₁ + θ₂ = −1 and n₁ = n₂.
pub fn verify_theta12_minus1_structure(g: &Graph) -> Result<StructureReport, CertifyError> {
    let (s, _) = certify(g)?;
    let Some((t0, t1, t2)) = s.thetas() else {
        return Err(CertifyError::PerronInconsistent("precondition: integral spectrum".into()));
    };
    if t1 + t2 != -1 {
        return Err(CertifyError::PerronInconsistent(format!("precondition: θ₁+θ₂ = {} ≠ −1", t1 + t2)));
    }
    let vp = valency_partition(g);
    if vp.len() != 2 || vp.cells()[0].len() != vp.cells()[1].len() {
        return Err(CertifyError::PerronInconsistent("precondition: biregular with n₁ = n₂".into()));
    }
    let (_, q) = biregular_quotient(g).ok_or_else(|| CertifyError::PerronInconsistent("valency partition not equitable".into()))?;
    let theta = q[0][0] + q[1][1] - t0;
    let (v1, v2) = (&vp.cells()[0], &vp.cells()[1]);
    let m = v1.len();
    let a1 = IntMatrix::from_fn(m, m, |i, j| g.has_edge(v1[i], v1[j]) as i64);
    let a2 = IntMatrix::from_fn(m, m, |i, j| g.has_edge(v2[i], v2[j]) as i64);
    let b = IntMatrix::from_fn(m, m, |i, j| g.has_edge(v2[i], v1[j]) as i64);
    let jmi = IntMatrix::from_fn(m, m, |i, j| (i != j) as i64);
    let c1 = jmi.sub(&a1)?;
    let c2 = jmi.sub(&a2)?;
    let cospectral = a1.char_poly()? == c2.char_poly()?;
    let intertwining = b.mul(&a1)? == c2.mul(&b)?;
    let th = num_bigint::BigInt::from(theta);
    let neg = |x: &IntMatrix| x.scale(&(-1).into());
    let rhs1 = neg(&a1).shift(&th).mul(&neg(&c1).shift(&th))?;
    let rhs2 = neg(&a2).shift(&th).mul(&neg(&c2).shift(&th))?;
    let btb = b.transpose().mul(&b)? == rhs1;
    let bbt = b.mul(&b.transpose())? == rhs2;
    Ok(StructureReport { theta, cospectral, intertwining, btb, bbt })
}

/// JSON certification report.
pub fn certification_report(g: &Graph) -> Result<Value, CertifyError> {
    let (s, p) = certify(g)?;
    let labels = classify(g, &s)?;
    let vp = valency_partition(g);
    let (q, _) = quotient(g, &vp)?;
    let quot: Vec<Vec<Value>> = (0..q.size())
        .map(|i| {
            (0..q.size())
                .map(|j| {
                    let x = q.b.get(i, j);
                    if x.is_integer() {
                        json!(x.to_integer().to_i64())
                    } else {
                        json!(x.to_string())
                    }
                })
                .collect()
        })
        .collect();
    Ok(json!({
        "n": g.n(),
        "spectrum": s.to_json(),
        "valency_array": {
            "sizes": vp.sizes(),
            "valencies": p.class_valencies,
        },
        "quotient": quot,
        "alpha_sq_by_class": p.alpha_sq_by_class,
        "labels": labels.iter().map(Label::as_str).collect::<Vec<_>>(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let mut g = Graph::new(10);
        for i in 0..10 {
            for j in i + 1..10 {
                let (a, b) = (pairs[i], pairs[j]);
                if a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1 {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    fn cone(g: &Graph) -> Graph {
        let n = g.n();
        let mut h = g.disjoint_union(&Graph::new(1));
        for x in 0..n {
            h.set_edge(x, n);
        }
        h
    }

    #[test]
    fn petersen_cone() {
        let (s, p) = certify(&cone(&petersen())).unwrap();
        assert_eq!(s, Spectrum3::integral(5, 1, -2, 5, 5));
        assert_eq!(p.alpha_sq_by_class, vec![8, 2]);
        assert_eq!(p.alpha_prod[0][1], Some(4));
        assert_eq!(s.to_string(), "{[5]^1, [1]^5, [-2]^5}");
    }

    #[test]
    fn bipartite_and_cycles() {
        let (s, _) = certify(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!(s, Spectrum3::CompleteBipartite { nm: 6, n: 5 });
        assert_eq!(s.to_string(), "{[√6]^1, [0]^3, [-√6]^1}");
        let (c5, _) = certify(&Graph::cycle(5)).unwrap();
        assert_eq!(c5, Spectrum3::Quadratic { theta0: 2, sum: -1, product: -1, m: 2 });
        assert_eq!(certify(&Graph::cycle(6)).unwrap_err(), CertifyError::NotThreeEigenvalues(4));
        assert_eq!(certify(&Graph::complete(4)).unwrap_err(), CertifyError::NotThreeEigenvalues(2));
        assert_eq!(certify(&Graph::new(1)).unwrap_err(), CertifyError::TooSmall);
        assert_eq!(certify(&Graph::new(3)).unwrap_err(), CertifyError::Disconnected);
    }

    #[test]
    fn labels() {
        let g = cone(&petersen());
        let (s, _) = certify(&g).unwrap();
        let l = classify(&g, &s).unwrap();
        assert_eq!(l, BTreeSet::from([Label::Biregular, Label::Cone, Label::ComplementDisconnected]));
        let k34 = Graph::complete_bipartite(3, 4);
        let (s, _) = certify(&k34).unwrap();
        let l = classify(&k34, &s).unwrap();
        assert_eq!(l, BTreeSet::from([Label::Biregular, Label::CompleteBipartite, Label::ComplementDisconnected]));
    }

    #[test]
    fn quad_values() {
        assert_eq!(QuadValue::new(4, 1, 16), QuadValue::int(4));
        assert_eq!(QuadValue::eig2([[0, 10], [1, 3]]), [QuadValue::int(5), QuadValue::int(-2)]);
        assert_eq!(QuadValue::new(1, -1, 5).to_string(), "(1 - √5)/2");
        assert_eq!(QuadValue::new(3, 0, 0).to_string(), "3/2");
    }

    #[test]
    fn complement_prediction_petersen_cone() {
        let g = cone(&petersen());
        let (s, _) = certify(&g).unwrap();
        let (q, _) = biregular_quotient(&g).unwrap();
        let pred = predict_complement_spectrum(&s, &q, 2 * g.edge_count() as i64, g.n()).unwrap();
        let vals: Vec<(Option<i64>, usize)> = pred.iter().map(|p| (p.value.as_integer(), p.at_least)).collect();
        // −1−θ₁ = −2 with floor m₁ = 5 (θ = −2 ≠ θ₁), −1−θ₂ = 1 with floor 4, quotient values 6 and 0.
        assert_eq!(vals, vec![(Some(6), 1), (Some(1), 4), (Some(0), 1), (Some(-2), 5)]);
        assert!(prediction_holds(&g.complement(), &pred));
    }
}

#[cfg(test)]
#[path = "spectral_props.rs"]
mod props;
