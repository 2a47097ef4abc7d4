use super::Design;
use crate::error::ConstructionError;
use crate::graph::{valency_partition, Graph};
use crate::spectral::{biregular_quotient, certify};
use serde::Serialize;

/// Group divisible design parameters (v, b; r, k; λ₁, λ₂; m, n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GddParams {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub lambda1: i64,
    pub lambda2: i64,
    pub m: usize,
    pub n: usize,
}

impl std::fmt::Display for GddParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "gdd({},{};{},{};{},{};{},{})",
            self.v, self.b, self.r, self.k, self.lambda1, self.lambda2, self.m, self.n
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SideStructure {
    CompleteMultipartite,
    CliqueUnion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GddExtraction {
    pub params: GddParams,
    pub structure: SideStructure,
    /// Points are the vertices of the chosen side (local indices), blocks the other side.
    pub design: Design,
    pub groups: Vec<Vec<usize>>,
}

/// Components if they are all cliques of a common size.
fn equal_cliques(h: &Graph) -> Option<Vec<Vec<usize>>> {
    let comps = h.components();
    let size = comps.first()?.len();
    let ok = comps.iter().all(|c| c.len() == size && c.iter().all(|&x| h.degree(x) == size - 1));
    ok.then_some(comps)
}

/// Reads off the group divisible design carried by the edges between the valency classes.
/// `side` is 1 for the class of larger valency, 2 for the other.
pub fn extract_gdd(g: &Graph, side: usize) -> Result<GddExtraction, ConstructionError> {
    if side != 1 && side != 2 {
        return Err(ConstructionError::InvalidParameters(format!("side must be 1 or 2, got {side}")));
    }
    let (s, perron) = certify(g)?;
    let (t1, t2) = match s.thetas() {
        Some((_, a, b)) => (a, b),
        None => return Err(ConstructionError::InvalidParameters("spectrum is not integral".into())),
    };
    let (_, q) = biregular_quotient(g).ok_or_else(|| ConstructionError::InvalidParameters("not biregular".into()))?;
    let (i, j) = (side - 1, 2 - side);
    let pi = valency_partition(g);
    let (vi, vj) = (&pi.cells()[i], &pi.cells()[j]);
    let ni = vi.len();
    if ni < 2 {
        return Err(ConstructionError::NoRecognizedStructure(side));
    }
    let h = g.induced(vi)?;
    let alpha = perron.alpha_sq_by_class[i];
    let kii = q[i][i];
    let (structure, groups, lambda1, lambda2) = if let Some(c) = equal_cliques(&h).filter(|c| c[0].len() >= 2) {
        (SideStructure::CliqueUnion, c, alpha + t1 + t2 + 1 - kii, alpha)
    } else if let Some(c) = equal_cliques(&h.complement()).filter(|c| c[0].len() >= 2) {
        let gsize = c[0].len() as i64;
        (SideStructure::CompleteMultipartite, c, alpha - kii, alpha + t1 + t2 - kii + gsize)
    } else {
        return Err(ConstructionError::NoRecognizedStructure(side));
    };
    let mut local = vec![usize::MAX; g.n()];
    for (idx, &x) in vi.iter().enumerate() {
        local[x] = idx;
    }
    let blocks: Vec<Vec<usize>> =
        vj.iter().map(|&w| g.neighbours(w).filter(|&x| local[x] != usize::MAX).map(|x| local[x]).collect()).collect();
    let design = Design::new(ni, blocks)?;
    let params = GddParams {
        v: ni,
        b: vj.len(),
        r: q[i][j] as usize,
        k: q[j][i] as usize,
        lambda1,
        lambda2,
        m: groups.len(),
        n: groups[0].len(),
    };
    verify_gdd(&design, &groups, &params)?;
    Ok(GddExtraction { params, structure, design, groups })
}

/// Brute-force check of the GDD property.
pub fn verify_gdd(d: &Design, groups: &[Vec<usize>], p: &GddParams) -> Result<(), ConstructionError> {
    let fail = |m: String| ConstructionError::InvalidDesign(m);
    if d.params() != Some((p.v, p.b, p.r, p.k)) {
        return Err(fail(format!("configuration {:?} does not match {p}", d.params())));
    }
    let mut group_of = vec![usize::MAX; d.v()];
    for (gi, grp) in groups.iter().enumerate() {
        for &x in grp {
            group_of[x] = gi;
        }
    }
    if group_of.contains(&usize::MAX) || groups.iter().any(|grp| grp.len() != p.n) {
        return Err(fail("groups do not partition the points evenly".into()));
    }
    let pc = d.pair_counts();
    for x in 0..d.v() {
        for y in x + 1..d.v() {
            let want = if group_of[x] == group_of[y] { p.lambda1 } else { p.lambda2 };
            if pc[x][y] as i64 != want {
                return Err(fail(format!("points {x},{y} share {} blocks, expected {want}", pc[x][y])));
            }
        }
    }
    Ok(())
}
