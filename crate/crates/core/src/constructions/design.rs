use crate::error::ConstructionError;
use crate::graph::Graph;
use std::fmt;

/// Points 0..v and a list of blocks (sorted point sets).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Design {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

impl Design {
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self, ConstructionError> {
        let mut out = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            b.sort_unstable();
            if b.is_empty() {
                return Err(ConstructionError::InvalidDesign("empty block".into()));
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(ConstructionError::InvalidDesign(format!("repeated point in block {b:?}")));
            }
            if b[b.len() - 1] >= v {
                return Err(ConstructionError::InvalidDesign(format!("point out of range in block {b:?}")));
            }
            out.push(b);
        }
        Ok(Design { v, blocks: out })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_size(&self) -> Option<usize> {
        let k = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == k).then_some(k)
    }

    pub fn replication(&self) -> Option<usize> {
        let mut r = vec![0usize; self.v];
        for b in &self.blocks {
            for &x in b {
                r[x] += 1;
            }
        }
        let first = *r.first()?;
        r.iter().all(|&x| x == first).then_some(first)
    }

    /// (v, b, r, k) when every block has size k and every point lies in r blocks.
    pub fn params(&self) -> Option<(usize, usize, usize, usize)> {
        Some((self.v, self.b(), self.replication()?, self.block_size()?))
    }

    /// Number of blocks containing both x and y, for all x, y.
    pub fn pair_counts(&self) -> Vec<Vec<usize>> {
        let mut c = vec![vec![0usize; self.v]; self.v];
        for b in &self.blocks {
            for &x in b {
                for &y in b {
                    c[x][y] += 1;
                }
            }
        }
        c
    }

    /// λ if every pair of distinct points lies in exactly λ blocks and block sizes are constant.
    pub fn lambda(&self) -> Option<usize> {
        self.block_size()?;
        if self.v < 2 {
            return None;
        }
        let c = self.pair_counts();
        let lam = c[0][1];
        let ok = (0..self.v).all(|x| (x + 1..self.v).all(|y| c[x][y] == lam));
        ok.then_some(lam)
    }

    fn intersection(a: &[usize], b: &[usize]) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    /// Parallel classes (each a partition of the points into blocks), if the design is resolvable
    /// with disjointness as the parallel relation.
    pub fn parallel_classes(&self) -> Option<Vec<Vec<usize>>> {
        let mut class = vec![usize::MAX; self.b()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.b() {
            if class[i] != usize::MAX {
                continue;
            }
            let members: Vec<usize> =
                (0..self.b()).filter(|&j| j == i || Self::intersection(&self.blocks[i], &self.blocks[j]) == 0).collect();
            for &j in &members {
                if class[j] != usize::MAX {
                    return None;
                }
                class[j] = classes.len();
            }
            classes.push(members);
        }
        for members in &classes {
            let covered: usize = members.iter().map(|&j| self.blocks[j].len()).sum();
            let pairwise = members
                .iter()
                .all(|&a| members.iter().all(|&b| a == b || Self::intersection(&self.blocks[a], &self.blocks[b]) == 0));
            if covered != self.v || !pairwise {
                return None;
            }
        }
        Some(classes)
    }

    /// μ when the design is a resolvable 2-design whose non-parallel blocks meet in μ points.
    pub fn affine_intersection(&self) -> Option<usize> {
        self.lambda()?;
        let classes = self.parallel_classes()?;
        let mut cls = vec![0; self.b()];
        for (c, members) in classes.iter().enumerate() {
            for &j in members {
                cls[j] = c;
            }
        }
        let mut mu = None;
        for i in 0..self.b() {
            for j in i + 1..self.b() {
                if cls[i] == cls[j] {
                    continue;
                }
                let x = Self::intersection(&self.blocks[i], &self.blocks[j]);
                if *mu.get_or_insert(x) != x {
                    return None;
                }
            }
        }
        mu
    }

    /// Reads "v b" followed by one block per line (0-based point indices).
    pub fn parse(text: &str) -> Result<Self, ConstructionError> {
        let bad = |m: String| ConstructionError::InvalidDesign(m);
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("empty design file".into()))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(format!("bad header token {t:?}"))))
            .collect::<Result<_, _>>()?;
        let [v, b] = head[..] else { return Err(bad("header must be \"v b\"".into())) };
        let blocks: Vec<Vec<usize>> = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse().map_err(|_| bad(format!("bad point {t:?}"))))
                    .collect::<Result<Vec<usize>, _>>()
            })
            .collect::<Result<_, _>>()?;
        if blocks.len() != b {
            return Err(bad(format!("header says {b} blocks, found {}", blocks.len())));
        }
        Design::new(v, blocks)
    }
}

impl fmt::Display for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.v, self.b())?;
        for b in &self.blocks {
            let s: Vec<String> = b.iter().map(usize::to_string).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Points of F_q³ (index x + qy + q²z) with all affine planes as blocks.
pub fn affine_geometry_design(q: u64) -> Result<Design, ConstructionError> {
    if !is_prime(q) {
        return Err(ConstructionError::NotPrime(q));
    }
    let q = q as usize;
    let points: Vec<[usize; 3]> = (0..q * q * q).map(|i| [i % q, (i / q) % q, i / (q * q)]).collect();
    let mut blocks = Vec::new();
    for a in (1..q * q * q).map(|i| [i % q, (i / q) % q, i / (q * q)]) {
        if a.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        for c in 0..q {
            let block: Vec<usize> = points
                .iter()
                .enumerate()
                .filter(|(_, p)| (a[0] * p[0] + a[1] * p[1] + a[2] * p[2]) % q == c)
                .map(|(i, _)| i)
                .collect();
            blocks.push(block);
        }
    }
    Design::new(q * q * q, blocks)
}

/// Points independent, blocks a clique, incidence edges between them; points are 0..v.
pub fn graph_from_design(d: &Design) -> Result<Graph, ConstructionError> {
    if d.lambda().is_none() {
        return Err(ConstructionError::NotTwoDesign(format!("{} points, {} blocks", d.v(), d.b())));
    }
    let (v, b) = (d.v(), d.b());
    let mut g = Graph::new(v + b);
    for (j, blk) in d.blocks().iter().enumerate() {
        for &x in blk {
            g.set_edge(x, v + j);
        }
        for j2 in j + 1..b {
            g.set_edge(v + j, v + j2);
        }
    }
    Ok(g)
}

/// Incidence graph plus edges between blocks meeting in q points, for an affine resolvable
/// (q³, q², q+1)-design.
pub fn total_graph(d: &Design, q: usize) -> Result<Graph, ConstructionError> {
    let fail = |m: &str| ConstructionError::NotAffineResolvable(m.to_string());
    if q < 2 || d.v() != q * q * q || d.block_size() != Some(q * q) {
        return Err(fail("expected q³ points and blocks of size q²"));
    }
    if d.lambda() != Some(q + 1) {
        return Err(fail("pairs of points must lie in q+1 blocks"));
    }
    if d.affine_intersection() != Some(q) {
        return Err(fail("non-parallel blocks must meet in q points"));
    }
    let (v, b) = (d.v(), d.b());
    let mut g = Graph::new(v + b);
    for (j, blk) in d.blocks().iter().enumerate() {
        for &x in blk {
            g.set_edge(x, v + j);
        }
        for j2 in j + 1..b {
            if Design::intersection(blk, &d.blocks()[j2]) == q {
                g.set_edge(v + j, v + j2);
            }
        }
    }
    Ok(g)
}
