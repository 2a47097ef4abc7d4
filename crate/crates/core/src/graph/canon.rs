//! Canonical labeling by equitable refinement and individualization with automorphism pruning.

use super::Graph;
use std::cmp::Ordering;

type Cells = Vec<Vec<usize>>;

/// Refines `cells` to the coarsest equitable partition finer than it.
/// Subcells are ordered by neighbour count, so the result is label-invariant.
fn refine(g: &Graph, cells: &mut Cells) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mask = g.mask(&cells[s]);
            let mut next = Vec::with_capacity(cells.len() + 4);
            for c in cells.drain(..) {
                if c.len() == 1 {
                    next.push(c);
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = c.iter().map(|&v| (g.neighbours_in(v, &mask), v)).collect();
                if keyed.iter().all(|k| k.0 == keyed[0].0) {
                    next.push(c);
                    continue;
                }
                changed = true;
                keyed.sort_unstable();
                let mut cur = vec![keyed[0].1];
                for w in keyed.windows(2) {
                    if w[1].0 != w[0].0 {
                        next.push(std::mem::take(&mut cur));
                    }
                    cur.push(w[1].1);
                }
                next.push(cur);
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

fn initial_cells(g: &Graph) -> Cells {
    let mut cells: Cells = vec![(0..g.n()).collect()];
    if g.n() > 0 {
        refine(g, &mut cells);
    }
    cells
}

fn leaf_code(g: &Graph, cells: &Cells) -> (Vec<usize>, Vec<u64>) {
    let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let n = order.len();
    let mut code = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                code[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    (order, code)
}

struct Leaf {
    path: Vec<usize>,
    order: Vec<usize>,
    code: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut x = x;
    while p[x] != r {
        let nx = p[x];
        p[x] = r;
        x = nx;
    }
    r
}

impl Search<'_> {
    /// Automorphism mapping leaf `a` onto leaf `b` (same code).
    fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut gamma = vec![0; a.len()];
        for (x, y) in a.iter().zip(b) {
            gamma[*x] = *y;
        }
        gamma
    }

    fn orbit_roots(&self, fixed: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut p: Vec<usize> = (0..n).collect();
        for gamma in self.gens.iter().filter(|gm| fixed.iter().all(|&v| gm[v] == v)) {
            for x in 0..n {
                let (a, b) = (find(&mut p, x), find(&mut p, gamma[x]));
                if a != b {
                    p[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|x| find(&mut p, x)).collect()
    }

    /// Returns `Some(level)` to abandon everything below the node at `level`.
    fn visit(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            let (order, code) = leaf_code(self.g, &cells);
            let leaf = Leaf { path: path.clone(), order, code };
            let Some(first) = &self.first else {
                self.best = Some(Leaf { path: leaf.path.clone(), order: leaf.order.clone(), code: leaf.code.clone() });
                self.first = Some(leaf);
                return None;
            };
            if leaf.code == first.code {
                self.gens.push(Self::automorphism(&first.order, &leaf.order));
                return Some(common_prefix(path, &first.path));
            }
            let best = self.best.as_ref().expect("best set with first");
            return match leaf.code.cmp(&best.code) {
                Ordering::Less => {
                    self.best = Some(leaf);
                    None
                }
                Ordering::Equal => {
                    self.gens.push(Self::automorphism(&best.order, &leaf.order));
                    Some(common_prefix(path, &best.path))
                }
                Ordering::Greater => None,
            };
        };
        let children = cells[t].clone();
        let mut tried: Vec<usize> = Vec::new();
        let mut seen_gens = usize::MAX;
        let mut roots = Vec::new();
        for v in children {
            if !tried.is_empty() {
                if seen_gens != self.gens.len() {
                    roots = self.orbit_roots(path);
                    seen_gens = self.gens.len();
                }
                if tried.iter().any(|&u| roots[u] == roots[v]) {
                    continue;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..t].iter().cloned());
            next.push(vec![v]);
            next.push(cells[t].iter().copied().filter(|&u| u != v).collect());
            next.extend(cells[t + 1..].iter().cloned());
            refine(self.g, &mut next);
            path.push(v);
            let r = self.visit(next, path);
            path.pop();
            tried.push(v);
            if let Some(l) = r {
                if l < depth {
                    return Some(l);
                }
            }
        }
        None
    }
}

/// A permutation `p` such that relabeling vertex `v` as `p[v]` gives the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return vec![];
    }
    let mut s = Search { g, first: None, best: None, gens: Vec::new() };
    s.visit(initial_cells(g), &mut Vec::new());
    let order = s.best.expect("search reaches a leaf").order;
    let mut label = vec![0; n];
    for (i, v) in order.into_iter().enumerate() {
        label[v] = i;
    }
    label
}

/// graph6 bytes of the canonically relabeled graph; equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    g.permute(&canonical_labeling(g)).to_graph6().into_bytes()
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && {
        let (mut da, mut db) = (a.degrees(), b.degrees());
        da.sort_unstable();
        db.sort_unstable();
        da == db
    } && canonical_form(a) == canonical_form(b)
}
