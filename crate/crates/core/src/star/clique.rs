use crate::graph::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Resumable state of a fixed-size clique search: roots before `next_root` are finished.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCursor {
    pub next_root: usize,
    pub found: Vec<Vec<usize>>,
    pub done: bool,
}

struct Ordered {
    /// order[p] = vertex at position p (decreasing degree).
    order: Vec<usize>,
    adj: Vec<Vec<u64>>,
}

impl Ordered {
    fn new(h: &Graph) -> Self {
        let n = h.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
        let mut pos = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let words = n.div_ceil(64).max(1);
        let adj = order
            .iter()
            .map(|&v| {
                let mut row = vec![0u64; words];
                for u in h.neighbours(v) {
                    row[pos[u] / 64] |= 1 << (pos[u] % 64);
                }
                row
            })
            .collect();
        Ordered { order, adj }
    }

    fn after(&self, p: usize, set: &[u64]) -> Vec<u64> {
        let mut out = set.to_vec();
        for (w, word) in out.iter_mut().enumerate() {
            let lo = w * 64;
            if p + 1 >= lo + 64 {
                *word = 0;
            } else if p + 1 > lo {
                *word &= !0u64 << (p + 1 - lo);
            }
        }
        out
    }

    /// Upper bound on the clique number of the set via greedy colouring.
    fn colour_bound(&self, set: &[u64], need: usize) -> usize {
        let mut rest = set.to_vec();
        let mut colours = 0;
        while rest.iter().any(|&w| w != 0) {
            colours += 1;
            if colours >= need {
                return colours;
            }
            let mut avail = rest.clone();
            while let Some(p) = first(&avail) {
                avail[p / 64] &= !(1 << (p % 64));
                rest[p / 64] &= !(1 << (p % 64));
                for (a, b) in avail.iter_mut().zip(&self.adj[p]) {
                    *a &= !b;
                }
            }
        }
        colours
    }

    fn extend(&self, clique: &mut Vec<usize>, set: Vec<u64>, size: usize, out: &mut Vec<Vec<usize>>) {
        let need = size - clique.len();
        if need == 0 {
            let mut c: Vec<usize> = clique.iter().map(|&p| self.order[p]).collect();
            c.sort_unstable();
            out.push(c);
            return;
        }
        if count(&set) < need || (need > 2 && self.colour_bound(&set, need) < need) {
            return;
        }
        let mut rest = set;
        while let Some(p) = first(&rest) {
            rest[p / 64] &= !(1 << (p % 64));
            if count(&rest) + 1 < need {
                break;
            }
            let next: Vec<u64> = rest.iter().zip(&self.adj[p]).map(|(a, b)| a & b).collect();
            clique.push(p);
            self.extend(clique, next, size, out);
            clique.pop();
        }
    }

    fn root(&self, r: usize, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let set = self.after(r, &self.adj[r]);
        self.extend(&mut vec![r], set, size, &mut out);
        out
    }
}

fn first(set: &[u64]) -> Option<usize> {
    set.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

/// All cliques of exactly `size` vertices (or the first `limit`), each sorted, in a fixed order.
pub fn find_cliques(h: &Graph, size: usize, limit: Option<usize>) -> Vec<Vec<usize>> {
    let mut cursor = CliqueCursor::default();
    find_cliques_resumable(h, size, limit, &mut cursor, usize::MAX);
    cursor.found
}

/// Processes at most `max_roots` further root vertices, appending to the cursor.
/// Returns true once the search is complete (or the limit is reached).
pub fn find_cliques_resumable(
    h: &Graph,
    size: usize,
    limit: Option<usize>,
    cursor: &mut CliqueCursor,
    max_roots: usize,
) -> bool {
    if cursor.done {
        return true;
    }
    let n = h.n();
    if size == 0 {
        cursor.found = vec![vec![]];
        cursor.done = true;
        return true;
    }
    let ord = Ordered::new(h);
    let end = n.min(cursor.next_root.saturating_add(max_roots));
    let chunk = (rayon::current_num_threads() * 4).max(1);
    let mut r = cursor.next_root;
    while r < end {
        let stop = (r + chunk).min(end);
        let batch: Vec<Vec<Vec<usize>>> = (r..stop).into_par_iter().map(|root| ord.root(root, size)).collect();
        for found in batch {
            cursor.found.extend(found);
        }
        r = stop;
        cursor.next_root = r;
        if let Some(l) = limit {
            if cursor.found.len() >= l {
                cursor.found.truncate(l);
                cursor.done = true;
                return true;
            }
        }
    }
    cursor.done = cursor.next_root >= n;
    cursor.done
}
