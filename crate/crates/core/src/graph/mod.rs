//! Simple undirected graphs on packed bit rows, partitions and canonical labeling.

mod canon;
mod graph6;
mod partition;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling};
pub use graph6::{read_graph6_file, read_graph6_str};
pub use partition::{quotient, valency_partition, Partition, QuotientMatrix};

use crate::error::GraphError;
use crate::linalg::{IntMatrix, RatMatrix};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, bits: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(x, y) in edges {
            g.add_edge(x, y)?;
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric 0/1 matrix given as rows.
    pub fn from_adjacency(rows: &[Vec<u8>]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::new(n);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::InvalidPartition(format!("row {x} has length {}", row.len())));
            }
            for (y, &a) in row.iter().enumerate() {
                if a != 0 {
                    if x == y {
                        return Err(GraphError::SelfLoop(x));
                    }
                    if rows[y][x] == 0 {
                        return Err(GraphError::InvalidPartition(format!("adjacency not symmetric at ({x},{y})")));
                    }
                    g.set_bit(x, y);
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for x in 0..n {
            for y in x + 1..n {
                g.set_edge(x, y);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for x in 0..n {
            g.set_edge(x, (x + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for x in 1..n {
            g.set_edge(x - 1, x);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for x in 0..a {
            for y in a..a + b {
                g.set_edge(x, y);
            }
        }
        g
    }

    #[inline]
    fn set_bit(&mut self, x: usize, y: usize) {
        self.bits[x * self.words + y / 64] |= 1 << (y % 64);
    }

    #[inline]
    fn clear_bit(&mut self, x: usize, y: usize) {
        self.bits[x * self.words + y / 64] &= !(1 << (y % 64));
    }

    /// Adds x~y without range checks; panics on out-of-range vertices.
    pub fn set_edge(&mut self, x: usize, y: usize) {
        assert!(x != y && x < self.n && y < self.n);
        self.set_bit(x, y);
        self.set_bit(y, x);
    }

    pub fn add_edge(&mut self, x: usize, y: usize) -> Result<(), GraphError> {
        for v in [x, y] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v));
            }
        }
        if x == y {
            return Err(GraphError::SelfLoop(x));
        }
        self.set_edge(x, y);
        Ok(())
    }

    pub fn remove_edge(&mut self, x: usize, y: usize) {
        self.clear_bit(x, y);
        self.clear_bit(y, x);
    }

    #[inline]
    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words..(x + 1) * self.words]
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn neighbours(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        bits_iter(self.row(x))
    }

    pub fn degree(&self, x: usize) -> usize {
        self.row(x).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.degree(x)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn common_neighbours(&self, x: usize, y: usize) -> usize {
        self.row(x).iter().zip(self.row(y)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Number of neighbours of `x` inside a vertex mask of `words()` words.
    pub fn neighbours_in(&self, x: usize, mask: &[u64]) -> usize {
        self.row(x).iter().zip(mask).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn mask(&self, vertices: &[usize]) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for &v in vertices {
            m[v / 64] |= 1 << (v % 64);
        }
        m
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbours(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for x in 0..self.n {
            for y in x + 1..self.n {
                if !self.has_edge(x, y) {
                    g.set_edge(x, y);
                }
            }
        }
        g
    }

    /// Seidel switching with respect to `w`: flips adjacency across the cut (W, V∖W).
    pub fn switch(&self, w: &[usize]) -> Result<Graph, GraphError> {
        let mut inside = vec![false; self.n];
        for &v in w {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            inside[v] = true;
        }
        let mut g = self.clone();
        for x in 0..self.n {
            for y in x + 1..self.n {
                if inside[x] != inside[y] {
                    if self.has_edge(x, y) {
                        g.remove_edge(x, y);
                    } else {
                        g.set_edge(x, y);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph, vertices renumbered in ascending original order.
    pub fn induced(&self, s: &[usize]) -> Result<Graph, GraphError> {
        let mut vs = s.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&v) = vs.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange(v));
        }
        let mut g = Graph::new(vs.len());
        for (i, &x) in vs.iter().enumerate() {
            for (j, &y) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(x, y) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for x in 0..self.n {
            for y in self.neighbours(x) {
                if x < y {
                    g.set_edge(perm[x], perm[y]);
                }
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for x in 0..self.n {
            for y in self.neighbours(x).filter(|&y| y > x) {
                g.set_edge(x, y);
            }
        }
        for x in 0..other.n {
            for y in other.neighbours(x).filter(|&y| y > x) {
                g.set_edge(self.n + x, self.n + y);
            }
        }
        g
    }

    pub fn adjacency_int(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| self.has_edge(i, j) as i64)
    }

    pub fn adjacency(&self) -> RatMatrix {
        self.adjacency_int().to_rat()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|x| self.neighbours(x).filter(move |&y| y > x).map(move |y| (x, y))).collect()
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
        graph6::decode(s)
    }
}

pub(crate) fn bits_iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, {})", self.n, self.to_graph6())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let p = Graph::path(4);
        assert_eq!(p.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(p.edge_count(), 3);
        assert!(p.is_connected());
        assert_eq!(p.common_neighbours(0, 2), 1);
        assert_eq!(p.complement().complement(), p);
        assert_eq!(Graph::complete(5).complement(), Graph::new(5));
    }

    #[test]
    fn switching() {
        let k4 = Graph::complete(4);
        let s = k4.switch(&[0]).unwrap();
        assert_eq!(s.degree(0), 0);
        assert_eq!(s.induced(&[1, 2, 3]).unwrap(), Graph::complete(3));
        assert_eq!(k4.switch(&[]).unwrap(), k4);
        assert_eq!(k4.switch(&[0, 1, 2, 3]).unwrap(), k4);
        assert_eq!(s.switch(&[0]).unwrap(), k4);
    }

    #[test]
    fn induced_and_union() {
        let c = Graph::cycle(5);
        assert_eq!(c.induced(&[0, 1, 2, 3, 4]).unwrap(), c);
        assert_eq!(c.induced(&[3]).unwrap(), Graph::new(1));
        let u = Graph::cycle(3).disjoint_union(&Graph::cycle(4));
        assert_eq!(u.components().len(), 2);
        assert!(matches!(c.induced(&[7]), Err(GraphError::VertexOutOfRange(7))));
    }

    #[test]
    fn wide_rows() {
        let g = Graph::cycle(130);
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbours(64).collect::<Vec<_>>(), vec![63, 65]);
        assert_eq!(g.degrees().iter().sum::<usize>(), 260);
    }
}

#[cfg(test)]
mod props;
