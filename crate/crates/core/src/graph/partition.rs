use super::Graph;
use crate::error::GraphError;
use crate::linalg::{Rat, RatMatrix};
use num_bigint::BigInt;

/// Ordered list of disjoint nonempty cells covering the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut seen = vec![false; n];
        for c in &cells {
            if c.is_empty() {
                return Err(GraphError::InvalidPartition("empty cell".into()));
            }
            for &v in c {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange(v));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GraphError::InvalidPartition(format!("vertex {v} in two cells")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(GraphError::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(Partition { cells })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub b: RatMatrix,
    pub cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn size(&self) -> usize {
        self.cell_sizes.len()
    }

    /// Integer entries, if all entries are integral.
    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        let s = self.size();
        (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| {
                        let x = self.b.get(i, j);
                        x.is_integer().then(|| i64::try_from(x.to_integer()).ok()).flatten()
                    })
                    .collect()
            })
            .collect()
    }
}

/// Cells of equal valency, ordered by decreasing valency.
pub fn valency_partition(g: &Graph) -> Partition {
    let deg = g.degrees();
    let mut ds: Vec<usize> = deg.clone();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    ds.dedup();
    let cells = ds
        .iter()
        .map(|&d| (0..g.n()).filter(|&v| deg[v] == d).collect())
        .collect();
    Partition { cells }
}

/// Quotient matrix of `pi` and whether `pi` is equitable.
pub fn quotient(g: &Graph, pi: &Partition) -> Result<(QuotientMatrix, bool), GraphError> {
    if pi.cells.iter().flatten().any(|&v| v >= g.n()) || pi.cells.iter().map(Vec::len).sum::<usize>() != g.n() {
        return Err(GraphError::InvalidPartition("partition does not match graph".into()));
    }
    let s = pi.len();
    let masks: Vec<Vec<u64>> = pi.cells.iter().map(|c| g.mask(c)).collect();
    let mut b = RatMatrix::zeros(s, s);
    let mut equitable = true;
    for (i, ci) in pi.cells.iter().enumerate() {
        for (j, mj) in masks.iter().enumerate() {
            let counts: Vec<usize> = ci.iter().map(|&v| g.neighbours_in(v, mj)).collect();
            if counts.windows(2).any(|w| w[0] != w[1]) {
                equitable = false;
            }
            let total: usize = counts.iter().sum();
            b.set(i, j, Rat::new(BigInt::from(total), BigInt::from(ci.len())));
        }
    }
    Ok((QuotientMatrix { b, cell_sizes: pi.sizes() }, equitable))
}
