use crate::graph::Graph;

/// Partitions of n into parts ≥ 3, nondecreasing parts, ordered by number of parts then lexicographically.
pub fn cycle_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in min..=rest {
            if rest - p != 0 && rest - p < p {
                continue;
            }
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 3 {
        go(n, 3, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Disjoint union of cycles with the given lengths, vertices numbered cycle by cycle.
pub fn cycles_graph(lengths: &[usize]) -> Graph {
    lengths.iter().fold(Graph::new(0), |g, &l| g.disjoint_union(&Graph::cycle(l)))
}

/// All disjoint unions of cycles on n vertices, one per cycle type.
pub fn unions_of_cycles(n: usize) -> Vec<Graph> {
    cycle_partitions(n).iter().map(|p| cycles_graph(p)).collect()
}

/// Sorted cycle lengths if `g` is 2-regular.
pub fn cycle_type(g: &Graph) -> Option<Vec<usize>> {
    if (0..g.n()).any(|x| g.degree(x) != 2) {
        return None;
    }
    let mut t: Vec<usize> = g.components().iter().map(Vec::len).collect();
    t.sort_unstable();
    Some(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(cycle_partitions(9), vec![vec![9], vec![3, 6], vec![4, 5], vec![3, 3, 3]]);
        assert_eq!(cycle_partitions(3), vec![vec![3]]);
        assert_eq!(cycle_partitions(6), vec![vec![6], vec![3, 3]]);
        assert!(cycle_partitions(2).is_empty());
    }

    #[test]
    fn types() {
        let gs = unions_of_cycles(9);
        assert_eq!(gs.len(), 4);
        assert_eq!(cycle_type(&gs[1]), Some(vec![3, 6]));
        assert_eq!(cycle_type(&Graph::path(4)), None);
    }
}
