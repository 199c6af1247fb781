use crate::instances::Graph;

/// Two copies of `g`; `v_i` of the first copy is joined to `v_j` of the
/// second iff `i = j` or `(v_i, v_j)` is an edge. The largest induced
/// bipartite subgraph of the result has exactly `2 α(g)` vertices.
///
/// Copy one occupies `0..n`, copy two `n..2n`.
pub fn is_to_cb(g: &Graph) -> Graph {
    let n = g.n();
    Graph::from_fn(2 * n, |x, y| {
        let (i, j) = (x % n, y % n);
        let same_copy = (x < n) == (y < n);
        if same_copy {
            g.has_edge(i, j)
        } else {
            i == j || g.has_edge(i, j)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_becomes_k4() {
        assert_eq!(is_to_cb(&Graph::complete(2)), Graph::complete(4));
    }

    #[test]
    fn empty_becomes_matching() {
        let out = is_to_cb(&Graph::empty(3));
        assert_eq!(out.edges(), vec![(0, 3), (1, 4), (2, 5)]);
    }
}
