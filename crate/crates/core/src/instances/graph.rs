use super::InstanceError;
use crate::bitset::Bitset;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Bitset>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self { n, adj: vec![Bitset::new(n); n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        if n >= 3 {
            for u in 0..n {
                g.link(u, (u + 1) % n);
            }
        } else if n == 2 {
            g.link(0, 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.link(u - 1, u);
        }
        g
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(InstanceError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(InstanceError::SelfLoop(u));
            }
            if !g.link(u, v) {
                return Err(InstanceError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate over unordered pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// Inserts edge `{u, v}`; returns false if it was already present.
    pub(crate) fn link(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> Bitset {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bitset::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut adj: Vec<Bitset> = self.adj.iter().map(Bitset::complement).collect();
        for (v, row) in adj.iter_mut().enumerate() {
            row.remove(v);
        }
        Graph { n: self.n, adj }
    }

    /// Adds `extra` isolated vertices after the existing ones.
    pub fn padded(&self, extra: usize) -> Graph {
        let n = self.n + extra;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        g
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    pub fn vertex_set(&self, vertices: &[usize]) -> Bitset {
        Bitset::from_iter(self.n, vertices.iter().copied())
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v))
        })
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v))
        })
    }

    pub fn is_dominating(&self, vertices: &[usize]) -> bool {
        let mut covered = Bitset::new(self.n);
        for &v in vertices {
            if v >= self.n {
                return false;
            }
            covered.insert(v);
            covered.union_with(&self.adj[v]);
        }
        covered.count() == self.n
    }

    pub fn is_vertex_cover(&self, vertices: &[usize]) -> bool {
        let set = self.vertex_set(vertices);
        self.edges().iter().all(|&(u, v)| set.contains(u) || set.contains(v))
    }

    /// Whether the subgraph induced by `vertices` is bipartite (BFS 2-colouring).
    pub fn induces_bipartite(&self, vertices: &[usize]) -> bool {
        let inside = self.vertex_set(vertices);
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in vertices {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.adj[u].iter().filter(|&w| inside.contains(w)) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    }

    #[test]
    fn five_cycle_is_self_complementary() {
        // 0-1-2-3-4-0 complements to the pentagram 0-2-4-1-3-0.
        let pentagram = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(Graph::cycle(5).complement(), pentagram);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(InstanceError::SelfLoop(0)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(InstanceError::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(InstanceError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn predicates() {
        let c5 = Graph::cycle(5);
        assert!(c5.is_independent(&[0, 2]));
        assert!(!c5.is_independent(&[0, 1]));
        assert!(c5.is_clique(&[3, 4]));
        assert!(c5.is_dominating(&[0, 2]));
        assert!(!c5.is_dominating(&[0]));
        assert!(c5.is_vertex_cover(&[0, 1, 3]));
        assert!(!c5.induces_bipartite(&[0, 1, 2, 3, 4]));
        assert!(c5.induces_bipartite(&[0, 1, 2, 3]));
        assert!(Graph::cycle(6).induces_bipartite(&[0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn padding_keeps_edges() {
        let g = Graph::path(3).padded(2);
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }
}
