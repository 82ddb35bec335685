/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    rows: Vec<Vec<u64>>,
}

impl AbstractGraph {
    /// Self-loops are ignored; repeated edges are merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> AbstractGraph {
        let words = n.div_ceil(64);
        let mut g = AbstractGraph {
            n,
            adj: vec![Vec::new(); n],
            rows: vec![vec![0; words]; n],
        };
        for (u, v) in edges {
            g.insert(u, v);
        }
        for a in &mut g.adj {
            a.sort_unstable();
        }
        g
    }

    pub fn empty(n: usize) -> AbstractGraph {
        Self::new(n, [])
    }

    pub fn complete(n: usize) -> AbstractGraph {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn path(n: usize) -> AbstractGraph {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> AbstractGraph {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Hub `0` joined to a cycle on `1..n`.
    pub fn wheel(n: usize) -> AbstractGraph {
        let rim = n - 1;
        Self::new(
            n,
            (1..n).map(|i| (0, i)).chain((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim))),
        )
    }

    fn insert(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        if u == v || self.has_edge(u, v) {
            return;
        }
        self.rows[u][v / 64] |= 1 << (v % 64);
        self.rows[v][u / 64] |= 1 << (u % 64);
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// A copy with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> AbstractGraph {
        let mut g = self.clone();
        g.insert(u, v);
        g.adj[u].sort_unstable();
        g.adj[v].sort_unstable();
        g
    }

    /// The subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> AbstractGraph {
        let mut edges = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    edges.push((a, b));
                }
            }
        }
        AbstractGraph::new(vertices.len(), edges)
    }

    /// True if `colors` assigns different values to the ends of every edge.
    pub fn is_proper(&self, colors: &[usize]) -> bool {
        colors.len() == self.n
            && (0..self.n).all(|u| self.adj[u].iter().all(|&v| colors[u] != colors[v]))
    }

    pub fn contains_k4(&self) -> bool {
        for (a, b) in self.edges() {
            let common: Vec<usize> = self.adj[a]
                .iter()
                .copied()
                .filter(|&c| c > b && self.has_edge(b, c))
                .collect();
            for (i, &c) in common.iter().enumerate() {
                if common[i + 1..].iter().any(|&d| self.has_edge(c, d)) {
                    return true;
                }
            }
        }
        false
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl AsRef<AbstractGraph> for AbstractGraph {
    fn as_ref(&self) -> &AbstractGraph {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let w = AbstractGraph::wheel(6);
        assert_eq!(w.edge_count(), 10);
        assert_eq!(w.degree_sequence(), vec![5, 3, 3, 3, 3, 3]);
        assert!(!w.contains_k4());
        assert!(AbstractGraph::complete(4).contains_k4());
        assert_eq!(AbstractGraph::cycle(5).edges().len(), 5);
        assert_eq!(AbstractGraph::path(3).edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn wide_graphs_use_several_words() {
        let g = AbstractGraph::path(130);
        assert!(g.has_edge(64, 65) && g.has_edge(128, 129));
        assert!(!g.has_edge(0, 129));
        let h = g.induced(&[127, 128, 129]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn proper_coloring_check() {
        let g = AbstractGraph::complete(3);
        assert!(g.is_proper(&[0, 1, 2]));
        assert!(!g.is_proper(&[0, 1, 1]));
        assert!(!g.is_proper(&[0, 1]));
    }
}
