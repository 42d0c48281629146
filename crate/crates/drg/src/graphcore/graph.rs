//! The core graph type: simple undirected graphs with bitset adjacency.

use super::bitset::BitSet;
use super::GraphError;
use crate::exactlinalg::RationalMatrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "loops are not allowed");
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.adj[i].remove(j);
        self.adj[j].remove(i);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> &BitSet {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.adj[i].iter() {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Common valency if the graph is regular.
    pub fn regular_valency(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        if (1..self.n).all(|i| self.degree(i) == k) {
            Some(k)
        } else {
            None
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if !self.has_edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Induced subgraph on the given vertices, relabelled in ascending
    /// order of original index.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut g = Graph::empty(vs.len());
        for (a, &i) in vs.iter().enumerate() {
            for (b, &j) in vs.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Local graph at x: the subgraph induced on the neighbors of x.
    pub fn local_graph(&self, x: usize) -> Graph {
        let nb: Vec<usize> = self.adj[x].iter().collect();
        self.induced(&nb)
    }

    /// Line graph: vertices are the edges of the graph in lexicographic
    /// order, adjacent when they share an endpoint.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(GraphError::Edgeless);
        }
        let mut g = Graph::empty(edges.len());
        for (a, &(i, j)) in edges.iter().enumerate() {
            for (b, &(p, q)) in edges.iter().enumerate().skip(a + 1) {
                if i == p || i == q || j == p || j == q {
                    g.add_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Seidel switching on a vertex set S: edges between S and its
    /// complement are toggled, edges inside either side are kept.
    pub fn seidel_switch(&self, s: &[usize]) -> Graph {
        let mut in_s = vec![false; self.n];
        for &v in s {
            in_s[v] = true;
        }
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let crossing = in_s[i] != in_s[j];
                if self.has_edge(i, j) != crossing {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// BFS distances from x; usize::MAX marks unreachable vertices.
    pub fn distances_from(&self, x: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[x] = 0;
        let mut frontier = vec![x];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for w in self.adj[v].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = d;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let dist = self.distances_from(s);
            let comp: Vec<usize> = (0..self.n).filter(|&v| dist[v] != usize::MAX).collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        let comps = self.components();
        if comps.len() > 1 {
            return Err(GraphError::Disconnected(comps));
        }
        let mut d = 0;
        for x in 0..self.n {
            d = d.max(
                self.distances_from(x)
                    .into_iter()
                    .max()
                    .unwrap_or(0),
            );
        }
        Ok(d)
    }

    /// Adjacency matrix over the rationals.
    pub fn adjacency_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.n);
        let one = num_rational::BigRational::from_integer(1.into());
        for i in 0..self.n {
            for j in self.adj[i].iter() {
                m.set(i, j, one.clone());
            }
        }
        m
    }

    /// Number of common neighbors of x and y.
    pub fn common_neighbors(&self, x: usize, y: usize) -> usize {
        self.adj[x].intersection_count(&self.adj[y])
    }
}
