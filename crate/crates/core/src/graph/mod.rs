//! Simple undirected graphs on vertices `0..n`, stored as per-vertex bitsets.
//!
//! Constructors for the named families (paths, stars, cycles, cliques), the
//! disjoint union and join compositions, and the clique-split graphs built on
//! top of them. Every constructor labels vertices deterministically.

mod edgelist;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use edgelist::parse_edge_list;
pub use graph6::{parse_graph6, write_graph6};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// Simple undirected graph.
///
/// Row `v` of the adjacency bitset holds the neighbors of `v`. The matrix is
/// kept symmetric with an empty diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Iterator over the set bits of a bitset row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.bits = self.row[self.word];
        }
    }
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and bad indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Decodes an edge mask over the upper-triangle pairs in graph6 bit order:
    /// bit `b` stands for the `b`-th pair of `(0,1), (0,2), (1,2), (0,3), ...`.
    ///
    /// Only meaningful for `n <= 11` (at most 64 pairs).
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.set(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    fn clear(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// Panics if either index is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        self.clear(u, v);
        Ok(())
    }

    /// `G + uv` as a new graph.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// `G - uv` as a new graph.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    /// Degree of `v`. Panics if `v` is out of range; see [`Graph::try_degree`].
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range");
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn try_degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.degree(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree, `None` for the empty vertex set.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        assert!(v < self.n, "vertex {v} out of range");
        let row = self.row(v);
        Neighbors {
            row,
            word: 0,
            bits: row[0],
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Unordered pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.set(i - 1, i);
        }
        g
    }

    /// `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.set(0, i);
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::path(n);
        g.set(0, n - 1);
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                g.set(i, j);
            }
        }
        g
    }

    /// `G1 ⊔ G2`; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v);
        }
        for (u, v) in other.edges() {
            g.set(u + offset, v + offset);
        }
        g
    }

    /// `G1 ∨ G2`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set(u, self.n + v);
            }
        }
        g
    }

    /// `K_k ∨ (K_1 ⊔ K_{n-k-1})`.
    ///
    /// Vertices `0..k` form the hub clique, vertex `k` is the lone vertex of
    /// degree `k`, and `k+1..n` form the clique whose vertices have degree `n-2`.
    pub fn k_n_k(n: usize, k: usize) -> Result<Graph, GraphError> {
        if k < 1 || k + 1 > n {
            return Err(GraphError::InvalidParameter(format!(
                "K_n^k needs 1 <= k <= n-1, got n={n}, k={k}"
            )));
        }
        Ok(
            Graph::complete(k)
                .join(&Graph::complete(1).disjoint_union(&Graph::complete(n - k - 1))),
        )
    }

    /// `K_i ∨ H ∨ K_m`, read as `H ∨ (K_i ⊔ K_m)`.
    ///
    /// Vertices `0..k` carry `hub`, then the `K_i` side, then the `K_m` side.
    pub fn g_split(i: usize, hub: &Graph, m: usize) -> Result<Graph, GraphError> {
        if i < 1 || m < 1 || hub.n() < 1 {
            return Err(GraphError::InvalidParameter(format!(
                "split graph needs i >= 1, m >= 1 and a nonempty hub, got i={i}, k={}, m={m}",
                hub.n()
            )));
        }
        Ok(hub.join(&Graph::complete(i).disjoint_union(&Graph::complete(m))))
    }

    /// Vertices reachable from `start` without entering any vertex in `removed`.
    /// `removed` is indexed by vertex.
    pub fn reachable_avoiding(&self, start: usize, removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        if removed[start] {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !seen[w] && !removed[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Component label per vertex, labels assigned in order of smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            label[s] = next;
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Number of connected components; 0 for the graph on no vertices.
    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    /// True iff exactly one component. The null graph is not connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        if self.n <= 64 {
            // Single-word rows: frontier expansion on bitmasks.
            let full = if self.n == 64 {
                u64::MAX
            } else {
                (1u64 << self.n) - 1
            };
            let mut seen = 1u64;
            let mut frontier = 1u64;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v * self.words];
                }
                frontier = next & !seen;
                seen |= next;
            }
            return seen == full;
        }
        self.component_count() == 1
    }

    /// Sorted (ascending) degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Shortest `u`–`v` path as a vertex list, `None` if unreachable.
    pub fn shortest_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n];
        prev[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for w in self.neighbors(x) {
                if prev[w] == usize::MAX {
                    prev[w] = x;
                    queue.push_back(w);
                }
            }
        }
        if prev[v] == usize::MAX {
            return None;
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = prev[x];
            path.push(x);
        }
        path.reverse();
        Some(path)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        g
    }
}
