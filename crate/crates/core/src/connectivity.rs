//! Exact vertex and edge connectivity with cut certificates.
//!
//! `κ` is found by Menger's theorem on the vertex-split network: the minimum,
//! over non-adjacent pairs `(s, t)`, of the number of internally disjoint
//! `s`–`t` paths. Only sources among the first `κ + 1` vertices are needed,
//! since at least one of them lies outside a minimum cut. `κ'` uses unit edge
//! capacities from a fixed source to every other vertex.
//!
//! Conventions: `κ(K_n) = n − 1` with no certificate; disconnected graphs have
//! `κ = κ' = 0` with an empty cut separating two components.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutKind {
    Vertex,
    Edge,
}

/// A set of vertices (or edges) whose removal separates `separated.0` from `separated.1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub kind: CutKind,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<(usize, usize)>,
    pub separated: (usize, usize),
}

impl CutCertificate {
    pub fn size(&self) -> usize {
        match self.kind {
            CutKind::Vertex => self.vertices.len(),
            CutKind::Edge => self.edges.len(),
        }
    }

    /// Checks that deleting the members really separates the recorded pair.
    pub fn separates(&self, g: &Graph) -> bool {
        let (s, t) = self.separated;
        match self.kind {
            CutKind::Vertex => {
                let mut removed = vec![false; g.n()];
                for &v in &self.vertices {
                    removed[v] = true;
                }
                !removed[s] && !removed[t] && !g.reachable_avoiding(s, &removed)[t]
            }
            CutKind::Edge => {
                let mut h = g.clone();
                for &(u, v) in &self.edges {
                    if h.remove_edge(u, v).is_err() {
                        return false;
                    }
                }
                !h.reachable_avoiding(s, &vec![false; g.n()])[t]
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub value: usize,
    /// `None` exactly when the graph is complete (or has no vertices).
    pub certificate: Option<CutCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("brute-force oracle limited to {limit} {what}, got {got}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("class parameter k={k} outside 1..={max}")]
    ClassRange { k: usize, max: usize },
}

/// Unit-capacity max-flow on a dense residual matrix.
struct Network {
    size: usize,
    cap: Vec<u32>,
    prev: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Network {
    fn new(size: usize) -> Self {
        Network {
            size,
            cap: vec![0; size * size],
            prev: vec![usize::MAX; size],
            queue: VecDeque::with_capacity(size),
        }
    }

    fn bfs(&mut self, source: usize, sink: usize) -> bool {
        self.prev.fill(usize::MAX);
        self.prev[source] = source;
        self.queue.clear();
        self.queue.push_back(source);
        while let Some(u) = self.queue.pop_front() {
            let row = &self.cap[u * self.size..(u + 1) * self.size];
            for (w, &c) in row.iter().enumerate() {
                if c > 0 && self.prev[w] == usize::MAX {
                    self.prev[w] = u;
                    if w == sink {
                        return true;
                    }
                    self.queue.push_back(w);
                }
            }
        }
        false
    }

    /// Augments until the flow reaches `limit` or no path remains.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit && self.bfs(source, sink) {
            let mut w = sink;
            while w != source {
                let u = self.prev[w];
                self.cap[u * self.size + w] -= 1;
                self.cap[w * self.size + u] += 1;
                w = u;
            }
            flow += 1;
        }
        flow
    }

    /// Residual reachability from `source`, valid after a max flow.
    fn reachable(&mut self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.size];
        seen[source] = true;
        self.queue.clear();
        self.queue.push_back(source);
        while let Some(u) = self.queue.pop_front() {
            let row = &self.cap[u * self.size..(u + 1) * self.size];
            for (w, &c) in row.iter().enumerate() {
                if c > 0 && !seen[w] {
                    seen[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        seen
    }
}

fn split_network(g: &Graph, net: &mut Network, s: usize, t: usize) {
    let n = g.n();
    let big = n as u32;
    net.cap.fill(0);
    for v in 0..n {
        let inner = if v == s || v == t { big } else { 1 };
        net.cap[(2 * v) * net.size + 2 * v + 1] = inner;
        for w in g.neighbors(v) {
            net.cap[(2 * v + 1) * net.size + 2 * w] = big;
        }
    }
}

fn edge_network(g: &Graph, net: &mut Network) {
    net.cap.fill(0);
    for (u, v) in g.edges() {
        net.cap[u * net.size + v] = 1;
        net.cap[v * net.size + u] = 1;
    }
}

fn component_split(g: &Graph) -> (usize, usize) {
    let label = g.components();
    let other = label
        .iter()
        .position(|&c| c != label[0])
        .expect("disconnected graph");
    (0, other)
}

/// `κ(G)` with a minimum vertex cut.
pub fn vertex_connectivity(g: &Graph) -> Connectivity {
    let n = g.n();
    if g.is_complete() {
        return Connectivity {
            value: n.saturating_sub(1),
            certificate: None,
        };
    }
    if !g.is_connected() {
        return Connectivity {
            value: 0,
            certificate: Some(CutCertificate {
                kind: CutKind::Vertex,
                vertices: Vec::new(),
                edges: Vec::new(),
                separated: component_split(g),
            }),
        };
    }

    // Start from the neighbourhood of a minimum-degree vertex; it is a cut
    // because that vertex has a non-neighbour in a non-complete graph.
    let deg = g.degrees();
    let vmin = (0..n).min_by_key(|&v| deg[v]).unwrap();
    let far = (0..n).find(|&w| w != vmin && !g.has_edge(vmin, w)).unwrap();
    let mut best = deg[vmin];
    let mut cert = CutCertificate {
        kind: CutKind::Vertex,
        vertices: g.neighbors(vmin).collect(),
        edges: Vec::new(),
        separated: (vmin, far),
    };

    let mut net = Network::new(2 * n);
    let mut s = 0;
    while s <= best && s < n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            split_network(g, &mut net, s, t);
            let flow = net.max_flow(2 * s + 1, 2 * t, best);
            if flow < best {
                let seen = net.reachable(2 * s + 1);
                best = flow;
                cert.vertices = (0..n)
                    .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
                    .collect();
                cert.separated = (s, t);
            }
        }
        s += 1;
    }
    debug_assert_eq!(cert.vertices.len(), best);
    Connectivity {
        value: best,
        certificate: Some(cert),
    }
}

/// `κ'(G)` with a minimum edge cut.
pub fn edge_connectivity(g: &Graph) -> Connectivity {
    let n = g.n();
    if n <= 1 {
        return Connectivity {
            value: 0,
            certificate: None,
        };
    }
    if !g.is_connected() {
        return Connectivity {
            value: 0,
            certificate: Some(CutCertificate {
                kind: CutKind::Edge,
                vertices: Vec::new(),
                edges: Vec::new(),
                separated: component_split(g),
            }),
        };
    }
    let deg = g.degrees();
    let vmin = (0..n).min_by_key(|&v| deg[v]).unwrap();
    let mut best = deg[vmin];
    let mut cert = CutCertificate {
        kind: CutKind::Edge,
        vertices: Vec::new(),
        edges: g
            .neighbors(vmin)
            .map(|w| (vmin.min(w), vmin.max(w)))
            .collect(),
        separated: (vmin, if vmin == 0 { 1 } else { 0 }),
    };
    let mut net = Network::new(n);
    for t in 1..n {
        edge_network(g, &mut net);
        let flow = net.max_flow(0, t, best);
        if flow < best {
            let seen = net.reachable(0);
            best = flow;
            cert.edges = g
                .edges()
                .into_iter()
                .filter(|&(a, b)| seen[a] != seen[b])
                .collect();
            cert.separated = (0, t);
        }
    }
    debug_assert_eq!(cert.edges.len(), best);
    Connectivity {
        value: best,
        certificate: Some(cert),
    }
}

/// Smallest vertex subset whose deletion leaves a disconnected graph, by
/// exhaustive subset enumeration. `n − 1` for complete graphs.
pub fn brute_force_kappa(g: &Graph) -> Result<usize, ConnectivityError> {
    let n = g.n();
    if n > 12 {
        return Err(ConnectivityError::TooLarge {
            what: "vertices",
            limit: 12,
            got: n,
        });
    }
    if g.is_complete() {
        return Ok(n.saturating_sub(1));
    }
    let mut best = n;
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let start = (0..n).find(|&v| !removed[v]).unwrap();
        let seen = g.reachable_avoiding(start, &removed);
        if (0..n).any(|v| !removed[v] && !seen[v]) {
            best = size;
        }
    }
    Ok(best)
}

/// Smallest number of edges crossing a bipartition `(S, V \ S)` with both
/// sides nonempty, by enumerating every such `S`. For a connected graph every
/// minimal disconnecting edge set is of this form, so this is `κ'`; for a
/// disconnected graph some bipartition has no crossing edge.
pub fn brute_force_kappa_prime(g: &Graph) -> Result<usize, ConnectivityError> {
    let n = g.n();
    if n > 16 {
        return Err(ConnectivityError::TooLarge {
            what: "vertices",
            limit: 16,
            got: n,
        });
    }
    if n <= 1 {
        return Ok(0);
    }
    let edges = g.edges();
    let mut best = usize::MAX;
    // vertex n-1 always on the complement side, so each cut is seen once
    for side in 1u32..1 << (n - 1) {
        let crossing = edges
            .iter()
            .filter(|&&(u, v)| (side >> u & 1) != (side >> v & 1))
            .count();
        best = best.min(crossing);
    }
    Ok(best)
}

fn check_class(g: &Graph, k: usize) -> Result<(), ConnectivityError> {
    let max = g.n().saturating_sub(1);
    if k < 1 || k > max {
        return Err(ConnectivityError::ClassRange { k, max });
    }
    Ok(())
}

/// Membership in the class of `n`-vertex graphs with `κ ≤ k`.
pub fn in_class_v(g: &Graph, k: usize) -> Result<bool, ConnectivityError> {
    check_class(g, k)?;
    Ok(vertex_connectivity(g).value <= k)
}

/// Membership in the class of `n`-vertex graphs with `κ' ≤ k`.
pub fn in_class_e(g: &Graph, k: usize) -> Result<bool, ConnectivityError> {
    check_class(g, k)?;
    Ok(edge_connectivity(g).value <= k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs_have_marker() {
        let c = vertex_connectivity(&Graph::complete(5));
        assert_eq!(c.value, 4);
        assert!(c.certificate.is_none());
        assert_eq!(brute_force_kappa(&Graph::complete(4)).unwrap(), 3);
        assert_eq!(edge_connectivity(&Graph::complete(5)).value, 4);
    }

    #[test]
    fn trees_have_connectivity_one() {
        let g = Graph::path(6);
        let c = vertex_connectivity(&g);
        assert_eq!(c.value, 1);
        let cert = c.certificate.unwrap();
        assert!((1..5).contains(&cert.vertices[0]));
        assert!(cert.separates(&g));
        assert_eq!(edge_connectivity(&Graph::star(6)).value, 1);
        assert_eq!(brute_force_kappa_prime(&Graph::path(3)).unwrap(), 1);
    }

    #[test]
    fn knk_hub_is_the_cut() {
        let g = Graph::k_n_k(7, 3).unwrap();
        let c = vertex_connectivity(&g);
        assert_eq!(c.value, 3);
        let cert = c.certificate.unwrap();
        assert_eq!(cert.vertices, vec![0, 1, 2]);
        assert!(cert.separates(&g));
        assert_eq!(brute_force_kappa(&g).unwrap(), 3);
        let e = edge_connectivity(&g);
        assert_eq!(e.value, 3);
        assert!(e.certificate.unwrap().separates(&g));
        assert_eq!(vertex_connectivity(&Graph::k_n_k(6, 2).unwrap()).value, 2);
    }

    #[test]
    fn cycles() {
        let g = Graph::cycle(8).unwrap();
        assert_eq!(edge_connectivity(&g).value, 2);
        assert_eq!(vertex_connectivity(&g).value, 2);
    }

    #[test]
    fn disconnected_and_tiny() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2));
        let c = vertex_connectivity(&g);
        assert_eq!(c.value, 0);
        assert!(c.certificate.unwrap().separates(&g));
        assert_eq!(edge_connectivity(&g).value, 0);
        assert_eq!(vertex_connectivity(&Graph::empty(1)).value, 0);
        assert_eq!(edge_connectivity(&Graph::empty(1)).value, 0);
        assert_eq!(vertex_connectivity(&Graph::complete(2)).value, 1);
        assert_eq!(edge_connectivity(&Graph::complete(2)).value, 1);
    }

    #[test]
    fn vertex_and_edge_connectivity_can_differ() {
        // two triangles sharing vertex 2, i.e. a bowtie: κ = 1, κ' = 2
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&g).value, 1);
        assert_eq!(edge_connectivity(&g).value, 2);
    }

    #[test]
    fn class_membership() {
        for n in 3..8 {
            for k in 1..n - 1 {
                assert!(in_class_v(&Graph::k_n_k(n, k).unwrap(), k).unwrap());
                assert!(in_class_e(&Graph::k_n_k(n, k).unwrap(), k).unwrap());
                assert!(!in_class_v(&Graph::complete(n), k).unwrap());
            }
        }
        assert!(in_class_v(&Graph::path(4), 0).is_err());
        assert!(in_class_v(&Graph::path(4), 4).is_err());
    }

    #[test]
    fn oracle_guards() {
        assert!(brute_force_kappa(&Graph::path(13)).is_err());
        assert!(brute_force_kappa_prime(&Graph::path(17)).is_err());
        assert_eq!(brute_force_kappa_prime(&Graph::complete(7)).unwrap(), 6);
        assert_eq!(brute_force_kappa_prime(&Graph::empty(3)).unwrap(), 0);
    }
}
