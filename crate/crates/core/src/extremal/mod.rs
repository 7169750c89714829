//! Exhaustive extremal search over small connected graphs.
//!
//! Labelled graphs are enumerated by edge mask (bit `b` is the `b`-th
//! upper-triangle pair in graph6 order). A single pass over all masks for a
//! given `n` computes SO, `κ` and `κ'` for each connected graph and feeds every
//! class `κ ≤ k` (resp. `κ' ≤ k`) at once. The mask range is split into
//! contiguous chunks that are scanned in parallel and merged in chunk order,
//! so results do not depend on the thread count.

mod iso;
mod verify;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{edge_connectivity, vertex_connectivity};
use crate::graph::{write_graph6, Graph};
use crate::invariants::{sombor, sombor_knk_closed, sombor_path_closed};
use crate::TOLERANCE;

pub use iso::{dedup_isomorphic, isomorphic};
pub use verify::{verify_all_theorems, ClaimResult, VerificationSummary};

/// Largest `n` accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_N: usize = 8;
/// Largest `n` accepted by the class scans.
pub const MAX_SCAN_N: usize = 7;

const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("n={n} outside the supported range 1..={max}")]
    SizeGuard { n: usize, max: usize },
    #[error("k={k} outside 1..={max} for n={n}")]
    ClassRange { n: usize, k: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassMode {
    /// graphs with `κ ≤ k`
    Vertex,
    /// graphs with `κ' ≤ k`
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Max,
    Min,
}

fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Calls `visitor` on every connected labelled graph on `n` vertices, in
/// ascending edge-mask order. Returns how many were visited.
pub fn enumerate_connected(
    n: usize,
    mut visitor: impl FnMut(&Graph),
) -> Result<usize, ExtremalError> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(ExtremalError::SizeGuard {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let mut count = 0;
    for mask in 0..1u64 << pair_count(n) {
        let g = Graph::from_pair_mask(n, mask);
        if g.is_connected() {
            count += 1;
            visitor(&g);
        }
    }
    Ok(count)
}

/// The optimal value seen so far and the masks attaining it (within tolerance).
#[derive(Debug, Clone, Default)]
struct Extreme {
    value: Option<f64>,
    masks: Vec<u64>,
}

impl Extreme {
    fn offer(&mut self, value: f64, mask: u64, objective: Objective) {
        self.absorb(value, std::slice::from_ref(&mask), objective);
    }

    fn absorb(&mut self, value: f64, masks: &[u64], objective: Objective) {
        let better = match (self.value, objective) {
            (None, _) => true,
            (Some(b), Objective::Max) => value > b + TOLERANCE,
            (Some(b), Objective::Min) => value < b - TOLERANCE,
        };
        if better {
            self.value = Some(value);
            self.masks.clear();
            self.masks.extend_from_slice(masks);
        } else if (value - self.value.unwrap()).abs() <= TOLERANCE {
            self.masks.extend_from_slice(masks);
        }
    }

    fn merge(&mut self, other: &Extreme, objective: Objective) {
        if let Some(v) = other.value {
            self.absorb(v, &other.masks, objective);
        }
    }
}

#[derive(Debug, Clone, Default)]
struct ClassCell {
    members: usize,
    max: Extreme,
    min: Extreme,
}

impl ClassCell {
    fn offer(&mut self, so: f64, mask: u64) {
        self.members += 1;
        self.max.offer(so, mask, Objective::Max);
        self.min.offer(so, mask, Objective::Min);
    }

    fn merge(&mut self, other: &ClassCell) {
        self.members += other.members;
        self.max.merge(&other.max, Objective::Max);
        self.min.merge(&other.min, Objective::Min);
    }
}

#[derive(Debug, Clone)]
struct Partial {
    connected: usize,
    /// `[vertex, edge]` cells indexed by `k`
    cells: Vec<[ClassCell; 2]>,
    tree_max: Extreme,
    tree_min: Extreme,
    edge_addition: Extreme,
    edge_additions_checked: usize,
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            connected: 0,
            cells: vec![Default::default(); n],
            tree_max: Extreme::default(),
            tree_min: Extreme::default(),
            edge_addition: Extreme::default(),
            edge_additions_checked: 0,
        }
    }

    fn merge(&mut self, other: &Partial) {
        self.connected += other.connected;
        for (mine, theirs) in self.cells.iter_mut().zip(&other.cells) {
            mine[0].merge(&theirs[0]);
            mine[1].merge(&theirs[1]);
        }
        self.tree_max.merge(&other.tree_max, Objective::Max);
        self.tree_min.merge(&other.tree_min, Objective::Min);
        self.edge_addition
            .merge(&other.edge_addition, Objective::Min);
        self.edge_additions_checked += other.edge_additions_checked;
    }
}

fn scan_range(n: usize, start: u64, end: u64, edge_addition: bool) -> Partial {
    let mut part = Partial::new(n);
    for mask in start..end {
        let g = Graph::from_pair_mask(n, mask);
        if !g.is_connected() {
            continue;
        }
        part.connected += 1;
        let so = sombor(&g);
        let kv = vertex_connectivity(&g).value;
        let ke = edge_connectivity(&g).value;
        for k in kv.max(1)..n {
            part.cells[k][0].offer(so, mask);
        }
        for k in ke.max(1)..n {
            part.cells[k][1].offer(so, mask);
        }
        if g.edge_count() + 1 == n {
            part.tree_max.offer(so, mask, Objective::Max);
            part.tree_min.offer(so, mask, Objective::Min);
        }
        if edge_addition {
            for (u, v) in g.non_edges() {
                let margin = edge_addition_gain(&g, u, v);
                part.edge_addition.offer(margin, mask, Objective::Min);
                part.edge_additions_checked += 1;
            }
        }
    }
    part
}

/// `SO(G + uv) − SO(G)`, touching only the terms incident to `u` and `v`.
fn edge_addition_gain(g: &Graph, u: usize, v: usize) -> f64 {
    let term = |a: usize, b: usize| ((a * a + b * b) as f64).sqrt();
    let mut gain = 0.0;
    for x in [u, v] {
        let dx = g.degree(x);
        for w in g.neighbors(x) {
            let dw = g.degree(w);
            gain += term(dx + 1, dw) - term(dx, dw);
        }
    }
    gain + term(g.degree(u) + 1, g.degree(v) + 1)
}

/// Extreme SO over trees with its non-isomorphic attainers.
pub type TreeExtreme = (f64, Vec<Graph>);

/// One exhaustive pass over the connected graphs on `n` vertices.
#[derive(Debug, Clone)]
pub struct ClassScan {
    n: usize,
    partial: Partial,
}

/// Scans every connected labelled graph on `n ≤ 7` vertices. With
/// `edge_addition`, also records the smallest SO gain from adding any
/// missing edge.
pub fn scan_classes(n: usize, edge_addition: bool) -> Result<ClassScan, ExtremalError> {
    if !(1..=MAX_SCAN_N).contains(&n) {
        return Err(ExtremalError::SizeGuard { n, max: MAX_SCAN_N });
    }
    let total = 1u64 << pair_count(n);
    let chunks: Vec<(u64, u64)> = (0..total)
        .step_by(CHUNK as usize)
        .map(|s| (s, (s + CHUNK).min(total)))
        .collect();
    let parts: Vec<Partial> = chunks
        .into_par_iter()
        .map(|(s, e)| scan_range(n, s, e, edge_addition))
        .collect();
    let mut acc = Partial::new(n);
    for p in &parts {
        acc.merge(p);
    }
    Ok(ClassScan { n, partial: acc })
}

/// Extreme SO value over a connectivity class and the graphs attaining it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub mode: ClassMode,
    pub objective: Objective,
    /// connected labelled graphs in the class
    pub class_size: usize,
    pub best_value: f64,
    /// one graph6 string per isomorphism class of optima
    pub argbest: Vec<String>,
    /// labelled graphs attaining `best_value`
    pub labelled_optima: usize,
    /// `SO(K_n^k)` for max, `SO(P_n)` for min
    pub expected_value: f64,
    pub agrees: bool,
}

/// Distinct isomorphism classes among the given masks.
fn representatives(n: usize, masks: &[u64]) -> Vec<Graph> {
    dedup_isomorphic(masks.iter().map(|&m| Graph::from_pair_mask(n, m)))
}

fn unique_match(n: usize, masks: &[u64], expected: &Graph) -> (Vec<Graph>, bool) {
    let reps = representatives(n, masks);
    let ok = reps.len() == 1 && isomorphic(&reps[0], expected);
    (reps, ok)
}

impl ClassScan {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn connected_count(&self) -> usize {
        self.partial.connected
    }

    pub fn report(
        &self,
        k: usize,
        mode: ClassMode,
        objective: Objective,
    ) -> Result<ExtremalReport, ExtremalError> {
        let n = self.n;
        if k < 1 || k >= n {
            return Err(ExtremalError::ClassRange {
                n,
                k,
                max: n.saturating_sub(1),
            });
        }
        let cell = &self.partial.cells[k][match mode {
            ClassMode::Vertex => 0,
            ClassMode::Edge => 1,
        }];
        let extreme = match objective {
            Objective::Max => &cell.max,
            Objective::Min => &cell.min,
        };
        let (expected_graph, expected_value) = match objective {
            Objective::Max => (
                Graph::k_n_k(n, k).expect("k in range"),
                sombor_knk_closed(n, k).expect("k in range"),
            ),
            Objective::Min => (Graph::path(n), sombor_path_closed(n).expect("n >= 2")),
        };
        let best_value = extreme.value.expect("every class contains K_n^k and P_n");
        let (reps, unique) = unique_match(n, &extreme.masks, &expected_graph);
        Ok(ExtremalReport {
            n,
            k,
            mode,
            objective,
            class_size: cell.members,
            best_value,
            argbest: reps.iter().map(write_graph6).collect(),
            labelled_optima: extreme.masks.len(),
            expected_value,
            agrees: unique && (best_value - expected_value).abs() <= TOLERANCE,
        })
    }

    /// `(min, max)` SO over trees and the isomorphism classes attaining each.
    pub fn tree_extremes(&self) -> Option<(TreeExtreme, TreeExtreme)> {
        let p = &self.partial;
        Some((
            (
                p.tree_min.value?,
                representatives(self.n, &p.tree_min.masks),
            ),
            (
                p.tree_max.value?,
                representatives(self.n, &p.tree_max.masks),
            ),
        ))
    }

    /// Smallest SO gain from adding one edge, and how many additions were tried.
    /// Only populated when scanned with `edge_addition`.
    pub fn edge_addition_margin(&self) -> (Option<f64>, usize) {
        (
            self.partial.edge_addition.value,
            self.partial.edge_additions_checked,
        )
    }
}

/// Exhaustive extreme of SO over connected `n`-vertex graphs with `κ ≤ k`
/// (or `κ' ≤ k`), compared against `K_n^k` (max) or `P_n` (min).
pub fn extremal_in_class(
    n: usize,
    k: usize,
    mode: ClassMode,
    objective: Objective,
) -> Result<ExtremalReport, ExtremalError> {
    if !(2..=MAX_SCAN_N).contains(&n) {
        return Err(ExtremalError::SizeGuard { n, max: MAX_SCAN_N });
    }
    if k < 1 || k >= n {
        return Err(ExtremalError::ClassRange { n, k, max: n - 1 });
    }
    scan_classes(n, false)?.report(k, mode, objective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    #[test]
    fn connected_counts() {
        assert_eq!(enumerate_connected(1, |_| {}).unwrap(), 1);
        assert_eq!(enumerate_connected(2, |_| {}).unwrap(), 1);
        assert_eq!(enumerate_connected(3, |_| {}).unwrap(), 4);
        assert_eq!(enumerate_connected(4, |_| {}).unwrap(), 38);
        assert!(enumerate_connected(0, |_| {}).is_err());
        assert!(enumerate_connected(9, |_| {}).is_err());
    }

    #[test]
    fn enumeration_order_is_ascending_and_connected() {
        let mut seen = Vec::new();
        enumerate_connected(3, |g| seen.push(g.clone())).unwrap();
        assert_eq!(seen.last().unwrap(), &Graph::complete(3));
        assert!(seen.iter().all(Graph::is_connected));
    }

    #[test]
    fn knk_is_max_at_six_two() {
        let r = extremal_in_class(6, 2, ClassMode::Vertex, Objective::Max).unwrap();
        assert!(r.agrees);
        assert_eq!(r.argbest.len(), 1);
        assert!(isomorphic(
            &parse_graph6(&r.argbest[0]).unwrap(),
            &Graph::k_n_k(6, 2).unwrap()
        ));
        assert!((r.best_value - sombor_knk_closed(6, 2).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn path_is_min_at_six_two() {
        let r = extremal_in_class(6, 2, ClassMode::Vertex, Objective::Min).unwrap();
        assert!(r.agrees);
        assert!((r.best_value - (6.0 * 2f64.sqrt() + 2.0 * 5f64.sqrt())).abs() < 1e-9);
        // 6!/2 labelled paths
        assert_eq!(r.labelled_optima, 360);
    }

    #[test]
    fn edge_class_max_at_six_three() {
        let r = extremal_in_class(6, 3, ClassMode::Edge, Objective::Max).unwrap();
        assert!(r.agrees);
    }

    #[test]
    fn report_argbest_lies_in_class() {
        let scan = scan_classes(5, false).unwrap();
        assert_eq!(scan.connected_count(), 728);
        for k in 1..5 {
            for mode in [ClassMode::Vertex, ClassMode::Edge] {
                for obj in [Objective::Max, Objective::Min] {
                    let r = scan.report(k, mode, obj).unwrap();
                    for s in &r.argbest {
                        let g = parse_graph6(s).unwrap();
                        assert!(g.is_connected());
                        let c = match mode {
                            ClassMode::Vertex => vertex_connectivity(&g).value,
                            ClassMode::Edge => edge_connectivity(&g).value,
                        };
                        assert!(c <= k);
                        assert!((sombor(&g) - r.best_value).abs() <= TOLERANCE);
                    }
                }
            }
        }
        assert!(scan.report(0, ClassMode::Vertex, Objective::Max).is_err());
        assert!(scan.report(5, ClassMode::Vertex, Objective::Max).is_err());
    }

    #[test]
    fn incremental_edge_gain_matches_recomputation() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]).unwrap();
        for (u, v) in g.non_edges() {
            let direct = sombor(&g.with_edge(u, v).unwrap()) - sombor(&g);
            assert!((edge_addition_gain(&g, u, v) - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn guards() {
        assert!(extremal_in_class(8, 2, ClassMode::Vertex, Objective::Max).is_err());
        assert!(extremal_in_class(5, 5, ClassMode::Vertex, Objective::Max).is_err());
        assert!(scan_classes(0, false).is_err());
    }
}
