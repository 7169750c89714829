//! Runs every extremal and surgery claim at desk scale and tabulates the outcome.

use serde::Serialize;

use super::{
    enumerate_connected, isomorphic, scan_classes, ClassMode, ExtremalError, Objective, MAX_SCAN_N,
};
use crate::graph::Graph;
use crate::invariants::{sombor, sombor_path_closed, sombor_star_closed};
use crate::transforms::{all_switches, neighbor_switch, verify_split_comparison};
use crate::TOLERANCE;

/// Largest `n` for the exhaustive neighbour-switch check.
const SWITCH_N_MAX: usize = 6;
/// Largest `n = i + k + m` in the split-graph sweep.
const SPLIT_N_MAX: usize = 8;
/// Largest hub size in the split-graph sweep.
const SPLIT_K_MAX: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub scope: String,
    pub passed: bool,
    /// Smallest slack in the claimed direction, when meaningful.
    pub margin: Option<f64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationSummary {
    pub n_max: usize,
    pub claims: Vec<ClaimResult>,
}

impl VerificationSummary {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }
}

fn mode_label(mode: ClassMode) -> &'static str {
    match mode {
        ClassMode::Vertex => "kappa",
        ClassMode::Edge => "kappa'",
    }
}

/// Exhaustive checks for every `2 ≤ n ≤ n_max` (at most 7).
pub fn verify_all_theorems(n_max: usize) -> Result<VerificationSummary, ExtremalError> {
    if !(2..=MAX_SCAN_N).contains(&n_max) {
        return Err(ExtremalError::SizeGuard {
            n: n_max,
            max: MAX_SCAN_N,
        });
    }
    let mut claims = Vec::new();

    for n in 2..=n_max {
        let scan = scan_classes(n, true)?;
        for mode in [ClassMode::Vertex, ClassMode::Edge] {
            let mut previous_max: Option<f64> = None;
            let mut monotone = true;
            let mut min_values = Vec::new();
            for k in 1..n {
                let hi = scan.report(k, mode, Objective::Max)?;
                claims.push(ClaimResult {
                    claim: format!("max SO over {} <= k is K_n^k only", mode_label(mode)),
                    scope: format!("n={n} k={k}"),
                    passed: hi.agrees,
                    margin: Some(hi.expected_value - hi.best_value),
                    detail: format!(
                        "best {:.9} vs closed form {:.9}, {} optimal class(es) among {} graphs",
                        hi.best_value,
                        hi.expected_value,
                        hi.argbest.len(),
                        hi.class_size
                    ),
                });
                if previous_max.is_some_and(|p| hi.best_value < p - TOLERANCE) {
                    monotone = false;
                }
                previous_max = Some(hi.best_value);

                let lo = scan.report(k, mode, Objective::Min)?;
                claims.push(ClaimResult {
                    claim: format!(
                        "min SO over connected {} <= k is P_n only",
                        mode_label(mode)
                    ),
                    scope: format!("n={n} k={k}"),
                    passed: lo.agrees,
                    margin: Some(lo.best_value - lo.expected_value),
                    detail: format!(
                        "best {:.9} vs 2*sqrt2*(n-3)+2*sqrt5 = {:.9}, {} optimal class(es)",
                        lo.best_value,
                        lo.expected_value,
                        lo.argbest.len()
                    ),
                });
                min_values.push(lo.best_value);
            }
            claims.push(ClaimResult {
                claim: format!("class max non-decreasing in k ({})", mode_label(mode)),
                scope: format!("n={n}"),
                passed: monotone,
                margin: None,
                detail: String::new(),
            });
            let spread = min_values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
                - min_values.iter().cloned().fold(f64::INFINITY, f64::min);
            claims.push(ClaimResult {
                claim: format!("class min independent of k ({})", mode_label(mode)),
                scope: format!("n={n}"),
                passed: spread <= TOLERANCE,
                margin: Some(spread),
                detail: String::new(),
            });
        }

        if let Some(((lo, lo_reps), (hi, hi_reps))) = scan.tree_extremes() {
            let path_ok = lo_reps.len() == 1 && isomorphic(&lo_reps[0], &Graph::path(n));
            let star_ok = hi_reps.len() == 1 && isomorphic(&hi_reps[0], &Graph::star(n));
            let lo_expect = sombor_path_closed(n).expect("n >= 2");
            let hi_expect = sombor_star_closed(n).expect("n >= 2");
            claims.push(ClaimResult {
                claim: "trees: SO(P_n) <= SO(T) <= SO(S_n), equality only at P_n, S_n".into(),
                scope: format!("n={n}"),
                passed: path_ok
                    && star_ok
                    && (lo - lo_expect).abs() <= TOLERANCE
                    && (hi - hi_expect).abs() <= TOLERANCE,
                margin: None,
                detail: format!("tree min {lo:.9}, tree max {hi:.9}"),
            });
        }

        let (margin, checked) = scan.edge_addition_margin();
        claims.push(ClaimResult {
            claim: "adding an edge strictly raises SO".into(),
            scope: format!("n={n}, {checked} additions"),
            passed: margin.is_none_or(|m| m > TOLERANCE),
            margin,
            detail: String::new(),
        });

        if n <= SWITCH_N_MAX {
            let mut min_gain: Option<f64> = None;
            let mut checked = 0usize;
            enumerate_connected(n, |g| {
                let base = sombor(g);
                for spec in all_switches(g) {
                    let h = neighbor_switch(g, &spec).expect("enumerated switch is valid");
                    let gain = sombor(&h) - base;
                    checked += 1;
                    if min_gain.is_none_or(|m| gain < m) {
                        min_gain = Some(gain);
                    }
                }
            })?;
            claims.push(ClaimResult {
                claim: "moving neighbours of u to v with d(u) <= d(v) raises SO".into(),
                scope: format!("n={n}, {checked} switches"),
                passed: min_gain.is_none_or(|m| m > TOLERANCE),
                margin: min_gain,
                detail: String::new(),
            });
        }
    }

    claims.push(split_sweep());
    Ok(VerificationSummary { n_max, claims })
}

/// Every hub graph on at most three vertices, every `2 ≤ i ≤ m` with
/// `i + k + m ≤ 8`.
fn split_sweep() -> ClaimResult {
    let mut min_margin: Option<f64> = None;
    let mut cases = 0;
    for k in 1..=SPLIT_K_MAX {
        for mask in 0..1u64 << (k * (k - 1) / 2) {
            let hub = Graph::from_pair_mask(k, mask);
            for i in 2..=SPLIT_N_MAX {
                for m in i..=SPLIT_N_MAX {
                    if i + k + m > SPLIT_N_MAX {
                        break;
                    }
                    let r = verify_split_comparison(i, &hub, m).expect("parameters in range");
                    cases += 1;
                    if min_margin.is_none_or(|x| r.margin < x) {
                        min_margin = Some(r.margin);
                    }
                }
            }
        }
    }
    ClaimResult {
        claim: "SO(K_i v H v K_m) < SO(K_1 v H v K_{i+m-1}) for 2 <= i <= m".into(),
        scope: format!("k<={SPLIT_K_MAX}, n<={SPLIT_N_MAX}, {cases} cases"),
        passed: min_margin.is_some_and(|m| m > TOLERANCE),
        margin: min_margin,
        detail: String::new(),
    }
}
