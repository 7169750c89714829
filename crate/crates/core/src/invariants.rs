//! Degree-based topological indices.
//!
//! Every index here has the form `Σ_{uv ∈ E} w(d(u), d(v))` for a symmetric
//! edge weight `w`. Sums are taken over edges in ascending `(u, v)` order so
//! totals are bit-reproducible on a given platform.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantError {
    #[error("argument outside the domain of {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },
}

fn domain(function: &'static str, detail: String) -> InvariantError {
    InvariantError::Domain { function, detail }
}

/// A named symmetric weight on degree pairs.
#[derive(Clone, Copy)]
pub struct EdgeFunction {
    pub name: &'static str,
    weight: fn(f64, f64) -> f64,
}

impl std::fmt::Debug for EdgeFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("EdgeFunction").field(&self.name).finish()
    }
}

impl EdgeFunction {
    pub const fn new(name: &'static str, weight: fn(f64, f64) -> f64) -> Self {
        EdgeFunction { name, weight }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (self.weight)(x, y)
    }

    /// `√(x² + y²)`
    pub const SOMBOR: EdgeFunction = EdgeFunction::new("sombor", |x, y| (x * x + y * y).sqrt());
    /// `x + y`
    pub const FIRST_ZAGREB: EdgeFunction = EdgeFunction::new("first_zagreb", |x, y| x + y);
    /// `x · y`
    pub const SECOND_ZAGREB: EdgeFunction = EdgeFunction::new("second_zagreb", |x, y| x * y);
    /// `1 / √(x y)`
    pub const RANDIC: EdgeFunction = EdgeFunction::new("randic", |x, y| 1.0 / (x * y).sqrt());
    /// `2 / (x + y)`
    pub const HARMONIC: EdgeFunction = EdgeFunction::new("harmonic", |x, y| 2.0 / (x + y));
    /// `√((x + y − 2) / (x y))`
    pub const ABC: EdgeFunction = EdgeFunction::new("atom_bond_connectivity", |x, y| {
        ((x + y - 2.0) / (x * y)).sqrt()
    });

    /// Sombor followed by the fixed set of indices it is compared against.
    pub fn comparison_set() -> [EdgeFunction; 6] {
        [
            Self::SOMBOR,
            Self::FIRST_ZAGREB,
            Self::SECOND_ZAGREB,
            Self::RANDIC,
            Self::HARMONIC,
            Self::ABC,
        ]
    }

    pub fn by_name(name: &str) -> Option<EdgeFunction> {
        Self::comparison_set().into_iter().find(|f| f.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeTerm {
    pub u: usize,
    pub v: usize,
    pub du: usize,
    pub dv: usize,
    pub value: f64,
}

/// Per-edge breakdown of an index together with its total.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexReport {
    pub name: String,
    pub total: f64,
    pub edges: Vec<EdgeTerm>,
}

pub fn index_with(g: &Graph, w: EdgeFunction) -> IndexReport {
    let deg = g.degrees();
    let mut total = 0.0;
    let edges = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let value = w.eval(deg[u] as f64, deg[v] as f64);
            total += value;
            EdgeTerm {
                u,
                v,
                du: deg[u],
                dv: deg[v],
                value,
            }
        })
        .collect();
    IndexReport {
        name: w.name.to_string(),
        total,
        edges,
    }
}

/// Sum of `w(d(u), d(v))` without building the per-edge report.
pub fn index_total(g: &Graph, w: EdgeFunction) -> f64 {
    let deg = g.degrees();
    let mut total = 0.0;
    for u in 0..g.n() {
        for v in g.neighbors(u).filter(|&v| v > u) {
            total += w.eval(deg[u] as f64, deg[v] as f64);
        }
    }
    total
}

/// `SO(G) = Σ_{uv ∈ E} √(d(u)² + d(v)²)`. Isolated vertices contribute nothing.
pub fn sombor(g: &Graph) -> f64 {
    let deg = g.degrees();
    let mut total = 0.0;
    for u in 0..g.n() {
        let du = deg[u] as f64;
        for v in g.neighbors(u).filter(|&v| v > u) {
            let dv = deg[v] as f64;
            total += (du * du + dv * dv).sqrt();
        }
    }
    total
}

/// Sombor index of `K_k ∨ (K_1 ⊔ K_{n-k-1})` in closed form.
pub fn sombor_knk_closed(n: usize, k: usize) -> Result<f64, InvariantError> {
    if k < 1 || k + 1 > n {
        return Err(domain(
            "sombor_knk_closed",
            format!("need 1 <= k <= n-1, got n={n}, k={k}"),
        ));
    }
    let (nf, kf) = (n as f64, k as f64);
    let rest = nf - kf - 1.0;
    let half_sqrt2 = std::f64::consts::SQRT_2 / 2.0;
    Ok(kf * (kf * kf + (nf - 1.0).powi(2)).sqrt()
        + kf * rest * ((nf - 1.0).powi(2) + (nf - 2.0).powi(2)).sqrt()
        + half_sqrt2 * kf * (kf - 1.0) * (nf - 1.0)
        + half_sqrt2 * rest * (rest - 1.0) * (nf - 2.0))
}

/// `SO(P_n)`: `√2` for `n = 2`, else `2√2 (n − 3) + 2√5`.
pub fn sombor_path_closed(n: usize) -> Result<f64, InvariantError> {
    match n {
        0 | 1 => Err(domain(
            "sombor_path_closed",
            format!("need n >= 2, got {n}"),
        )),
        2 => Ok(std::f64::consts::SQRT_2),
        _ => Ok(2.0 * std::f64::consts::SQRT_2 * (n as f64 - 3.0) + 2.0 * 5f64.sqrt()),
    }
}

/// `SO(S_n) = (n − 1) √((n − 1)² + 1)`. Derived directly from the definition:
/// every edge joins the center (degree `n − 1`) to a leaf.
pub fn sombor_star_closed(n: usize) -> Result<f64, InvariantError> {
    if n < 2 {
        return Err(domain(
            "sombor_star_closed",
            format!("need n >= 2, got {n}"),
        ));
    }
    let m = n as f64 - 1.0;
    Ok(m * (m * m + 1.0).sqrt())
}

/// `√(x² + y²) − √((x − a)² + y²)` on `x > a ≥ 1, y > 0`.
///
/// The change in one Sombor edge term when an endpoint's degree drops from
/// `x` to `x − a` while the other endpoint keeps degree `y`.
pub fn degree_drop_gain(x: f64, y: f64, a: f64) -> Result<f64, InvariantError> {
    if !(x > a && a >= 1.0 && y > 0.0) {
        return Err(domain(
            "degree_drop_gain",
            format!("need x > a >= 1, y > 0, got x={x}, y={y}, a={a}"),
        ));
    }
    Ok((x * x + y * y).sqrt() - ((x - a).powi(2) + y * y).sqrt())
}

/// `√(x² + y²) − √(x² + 4) − √(y² + 4)` on `x, y ≥ 2`.
///
/// Change in Sombor value when a path `x₁–w–y₁` through a degree-2 vertex is
/// replaced by the direct edge `x₁y₁`, hub degrees `x`, `y` held fixed.
/// Strictly decreasing in `x` whenever `y > 2` (and symmetrically); on the
/// boundary `y = 2` it is the constant `−2√2`.
pub fn subdivision_balance(x: f64, y: f64) -> Result<f64, InvariantError> {
    if !(x >= 2.0 && y >= 2.0) {
        return Err(domain(
            "subdivision_balance",
            format!("need x, y >= 2, got x={x}, y={y}"),
        ));
    }
    Ok((x * x + y * y).sqrt() - (x * x + 4.0).sqrt() - (y * y + 4.0).sqrt())
}
