//! Threshold rounding of a non-negative vector into a low-expansion set.
//!
//! For `x` normalized to `[0, 1]` with maximum 1, the level sets are
//! `S_t = { i : x_i ≥ t }`. Drawing `t` with density `2t` on `(0, 1)` gives
//! `Pr(i ∈ S_t) = x_i²`, hence
//!
//! ```text
//!   E|S_t|            = Σ x_i²
//!   E|E(S_t, V∖S_t)|  = ½ Σ_{i,j} A_ij |x_i² − x_j²|
//!                     ≤ √(½ Σ A_ij (x_i + x_j)²) · √(½ Σ A_ij (x_i − x_j)²)
//! ```
//!
//! and the two normalized quadratic forms sum to 2, so the expectation ratio
//! is at most `√(λ(2 − λ))` with `λ` the Rayleigh quotient of `x`. Some level
//! set must do at least as well as the ratio of expectations;
//! [`sweep_cut`] finds the best one deterministically by scanning every
//! distinct positive value of `x`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::graph::{CutReport, RegularGraph, VertexSet};
use crate::spectral::graph_rayleigh;

/// `|x| / max |x_i|`.
pub fn normalize_for_rounding(x: &[f64]) -> Result<Vec<f64>> {
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("vector has non-finite entries".into()));
    }
    let max = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if max == 0.0 {
        return Err(Error::InvalidInput("zero vector".into()));
    }
    Ok(x.iter().map(|v| v.abs() / max).collect())
}

fn check_normalized(x: &[f64]) -> Result<()> {
    if x.iter().any(|v| !(0.0..=1.0).contains(v)) {
        return Err(Error::InvalidInput("normalized vector must lie in [0, 1]".into()));
    }
    if !x.contains(&1.0) {
        return Err(Error::InvalidInput("normalized vector must attain 1".into()));
    }
    Ok(())
}

/// `{ i : x_i ≥ t }` for `t ∈ (0, 1]`.
pub fn threshold_set(x: &[f64], t: f64) -> Result<VertexSet> {
    check_normalized(x)?;
    if !(t > 0.0 && t <= 1.0) {
        return Err(param(format!("threshold t={t} must lie in (0, 1]")));
    }
    Ok(VertexSet::from_sorted(
        x.iter().enumerate().filter(|(_, &v)| v >= t).map(|(i, _)| i).collect(),
    ))
}

/// Outcome of a deterministic sweep over level sets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub best: CutReport,
    /// Rayleigh quotient of the input vector.
    pub lambda_in: f64,
    /// `√(λ_in (2 − λ_in))`.
    pub bound: f64,
    pub thresholds_tried: usize,
    /// `false` when the input has more than `n/2` non-zeros, where the
    /// bound is not promised.
    pub guarantee_applicable: bool,
}

impl SweepResult {
    pub fn within_bound(&self, tol: f64) -> bool {
        self.best.expansion <= self.bound + tol
    }
}

/// `√(λ(2 − λ))`, clamped so rounding noise near 0 or 2 stays real.
pub fn cheeger_bound(lambda: f64) -> f64 {
    (lambda * (2.0 - lambda)).max(0.0).sqrt()
}

/// Best level set of `x` by expansion.
///
/// Every distinct positive value of `|x| / max|x|` is tried as a threshold
/// (including `t = 1`). A level set equal to all of `V` is skipped. Ties go
/// to the smaller set.
pub fn sweep_cut(g: &RegularGraph, x: &[f64]) -> Result<SweepResult> {
    let n = g.n();
    if x.len() != n {
        return Err(Error::InvalidInput(format!("vector has length {} but n={n}", x.len())));
    }
    let lambda_in = graph_rayleigh(g, x)?;
    let y = normalize_for_rounding(x)?;

    let mut order: Vec<usize> = (0..n).filter(|&i| y[i] > 0.0).collect();
    order.sort_by(|&a, &b| y[b].total_cmp(&y[a]).then(a.cmp(&b)));
    let support = order.len();

    let d = g.d();
    let mut inside = vec![false; n];
    let mut boundary: usize = 0;
    let mut best: Option<(f64, usize, usize)> = None; // (φ, boundary, prefix length)
    let mut tried = 0;
    let mut i = 0;
    while i < order.len() {
        let level = y[order[i]];
        while i < order.len() && y[order[i]] == level {
            let v = order[i];
            let internal = g.neighbors(v).iter().filter(|&&w| inside[w]).count();
            boundary = boundary + d - 2 * internal;
            inside[v] = true;
            i += 1;
        }
        if i == n {
            break;
        }
        tried += 1;
        let phi = boundary as f64 / (d * i.min(n - i)) as f64;
        if best.is_none_or(|(b, _, _)| phi < b) {
            best = Some((phi, boundary, i));
        }
    }
    let (expansion, boundary, len) = best.ok_or_else(|| {
        Error::InvalidInput("every level set is the whole vertex set".into())
    })?;
    let mut members = order[..len].to_vec();
    members.sort_unstable();
    Ok(SweepResult {
        best: CutReport {
            set: VertexSet::from_sorted(members),
            boundary,
            expansion,
        },
        lambda_in,
        bound: cheeger_bound(lambda_in),
        thresholds_tried: tried,
        guarantee_applicable: 2 * support <= n,
    })
}

/// Level set at `t = √u`, `u` uniform on `(0, 1)`, drawn from `rng`.
pub fn sample_threshold_set<R: Rng + ?Sized>(x: &[f64], rng: &mut R) -> Result<VertexSet> {
    check_normalized(x)?;
    let u = loop {
        let u: f64 = rng.gen();
        if u > 0.0 {
            break u;
        }
    };
    threshold_set(x, u.sqrt())
}

/// One draw of the randomized level set, seeded.
pub fn randomized_threshold(x: &[f64], seed: u64) -> Result<VertexSet> {
    sample_threshold_set(x, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Closed-form expectations over `t` with density `2t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CutExpectation {
    pub size: f64,
    pub boundary: f64,
}

pub fn expected_cut_stats(g: &RegularGraph, x: &[f64]) -> Result<CutExpectation> {
    if x.len() != g.n() {
        return Err(Error::InvalidInput(format!("vector has length {} but n={}", x.len(), g.n())));
    }
    check_normalized(x)?;
    Ok(CutExpectation {
        size: x.iter().map(|v| v * v).sum(),
        boundary: g.edges().iter().map(|&(u, v)| (x[u] * x[u] - x[v] * x[v]).abs()).sum(),
    })
}

/// Ordered-pair edge sums `Σ_{i,j} A_ij (x_i ± x_j)²` and `Σ x_i²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EdgeForms {
    pub sum_plus: f64,
    pub sum_minus: f64,
    pub norm_sq: f64,
    pub d: usize,
}

impl EdgeForms {
    /// `Σ A_ij (x_i + x_j)² / (2d Σ x_i²)`, equal to `2 − λ`.
    pub fn normalized_plus(&self) -> f64 {
        self.sum_plus / (2.0 * self.d as f64 * self.norm_sq)
    }

    /// `Σ A_ij (x_i − x_j)² / (2d Σ x_i²)`, the Rayleigh quotient.
    pub fn normalized_minus(&self) -> f64 {
        self.sum_minus / (2.0 * self.d as f64 * self.norm_sq)
    }

    /// Cauchy–Schwarz cap on the expected boundary.
    pub fn boundary_cap(&self) -> f64 {
        (self.sum_plus / 2.0).sqrt() * (self.sum_minus / 2.0).sqrt()
    }
}

pub fn edge_forms(g: &RegularGraph, x: &[f64]) -> Result<EdgeForms> {
    if x.len() != g.n() {
        return Err(Error::InvalidInput(format!("vector has length {} but n={}", x.len(), g.n())));
    }
    let (mut plus, mut minus) = (0.0, 0.0);
    for &(u, v) in g.edges() {
        plus += 2.0 * (x[u] + x[v]).powi(2);
        minus += 2.0 * (x[u] - x[v]).powi(2);
    }
    Ok(EdgeForms {
        sum_plus: plus,
        sum_minus: minus,
        norm_sq: x.iter().map(|v| v * v).sum(),
        d: g.d(),
    })
}
