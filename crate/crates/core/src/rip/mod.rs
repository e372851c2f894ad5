//! Sensing matrices built from Laplacian factors and their restricted
//! isometry constants.
//!
//! A matrix `M` is `(k, δ)`-RIP when `(1 − δ)‖x‖ ≤ ‖Mx‖ ≤ (1 + δ)‖x‖` for
//! every `x` with `k` non-zeros. The bounds are on norms, not squared norms,
//! so for a column submatrix `M_T` the constant is
//!
//! ```text
//!   δ_k = max_{|T| = k} max(1 − σ_min(M_T), σ_max(M_T) − 1)
//! ```
//!
//! Many compressed-sensing references square the norms instead; the two
//! constants are not interchangeable.

mod io;

use nalgebra::DMatrix;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::graph::{expansion, RegularGraph, VertexSet};
use crate::linalg::{max_abs, sorted_symmetric_eigen};
use crate::spectral::{Laplacian, ENUMERATION_BUDGET};
use crate::support::{best_support, binomial, Combinations};

pub use io::{parse_matrix, read_matrix, write_matrix};

/// A real `m × n` matrix applied to sparse signals.
#[derive(Debug, Clone, PartialEq)]
pub struct SensingMatrix {
    matrix: DMatrix<f64>,
}

impl SensingMatrix {
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        if matrix.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("matrix has non-finite entries".into()));
        }
        if matrix.nrows() == 0 || matrix.ncols() == 0 {
            return Err(Error::InvalidInput("matrix is empty".into()));
        }
        Ok(Self { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: DMatrix::identity(n, n),
        }
    }

    pub fn rows(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Columns of `M` indexed by `support`.
    pub fn columns(&self, support: &[usize]) -> DMatrix<f64> {
        self.matrix.select_columns(support)
    }

    /// `‖Mx‖ / ‖x‖`.
    pub fn gain(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.cols() {
            return Err(param(format!("vector length {} != {} columns", x.len(), self.cols())));
        }
        let v = nalgebra::DVector::from_column_slice(x);
        let norm = v.norm();
        if norm == 0.0 {
            return Err(Error::InvalidInput("zero vector".into()));
        }
        Ok((&self.matrix * v).norm() / norm)
    }

    /// `max |(MᵀM − target)_ij|`.
    pub fn gram_residual(&self, target: &DMatrix<f64>) -> f64 {
        max_abs(&(self.matrix.transpose() * &self.matrix - target))
    }
}

/// Eigenvalues below this are treated as a genuine loss of definiteness.
pub const PSD_TOLERANCE: f64 = 1e-8;
/// Required `‖MᵀM − L‖_max` for a factorization to be accepted.
pub const FACTOR_RESIDUAL: f64 = 1e-10;

/// Eigenvalues within this multiple of `max(1, λ_max)` of zero are taken as
/// exact zeros. Without it a rounding-level `1e-16` kernel eigenvalue turns
/// into a `1e-8` row of `M`.
pub const RANK_TOLERANCE: f64 = 1e-12;

/// `M = D^{1/2} Qᵀ` from `S = Q D Qᵀ`, so that `MᵀM = S`. Eigenvalues in
/// `[-1e-8, 0)` are clamped to zero, as are positive ones below the rank
/// tolerance.
pub fn factor_psd(s: &DMatrix<f64>) -> Result<SensingMatrix> {
    if !s.is_square() {
        return Err(Error::InvalidInput("matrix to factor must be square".into()));
    }
    let (values, q) = sorted_symmetric_eigen(s);
    if let Some(&worst) = values.first().filter(|&&v| v < -PSD_TOLERANCE) {
        return Err(Error::NotPsd { eigenvalue: worst });
    }
    let floor = RANK_TOLERANCE * values.last().copied().unwrap_or(0.0).max(1.0);
    let mut m = q.transpose();
    for (i, mut row) in m.row_iter_mut().enumerate() {
        let v = if values[i] <= floor { 0.0 } else { values[i] };
        row *= v.sqrt();
    }
    let out = SensingMatrix::new(m)?;
    let residual = out.gram_residual(s);
    if residual > FACTOR_RESIDUAL {
        return Err(Error::Factorization { residual });
    }
    Ok(out)
}

/// Square-root factor `M` with `MᵀM = L`.
pub fn factor_laplacian(l: &Laplacian) -> Result<SensingMatrix> {
    factor_psd(l.matrix())
}

/// Which side of the isometry band a witness violates most.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `1 − σ_min` dominates.
    Lower,
    /// `σ_max − 1` dominates.
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RicKind {
    Exact,
    LowerBound,
}

/// Restricted isometry constant of one order with its witness support.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RicEstimate {
    pub k: usize,
    pub value: f64,
    pub kind: RicKind,
    pub witness_support: VertexSet,
    pub witness_side: Side,
    pub sigma_min: f64,
    pub sigma_max: f64,
}

/// Extreme singular values of `M_T` and its isometry deviation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupportDeviation {
    pub sigma_min: f64,
    pub sigma_max: f64,
}

impl SupportDeviation {
    pub fn value(&self) -> f64 {
        (1.0 - self.sigma_min).max(self.sigma_max - 1.0)
    }

    pub fn side(&self) -> Side {
        if 1.0 - self.sigma_min >= self.sigma_max - 1.0 {
            Side::Lower
        } else {
            Side::Upper
        }
    }
}

/// Singular-value range of the column submatrix on `support`.
pub fn support_deviation(m: &SensingMatrix, support: &[usize]) -> SupportDeviation {
    let sub = m.columns(support);
    let sv = sub.svd(false, false).singular_values;
    let sigma_max = sv.max();
    // More columns than rows leaves a non-trivial kernel.
    let sigma_min = if support.len() > m.rows() { 0.0 } else { sv.min() };
    SupportDeviation { sigma_min, sigma_max }
}

fn check_order(m: &SensingMatrix, k: usize) -> Result<()> {
    if k < 1 || k > m.cols() {
        return Err(param(format!("order k={k} must lie in [1, {}]", m.cols())));
    }
    Ok(())
}

fn estimate(k: usize, kind: RicKind, support: Vec<usize>, dev: SupportDeviation) -> RicEstimate {
    RicEstimate {
        k,
        value: dev.value(),
        kind,
        witness_support: VertexSet::from_sorted(support),
        witness_side: dev.side(),
        sigma_min: dev.sigma_min,
        sigma_max: dev.sigma_max,
    }
}

fn by_value(a: &SupportDeviation, b: &SupportDeviation) -> std::cmp::Ordering {
    a.value().total_cmp(&b.value())
}

/// Exact `δ_k` under the default enumeration budget.
pub fn ric_exact(m: &SensingMatrix, k: usize) -> Result<RicEstimate> {
    ric_exact_with_budget(m, k, ENUMERATION_BUDGET)
}

/// Exact `δ_k` over all `C(n, k)` supports, refusing when that count exceeds
/// `budget`. Ties go to the lexicographically smallest support.
pub fn ric_exact_with_budget(m: &SensingMatrix, k: usize, budget: u128) -> Result<RicEstimate> {
    check_order(m, k)?;
    let supports = binomial(m.cols(), k);
    if supports > budget {
        return Err(Error::BudgetExceeded { supports, budget });
    }
    let (dev, support) = best_support(m.cols(), k, |s| Some(support_deviation(m, s)), by_value)
        .expect("1 <= k <= n gives at least one support");
    Ok(estimate(k, RicKind::Exact, support, dev))
}

/// How Monte-Carlo supports are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampler {
    /// Uniform size-k subsets, independent across trials.
    Uniform,
    /// Supports in lexicographic order, wrapping around; with
    /// `trials ≥ C(n, k)` this visits every support.
    Exhaustive,
}

/// Lower bound on `δ_k` from `trials` uniformly sampled supports.
pub fn ric_montecarlo(m: &SensingMatrix, k: usize, trials: usize, seed: u64) -> Result<RicEstimate> {
    ric_montecarlo_with(m, k, trials, seed, Sampler::Uniform)
}

pub fn ric_montecarlo_with(
    m: &SensingMatrix,
    k: usize,
    trials: usize,
    seed: u64,
    sampler: Sampler,
) -> Result<RicEstimate> {
    check_order(m, k)?;
    if trials == 0 {
        return Err(param("trials must be at least 1"));
    }
    let n = m.cols();
    let supports: Vec<Vec<usize>> = match sampler {
        Sampler::Uniform => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..trials)
                .map(|_| {
                    let mut s = sample(&mut rng, n, k).into_vec();
                    s.sort_unstable();
                    s
                })
                .collect()
        }
        Sampler::Exhaustive => Combinations::new(n, k).cycle().take(trials).collect(),
    };
    let (dev, idx) = supports
        .par_iter()
        .enumerate()
        .map(|(i, s)| (support_deviation(m, s), i))
        .reduce_with(|a, b| match by_value(&a.0, &b.0).then(b.1.cmp(&a.1)) {
            std::cmp::Ordering::Less => b,
            _ => a,
        })
        .expect("trials >= 1");
    Ok(estimate(k, RicKind::LowerBound, supports[idx].clone(), dev))
}

/// How `is_rip` searches for violations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RipMode {
    Exact,
    MonteCarlo { trials: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RipVerdict {
    /// Certified by exhaustive search.
    Holds,
    /// A support violating the band was found.
    Violated,
    /// Sampling found no violation; nothing is certified.
    NoViolationFound,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RipDecision {
    pub verdict: RipVerdict,
    pub delta: f64,
    pub estimate: RicEstimate,
}

impl RipDecision {
    /// `true` only for an exact certificate.
    pub fn is_certified(&self) -> bool {
        self.verdict == RipVerdict::Holds
    }
}

/// Decides `(k, δ)`-RIP. Sampling can only refute.
pub fn is_rip(m: &SensingMatrix, k: usize, delta: f64, mode: RipMode) -> Result<RipDecision> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(param(format!("delta={delta} must lie in (0, 1)")));
    }
    let (estimate, verdict) = match mode {
        RipMode::Exact => {
            let e = ric_exact(m, k)?;
            let v = if e.value <= delta { RipVerdict::Holds } else { RipVerdict::Violated };
            (e, v)
        }
        RipMode::MonteCarlo { trials, seed } => {
            let e = ric_montecarlo(m, k, trials, seed)?;
            let v = if e.value > delta { RipVerdict::Violated } else { RipVerdict::NoViolationFound };
            (e, v)
        }
    };
    Ok(RipDecision { verdict, delta, estimate })
}

/// `(‖M x_S‖² / ‖x_S‖², φ(S))` for a factor `M` of `L(G)`; the two agree
/// when `|S| ≤ n/2`.
pub fn indicator_identity_check(m: &SensingMatrix, g: &RegularGraph, s: &VertexSet) -> Result<(f64, f64)> {
    if m.cols() != g.n() {
        return Err(param(format!("matrix has {} columns but graph has {} vertices", m.cols(), g.n())));
    }
    if 2 * s.len() > g.n() {
        return Err(param(format!("|S|={} exceeds n/2", s.len())));
    }
    let phi = expansion(g, s)?.expansion;
    let gain = m.gain(&s.indicator(g.n()))?;
    Ok((gain * gain, phi))
}
