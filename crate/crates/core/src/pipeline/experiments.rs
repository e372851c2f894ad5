//! The two promised worlds of the reduction, realized as concrete instance
//! families: a planted sparse cut (far from RIP) and random regular graphs
//! whose small sets all expand (highly RIP).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::params::{derive_params, ReductionParams};
use super::reduce;
use crate::error::{param, Result};
use crate::graph::{
    expansion, gen_planted_cut, gen_random_regular, min_expansion_small_sets, CutReport, RegularGraph, VertexSet,
};
use crate::rip::{ric_exact, support_deviation, RicEstimate};
use crate::rounding::{cheeger_bound, sweep_cut};
use crate::spectral::{lambda_two, laplacian, sparse_lambda_exact, sparse_lambda_max_exact};

/// Absolute tolerance for every inequality checked here.
pub const TOL: f64 = 1e-9;

/// Planted-cut side of the reduction.
#[derive(Debug, Clone, Serialize)]
pub struct PlantedCaseReport {
    pub params: ReductionParams,
    pub n: usize,
    pub d: usize,
    /// RIP order probed, `|S|`.
    pub order: usize,
    pub planted: CutReport,
    pub reduction_residual: f64,
    /// `‖M x_S‖ / ‖x_S‖`.
    pub gain: f64,
    pub sqrt_phi: f64,
    pub sqrt_eps: f64,
    /// `σ_min` of the columns of `M` on `S`.
    pub sigma_min_planted: f64,
    /// `1 − gain`, a lower bound on `δ_{|S|}(M)`.
    pub ric_lower_bound: f64,
    pub bridge_holds: bool,
    pub gain_within_sqrt_eps: bool,
    /// `gain < δ`: `M` is not `(|S|, 1 − δ)`-RIP.
    pub violates_far_rip: bool,
    /// `gain < 1 − δ`: `M` is not `(|S|, δ)`-RIP either.
    pub violates_delta_rip: bool,
    pub passed: bool,
}

/// Runs the planted-cut experiment on a given instance.
pub fn planted_case(g: &RegularGraph, planted: &VertexSet, eps: f64, c: f64) -> Result<PlantedCaseReport> {
    let params = derive_params(eps, c, g.n())?;
    let cut = expansion(g, planted)?;
    if cut.expansion > eps {
        return Err(param(format!(
            "planted expansion {} exceeds eps={eps}",
            cut.expansion
        )));
    }
    let m = reduce(g)?;
    let l = laplacian(g);
    let reduction_residual = m.gram_residual(l.matrix());
    let gain = m.gain(&planted.indicator(g.n()))?;
    let sqrt_phi = cut.expansion.sqrt();
    let sqrt_eps = eps.sqrt();
    let dev = support_deviation(&m, planted.members());
    let delta = params.delta;

    let bridge_holds = (gain - sqrt_phi).abs() <= TOL;
    let gain_within_sqrt_eps = gain <= sqrt_eps + TOL;
    let violates_far_rip = gain < delta;
    let violates_delta_rip = gain < 1.0 - delta;
    Ok(PlantedCaseReport {
        n: g.n(),
        d: g.d(),
        order: planted.len(),
        planted: cut,
        reduction_residual,
        gain,
        sqrt_phi,
        sqrt_eps,
        sigma_min_planted: dev.sigma_min,
        ric_lower_bound: 1.0 - gain,
        bridge_holds,
        gain_within_sqrt_eps,
        violates_far_rip,
        violates_delta_rip,
        passed: bridge_holds && gain_within_sqrt_eps && violates_far_rip,
        params,
    })
}

/// Builds a planted instance with `s` vertices and `c` crossing edges, then
/// runs [`planted_case`]. Requires `c/(d·s) ≤ eps < 1`.
pub fn gap_experiment_case1(
    n: usize,
    d: usize,
    s: usize,
    c: usize,
    eps: f64,
    order_ratio: f64,
    seed: u64,
) -> Result<PlantedCaseReport> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(param(format!("eps={eps} must lie in (0, 1) so that √eps < eps^0.4")));
    }
    if s == 0 || c as f64 / (d * s) as f64 > eps {
        return Err(param(format!("planted expansion c/(d·s) = {c}/({d}·{s}) exceeds eps={eps}")));
    }
    let (g, planted) = gen_planted_cut(n, d, s, c, seed)?;
    planted_case(&g, &planted, eps, order_ratio)
}

/// The sparse Cheeger chain `λ_k ≤ φ_k ≤ √(λ_k(2 − λ_k))` for one instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CheegerChain {
    pub lambda: f64,
    pub phi: f64,
    pub upper: f64,
    pub lower_holds: bool,
    pub upper_holds: bool,
}

impl CheegerChain {
    pub fn new(lambda: f64, phi: f64) -> Self {
        let upper = cheeger_bound(lambda);
        Self {
            lambda,
            phi,
            upper,
            lower_holds: lambda <= phi + TOL,
            upper_holds: phi <= upper + TOL,
        }
    }

    pub fn holds(&self) -> bool {
        self.lower_holds && self.upper_holds
    }

    /// `λ ≥ 1 − √(1 − φ²)`, the rearranged upper inequality.
    pub fn contrapositive_bound(&self) -> f64 {
        1.0 - (1.0 - self.phi * self.phi).max(0.0).sqrt()
    }
}

/// Expanding-graph side of the reduction.
#[derive(Debug, Clone, Serialize)]
pub struct ExpandingCaseReport {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub eps: f64,
    /// `ε^{0.4}`.
    pub delta: f64,
    pub phi_k: CutReport,
    pub lambda_k: f64,
    pub lambda_k_support: VertexSet,
    /// Largest `k`-sparse Rayleigh quotient.
    pub lambda_max_k: f64,
    pub ric: RicEstimate,
    pub chain: CheegerChain,
    pub contrapositive_bound: f64,
    pub contrapositive_holds: bool,
    /// `max(1 − √λ_k, √Λ_k − 1)`, which must match the exact RIC.
    pub ric_from_spectrum: f64,
    pub spectral_bridge_holds: bool,
    /// `Λ_k ≤ 2 − λ_k`.
    pub two_sided_holds: bool,
    /// Expansion of the sweep cut of the `λ_k` witness.
    pub sweep_phi: f64,
    pub sweep_holds: bool,
    /// `φ_k ≥ 1 − eps`.
    pub premise_holds: bool,
    /// `δ_k ≤ eps^{0.4}`; only asserted when the premise holds.
    pub rip_holds: bool,
    pub passed: bool,
}

/// Exact expanding-case checks on a given graph.
pub fn expanding_case(g: &RegularGraph, k: usize, eps: f64) -> Result<ExpandingCaseReport> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(param(format!("eps={eps} must lie in (0, 1)")));
    }
    let l = laplacian(g);
    let phi_k = min_expansion_small_sets(g, k)?;
    let low = sparse_lambda_exact(&l, k)?;
    let high = sparse_lambda_max_exact(&l, k)?;
    let ric = ric_exact(&reduce(g)?, k)?;
    let delta = eps.powf(0.4);

    let chain = CheegerChain::new(low.value, phi_k.expansion);
    let contrapositive_bound = chain.contrapositive_bound();
    let contrapositive_holds = low.value >= contrapositive_bound - TOL;
    let ric_from_spectrum = (1.0 - low.value.sqrt()).max(high.value.sqrt() - 1.0);
    let spectral_bridge_holds = (ric_from_spectrum - ric.value).abs() <= TOL;
    let two_sided_holds = high.value <= 2.0 - low.value + TOL;
    let sweep = sweep_cut(g, &low.witness)?;
    let sweep_holds = sweep.best.expansion <= cheeger_bound(low.value) + TOL;
    let premise_holds = phi_k.expansion >= 1.0 - eps;
    let rip_holds = ric.value <= delta;
    let passed = chain.holds()
        && contrapositive_holds
        && spectral_bridge_holds
        && two_sided_holds
        && sweep_holds
        && (!premise_holds || rip_holds);
    Ok(ExpandingCaseReport {
        n: g.n(),
        d: g.d(),
        k,
        eps,
        delta,
        lambda_k: low.value,
        lambda_k_support: low.support,
        lambda_max_k: high.value,
        phi_k,
        ric,
        chain,
        contrapositive_bound,
        contrapositive_holds,
        ric_from_spectrum,
        spectral_bridge_holds,
        two_sided_holds,
        sweep_phi: sweep.best.expansion,
        sweep_holds,
        premise_holds,
        rip_holds,
        passed,
    })
}

/// Random d-regular instance through [`expanding_case`].
pub fn gap_experiment_case2(n: usize, d: usize, k: usize, eps: f64, seed: u64) -> Result<ExpandingCaseReport> {
    let g = gen_random_regular(n, d, seed)?;
    expanding_case(&g, k, eps)
}

/// Which orders the Cheeger suite checks per instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KRule {
    /// `⌊n/4⌋`
    Quarter,
    /// `⌊n/2⌋`
    Half,
    Both,
}

impl KRule {
    pub fn orders(self, n: usize) -> Vec<usize> {
        let v = match self {
            KRule::Quarter => vec![n / 4],
            KRule::Half => vec![n / 2],
            KRule::Both => vec![n / 4, n / 2],
        };
        let mut v: Vec<usize> = v.into_iter().filter(|&k| k >= 1).collect();
        v.dedup();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub degrees: Vec<usize>,
    pub k_rule: KRule,
    pub seed: u64,
}

/// One `(graph, k)` check.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteCase {
    pub instance: usize,
    pub seed: u64,
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub chain: CheegerChain,
    pub sweep_phi: f64,
    pub sweep_holds: bool,
    /// `√(λ(2 − λ)) ≤ √(2λ)`.
    pub tighter_than_classical: bool,
    /// `λ₂/2 ≤ φ(G) ≤ √(2λ₂)`, checked when `k = ⌊n/2⌋` (then `φ_k = φ(G)`).
    pub classical_holds: Option<bool>,
    pub passed: bool,
}

/// A failed case with enough data to replay it.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteFailure {
    pub case: SuiteCase,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub instances: usize,
    pub cases: usize,
    pub passes: usize,
    pub failures: Vec<SuiteFailure>,
    /// Smallest `φ_k − λ_k` observed.
    pub min_lower_slack: f64,
    /// Smallest `√(λ_k(2 − λ_k)) − φ_k` observed.
    pub min_upper_slack: f64,
    /// Largest `√(2λ_k) − √(λ_k(2 − λ_k))` observed.
    pub max_classical_gap: f64,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passes == self.cases
    }
}

/// Draws `(n, d)` for instance `seed`: `d` from `degrees`, `n` in
/// `[n_min, n_max]` with `n·d` even and `d < n`.
fn instance_shape(cfg: &SuiteConfig, seed: u64) -> Result<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let d = cfg.degrees[rng.gen_range(0..cfg.degrees.len())];
        let n = rng.gen_range(cfg.n_min..=cfg.n_max);
        if d < n && (n * d).is_multiple_of(2) {
            return Ok((n, d));
        }
    }
    Err(param("no admissible (n, d) in the configured ranges"))
}

/// Checks the sparse Cheeger chain on `count` seeded random regular graphs;
type CaseWithEdges = (SuiteCase, Vec<(usize, usize)>);

/// instance `i` uses seed `seed + i`.
pub fn verify_cheeger_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.count == 0 || cfg.degrees.is_empty() || cfg.n_min > cfg.n_max || cfg.n_min < 2 {
        return Err(param("suite needs count ≥ 1, a non-empty degree set and 2 ≤ n_min ≤ n_max"));
    }
    let per_instance: Vec<Result<Vec<CaseWithEdges>>> = (0..cfg.count)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i as u64);
            let (n, d) = instance_shape(cfg, seed)?;
            let g = gen_random_regular(n, d, seed)?;
            let l = laplacian(&g);
            let l2 = lambda_two(&l);
            let mut out = Vec::new();
            for k in cfg.k_rule.orders(n) {
                let phi = min_expansion_small_sets(&g, k)?.expansion;
                let sparse = sparse_lambda_exact(&l, k)?;
                let chain = CheegerChain::new(sparse.value, phi);
                let sweep = sweep_cut(&g, &sparse.witness)?;
                let sweep_holds = sweep.best.expansion <= chain.upper + TOL;
                let tighter_than_classical = chain.upper <= (2.0 * sparse.value).sqrt() + TOL;
                let classical_holds =
                    (k == n / 2).then(|| l2 / 2.0 <= phi + TOL && phi <= (2.0 * l2).sqrt() + TOL);
                let passed = chain.holds() && sweep_holds && tighter_than_classical && classical_holds != Some(false);
                out.push((
                    SuiteCase {
                        instance: i,
                        seed,
                        n,
                        d,
                        k,
                        chain,
                        sweep_phi: sweep.best.expansion,
                        sweep_holds,
                        tighter_than_classical,
                        classical_holds,
                        passed,
                    },
                    g.edges().to_vec(),
                ));
            }
            Ok(out)
        })
        .collect();

    let mut report = SuiteReport {
        instances: cfg.count,
        cases: 0,
        passes: 0,
        failures: Vec::new(),
        min_lower_slack: f64::INFINITY,
        min_upper_slack: f64::INFINITY,
        max_classical_gap: 0.0,
    };
    for batch in per_instance {
        for (case, edges) in batch? {
            report.cases += 1;
            let ch = case.chain;
            report.min_lower_slack = report.min_lower_slack.min(ch.phi - ch.lambda);
            report.min_upper_slack = report.min_upper_slack.min(ch.upper - ch.phi);
            report.max_classical_gap = report.max_classical_gap.max((2.0 * ch.lambda).sqrt() - ch.upper);
            if case.passed {
                report.passes += 1;
            } else {
                report.failures.push(SuiteFailure { case, edges });
            }
        }
    }
    Ok(report)
}
