use serde::Serialize;

use crate::error::{param, Result};

/// Relative tolerance for the parameter identities.
const REL_TOL: f64 = 1e-12;

/// Parameter bundle of the small-set-expansion → RIP reduction.
///
/// `β = ε^{4/ε}` underflows `f64` once `ε` drops below about 0.02, so the
/// natural logs of `β` and `γ` are carried alongside the plain values and
/// the identity checks are done in log space. `q` is then infinite and
/// serializes as `null`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionParams {
    pub eps: f64,
    /// Order ratio `C ≥ 1`.
    pub c: f64,
    pub n: usize,
    /// `ε^{0.4}`.
    pub delta: f64,
    /// `ε^{4/ε}`.
    pub beta: f64,
    pub ln_beta: f64,
    /// `β / C`.
    pub alpha: f64,
    /// `1 / α`.
    pub q: f64,
    /// `ε^{4/ε + 2}`.
    pub gamma: f64,
    pub ln_gamma: f64,
    /// `⌊β n⌋`.
    pub k: usize,
    /// `γ / β`, equal to `ε²`.
    pub gamma_over_beta: f64,
    /// `β^{ε/4}`, the stability tail bound, equal to `ε`.
    pub tail_bound: f64,
    /// `β^{ε/4} + γ/β`.
    pub tail_plus_gamma: f64,
    /// `ε + ε²`.
    pub tail_target: f64,
    /// `tail_plus_gamma ≤ tail_target` up to relative 1e-12.
    pub tail_check: bool,
    /// `β^{ε/4} ≤ 2ε`, only meaningful for `ε ≤ 0.25`.
    pub loose_window_check: bool,
}

impl ReductionParams {
    /// `γ / β = ε²` to relative 1e-12.
    pub fn gamma_beta_identity_holds(&self) -> bool {
        let want = self.eps * self.eps;
        (self.gamma_over_beta - want).abs() <= REL_TOL * want
    }

    /// `0 < β ≤ 1`, `δ ∈ (0, 1)`, `q ≥ 1`, checked in log space.
    pub fn invariants_hold(&self) -> bool {
        self.ln_beta <= 0.0
            && self.ln_beta.is_finite()
            && self.delta > 0.0
            && self.delta < 1.0
            && self.c.ln() - self.ln_beta >= 0.0
            && self.gamma_beta_identity_holds()
    }
}

/// Substitutes `β = ε^{4/ε}`, `α = β/C`, `q = 1/α`, `γ = ε^{4/ε+2}` and
/// `δ = ε^{0.4}`, and evaluates the tail-bound sanity check.
pub fn derive_params(eps: f64, c: f64, n: usize) -> Result<ReductionParams> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(param(format!("eps={eps} must lie in (0, 1)")));
    }
    if c < 1.0 || !c.is_finite() {
        return Err(param(format!("C={c} must be a finite value >= 1")));
    }
    if n < 1 {
        return Err(param("n must be at least 1"));
    }
    let ln_eps = eps.ln();
    let ln_beta = 4.0 / eps * ln_eps;
    let ln_gamma = ln_beta + 2.0 * ln_eps;
    let beta = ln_beta.exp();
    let gamma = ln_gamma.exp();
    let alpha = beta / c;
    let q = c / beta;
    let gamma_over_beta = (ln_gamma - ln_beta).exp();
    let tail_bound = (ln_beta * eps / 4.0).exp();
    let tail_plus_gamma = tail_bound + gamma_over_beta;
    let tail_target = eps + eps * eps;
    Ok(ReductionParams {
        eps,
        c,
        n,
        delta: eps.powf(0.4),
        beta,
        ln_beta,
        alpha,
        q,
        gamma,
        ln_gamma,
        k: (beta * n as f64).floor() as usize,
        gamma_over_beta,
        tail_bound,
        tail_plus_gamma,
        tail_target,
        tail_check: tail_plus_gamma <= tail_target * (1.0 + REL_TOL),
        loose_window_check: tail_bound <= 2.0 * eps * (1.0 + REL_TOL),
    })
}
