//! Small-set expansion, the sparse Cheeger inequality and its threshold
//! rounding, and the reduction from small-set expansion to certifying the
//! restricted isometry property of a Laplacian factor.
//!
//! Modules, bottom up:
//!
//! - [`graph`]: d-regular graphs, expansion `φ(S)`, exact `φ_k(G)`,
//!   random and planted-cut generators, graph files.
//! - [`spectral`]: normalized Laplacian, Rayleigh quotients, exact sparse
//!   eigenvalue `λ_k`.
//! - [`rounding`]: level-set sweep with the `√(λ(2 − λ))` guarantee and the
//!   randomized rounding it derandomizes.
//! - [`rip`]: Laplacian factor `MᵀM = L`, exact and sampled RIC, RIP
//!   decisions, matrix files.
//! - [`pipeline`]: reduction parameters, the two gap experiments, the
//!   Cheeger verification suite and JSON reports.
//! - [`cli`]: the `sparse-cheeger` command line.

pub mod cli;
pub mod error;
pub mod graph;
mod linalg;
pub mod pipeline;
pub mod rip;
pub mod rounding;
pub mod spectral;
pub mod support;

pub use error::{Error, Result};
