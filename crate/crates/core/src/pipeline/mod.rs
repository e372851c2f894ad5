//! End-to-end reduction from small-set expansion to RIP certification.

mod experiments;
mod params;
pub mod report;
mod vector;

pub use experiments::{
    expanding_case, gap_experiment_case1, gap_experiment_case2, planted_case, verify_cheeger_suite,
    CheegerChain, ExpandingCaseReport, KRule, PlantedCaseReport, SuiteCase, SuiteConfig, SuiteFailure,
    SuiteReport, TOL,
};
pub use params::{derive_params, ReductionParams};
pub use vector::{parse_vector, read_vector};

use crate::error::Result;
use crate::graph::RegularGraph;
use crate::rip::{factor_laplacian, SensingMatrix};
use crate::spectral::laplacian;

/// Sensing matrix `M` with `MᵀM = I − A/d`.
pub fn reduce(g: &RegularGraph) -> Result<SensingMatrix> {
    factor_laplacian(&laplacian(g))
}
