//! Normalized Laplacian `L = I − A/d`, Rayleigh quotients and the exact
//! sparse eigenvalue
//!
//! ```text
//!   λ_k = min_{0 < ‖x‖₀ ≤ k} xᵀLx / xᵀx
//! ```
//!
//! computed as the smallest eigenvalue of `L[T, T]` minimized over supports
//! `|T| = k`. Growing a support can only lower the minimum eigenvalue of the
//! principal submatrix (Cauchy interlacing), so the exact-size minimum equals
//! the at-most-`k` minimum.
//!
//! Note the easy direction runs `λ_k ≤ φ_k(G)`: an indicator vector is one of
//! the candidates for `λ_k`.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::graph::{RegularGraph, VertexSet};
use crate::linalg::{canonical_sign, principal_submatrix, sorted_symmetric_eigen};
use crate::support::{best_support, binomial};

/// Default cap on the number of supports an exact oracle will enumerate.
pub const ENUMERATION_BUDGET: u128 = 5_000_000;

/// Normalized Laplacian of a d-regular graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Laplacian {
    d: usize,
    matrix: DMatrix<f64>,
    edges: Vec<(usize, usize)>,
}

impl Laplacian {
    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    /// Degree of the source graph.
    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Eigenvalues in non-decreasing order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        sorted_symmetric_eigen(&self.matrix).0
    }

    /// Direct `xᵀLx / xᵀx`.
    pub fn quadratic_form(&self, x: &[f64]) -> Result<f64> {
        let v = checked_vector(self.n(), x)?;
        Ok(v.dot(&(&self.matrix * &v)) / v.norm_squared())
    }
}

fn checked_vector(n: usize, x: &[f64]) -> Result<DVector<f64>> {
    if x.len() != n {
        return Err(Error::InvalidInput(format!("vector has length {} but n={n}", x.len())));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("vector has non-finite entries".into()));
    }
    if x.iter().all(|&v| v == 0.0) {
        return Err(Error::InvalidInput("zero vector".into()));
    }
    Ok(DVector::from_column_slice(x))
}

pub fn laplacian(g: &RegularGraph) -> Laplacian {
    let n = g.n();
    let off = -1.0 / g.d() as f64;
    let mut matrix = DMatrix::identity(n, n);
    for &(u, v) in g.edges() {
        matrix[(u, v)] = off;
        matrix[(v, u)] = off;
    }
    Laplacian {
        d: g.d(),
        matrix,
        edges: g.edges().to_vec(),
    }
}

/// Rayleigh quotient through the edge sum
/// `Σ_{i,j} A_ij (x_i − x_j)² / (2d Σ x_i²)`.
pub fn rayleigh(l: &Laplacian, x: &[f64]) -> Result<f64> {
    checked_vector(l.n(), x)?;
    Ok(edge_rayleigh(&l.edges, l.d, x))
}

/// Same as [`rayleigh`], straight from the graph.
pub fn graph_rayleigh(g: &RegularGraph, x: &[f64]) -> Result<f64> {
    checked_vector(g.n(), x)?;
    Ok(edge_rayleigh(g.edges(), g.d(), x))
}

/// The ordered-pair sum counts each undirected edge twice.
fn edge_rayleigh(edges: &[(usize, usize)], d: usize, x: &[f64]) -> f64 {
    let diff: f64 = edges.iter().map(|&(u, v)| (x[u] - x[v]).powi(2)).sum();
    let norm: f64 = x.iter().map(|v| v * v).sum();
    (2.0 * diff) / (2.0 * d as f64 * norm)
}

/// Witness of an extremal sparse Rayleigh quotient.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SparseRayleighResult {
    pub value: f64,
    /// Unit eigenvector of `L[T, T]` embedded in `n` dimensions.
    pub witness: Vec<f64>,
    pub support: VertexSet,
    pub order: usize,
}

#[derive(Clone, Copy)]
enum Extreme {
    Min,
    Max,
}

fn sparse_extreme(l: &Laplacian, k: usize, which: Extreme) -> Result<SparseRayleighResult> {
    let n = l.n();
    if k < 1 || k > n {
        return Err(param(format!("k={k} must lie in [1, n={n}]")));
    }
    let supports = binomial(n, k);
    if supports > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded {
            supports,
            budget: ENUMERATION_BUDGET,
        });
    }
    let eig_of = |s: &[usize]| {
        let values = sorted_symmetric_eigen(&principal_submatrix(&l.matrix, s)).0;
        Some(match which {
            Extreme::Min => values[0],
            Extreme::Max => values[values.len() - 1],
        })
    };
    let (_, support) = match which {
        Extreme::Min => best_support(n, k, eig_of, |a: &f64, b| b.total_cmp(a)),
        Extreme::Max => best_support(n, k, eig_of, |a: &f64, b| a.total_cmp(b)),
    }
    .expect("1 <= k <= n gives at least one support");

    let (values, vectors) = sorted_symmetric_eigen(&principal_submatrix(&l.matrix, &support));
    let col = match which {
        Extreme::Min => 0,
        Extreme::Max => values.len() - 1,
    };
    let local = canonical_sign(vectors.column(col).into_owned());
    let mut witness = vec![0.0; n];
    for (slot, &v) in support.iter().enumerate() {
        witness[v] = local[slot];
    }
    Ok(SparseRayleighResult {
        value: values[col].clamp(0.0, 2.0),
        witness,
        support: VertexSet::new(support, n)?,
        order: k,
    })
}

/// Exact `λ_k`: the minimum Rayleigh quotient over vectors with at most `k`
/// non-zeros.
pub fn sparse_lambda_exact(l: &Laplacian, k: usize) -> Result<SparseRayleighResult> {
    sparse_extreme(l, k, Extreme::Min)
}

/// Exact `Λ_k`: the maximum Rayleigh quotient over vectors with at most `k`
/// non-zeros.
pub fn sparse_lambda_max_exact(l: &Laplacian, k: usize) -> Result<SparseRayleighResult> {
    sparse_extreme(l, k, Extreme::Max)
}

/// Second smallest eigenvalue of `L`.
pub fn lambda_two(l: &Laplacian) -> f64 {
    l.eigenvalues()[1].max(0.0)
}
