//! Second-largest eigenvalue magnitude of regular multigraphs.
//!
//! For `n <= DENSE_LIMIT` the multiplicity matrix is diagonalised densely.
//! Larger graphs use power iteration with `A^2`, restricted to the
//! complement of the all-ones vector, on the rotation map directly.

use crate::expander::{AlphaBound, RotationGraph};
use nalgebra::{DMatrix, DVector};
use serde::Serialize;
use thiserror::Error;

pub const DENSE_LIMIT: usize = 4096;
/// Relative slack used for pass/fail decisions, multiplied by `d`.
pub const PASS_TOLERANCE: f64 = 1e-6;
const POWER_MAX_ITERATIONS: usize = 200_000;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SpectralError {
    #[error("spectral analysis needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("graph has degree 0")]
    ZeroDegree,
    #[error("row {row} sums to {sum}, expected degree {d}")]
    NotRegular { row: usize, sum: u64, d: usize },
    #[error("principal eigenvalue {found} differs from degree {d}")]
    PrincipalMismatch { found: f64, d: usize },
    #[error("power iteration did not reach residual {target:e} (last {residual:e})")]
    NoConvergence { residual: f64, target: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Dense,
    PowerIteration,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralReport {
    pub n: usize,
    pub degree: usize,
    /// Largest `|λ|` over all eigenvalues except the principal `λ_1 = d`.
    pub lambda_hat: f64,
    pub alpha_observed: f64,
    pub tolerance: f64,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpanderVerdict {
    pub pass: bool,
    pub alpha_claim: f64,
    pub report: SpectralReport,
}

pub fn adjacency_matrix(h: &RotationGraph) -> DMatrix<f64> {
    let n = h.n();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for v in 0..n {
        for u in h.neighbors(v) {
            m[(v, u)] += 1.0;
        }
    }
    m
}

fn check_shape(h: &RotationGraph) -> Result<(), SpectralError> {
    if h.n() < 2 {
        return Err(SpectralError::TooSmall(h.n()));
    }
    if h.degree() == 0 {
        return Err(SpectralError::ZeroDegree);
    }
    Ok(())
}

pub fn second_eigenvalue(h: &RotationGraph) -> Result<SpectralReport, SpectralError> {
    let method = if h.n() <= DENSE_LIMIT { Method::Dense } else { Method::PowerIteration };
    second_eigenvalue_with(h, method)
}

pub fn second_eigenvalue_with(
    h: &RotationGraph,
    method: Method,
) -> Result<SpectralReport, SpectralError> {
    check_shape(h)?;
    let d = h.degree();
    let (lambda_hat, tolerance) = match method {
        Method::Dense => (dense_second(h)?, 1e-9 * d as f64),
        Method::PowerIteration => (power_second(h)?, PASS_TOLERANCE * d as f64),
    };
    Ok(SpectralReport {
        n: h.n(),
        degree: d,
        lambda_hat,
        alpha_observed: lambda_hat / d as f64,
        tolerance,
        method,
    })
}

fn dense_second(h: &RotationGraph) -> Result<f64, SpectralError> {
    let d = h.degree();
    let m = adjacency_matrix(h);
    for (row, r) in m.row_iter().enumerate() {
        let sum = r.iter().sum::<f64>() as u64;
        if sum != d as u64 {
            return Err(SpectralError::NotRegular { row, sum, d });
        }
    }
    let mut eig: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    eig.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let principal = eig.pop().expect("n >= 2");
    if (principal - d as f64).abs() > 1e-7 * d as f64 {
        return Err(SpectralError::PrincipalMismatch { found: principal, d });
    }
    Ok(eig.iter().map(|x| x.abs()).fold(0.0, f64::max).min(d as f64))
}

fn apply(h: &RotationGraph, x: &DVector<f64>) -> DVector<f64> {
    DVector::from_iterator(h.n(), (0..h.n()).map(|v| h.neighbors(v).map(|u| x[u]).sum()))
}

fn deflate(x: &mut DVector<f64>) {
    let mean = x.mean();
    x.add_scalar_mut(-mean);
}

/// Power iteration for the top eigenvalue of `A^2` on `1^⊥`. Its square
/// root is the largest non-principal `|λ|` of `A`.
fn power_second(h: &RotationGraph) -> Result<f64, SpectralError> {
    let n = h.n();
    let d = h.degree() as f64;
    let target = PASS_TOLERANCE * d;
    // deterministic, generic start vector
    let mut x = DVector::from_iterator(n, (0..n).map(|i| start_entry(i as u64)));
    deflate(&mut x);
    if x.norm() == 0.0 {
        return Ok(0.0);
    }
    x.normalize_mut();
    let mut residual = f64::INFINITY;
    for _ in 0..POWER_MAX_ITERATIONS {
        let mut y = apply(h, &apply(h, &x));
        deflate(&mut y);
        let mu = x.dot(&y);
        residual = (&y - &x * mu).norm();
        let norm = y.norm();
        if norm < 1e-300 {
            return Ok(0.0);
        }
        if residual <= target {
            return Ok(mu.max(0.0).sqrt());
        }
        x = y / norm;
    }
    Err(SpectralError::NoConvergence { residual, target })
}

fn start_entry(i: u64) -> f64 {
    let mut z = i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    (z >> 11) as f64 / (1u64 << 53) as f64 - 0.5
}

/// Passes iff `lambda_hat <= α d + 1e-6 d`.
pub fn verify_expander(h: &RotationGraph, claim: &AlphaBound) -> Result<ExpanderVerdict, SpectralError> {
    let report = second_eigenvalue(h)?;
    let d = h.degree() as f64;
    let alpha_claim = claim.to_f64();
    let pass = report.lambda_hat <= alpha_claim * d + PASS_TOLERANCE * d;
    Ok(ExpanderVerdict { pass, alpha_claim, report })
}
