//! Laplacian spectra, algebraic connectivity and Fiedler vectors.

mod classify;
mod jacobi;

pub use classify::{classify_fiedler, classify_tree, FiedlerClass, ZERO_TOL};
pub use jacobi::{eigen_symmetric, Spectrum, SymmetricMatrix, MAX_SWEEPS, OFF_DIAGONAL_TOL};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative tolerance for deciding that two Laplacian eigenvalues coincide.
pub const EIGENVALUE_TOL: f64 = 1e-8;

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        m.set(u, v, -1.0);
        m.set(v, u, -1.0);
    }
    m
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    eigen_symmetric(&laplacian(g))
}

/// Second-smallest Laplacian eigenvalue, clamped at zero.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::TooSmall("algebraic connectivity needs at least two vertices".into()));
    }
    Ok(laplacian_spectrum(g)?.values[1].max(0.0))
}

/// Algebraic connectivity together with one unit Fiedler vector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiedlerData {
    pub alpha: f64,
    pub multiplicity: usize,
    pub vector: Vec<f64>,
}

/// Orthonormal basis of the eigenspace of `α(G)`, each vector orthogonal to
/// the all-ones vector and sign-normalized.
pub fn fiedler_eigenspace(g: &Graph) -> Result<(f64, Vec<Vec<f64>>)> {
    if g.order() < 2 {
        return Err(Error::TooSmall("Fiedler vectors need at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let spectrum = laplacian_spectrum(g)?;
    let alpha = spectrum.values[1];
    let tol = EIGENVALUE_TOL * spectrum.values.last().copied().unwrap_or(1.0).max(1.0);
    let basis = spectrum
        .values
        .iter()
        .zip(spectrum.vectors)
        .skip(1)
        .take_while(|(&value, _)| value - alpha <= tol)
        .map(|(_, v)| normalize_fiedler(v))
        .collect();
    Ok((alpha.max(0.0), basis))
}

pub fn fiedler_vector(g: &Graph) -> Result<FiedlerData> {
    let (alpha, basis) = fiedler_eigenspace(g)?;
    let multiplicity = basis.len();
    let vector = basis.into_iter().next().unwrap_or_default();
    Ok(FiedlerData { alpha, multiplicity, vector })
}

/// Projects out the all-ones component, rescales to unit length and flips
/// the sign so the first entry of maximum magnitude is positive.
fn normalize_fiedler(mut x: Vec<f64>) -> Vec<f64> {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter_mut().for_each(|e| *e -= mean);
    let norm = x.iter().map(|e| e * e).sum::<f64>().sqrt();
    x.iter_mut().for_each(|e| *e /= norm);
    let peak = x.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    if let Some(lead) = x.iter().find(|e| e.abs() >= peak * (1.0 - 1e-9)) {
        if *lead < 0.0 {
            x.iter_mut().for_each(|e| *e = -*e);
        }
    }
    x
}

/// `Σ_{uv∈E} (x(u) − x(v))² / Σ x(v)²`.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.order() {
        return Err(Error::DimensionMismatch { expected: g.order(), got: x.len() });
    }
    let norm2: f64 = x.iter().map(|e| e * e).sum();
    if norm2 == 0.0 {
        return Err(Error::ZeroVector);
    }
    let energy: f64 = g.edges().iter().map(|&(u, v)| (x[u] - x[v]).powi(2)).sum();
    Ok(energy / norm2)
}

/// `max_v |(L x)(v) − λ x(v)|`.
pub fn eigen_residual(g: &Graph, lambda: f64, x: &[f64]) -> f64 {
    laplacian(g)
        .mul_vec(x)
        .iter()
        .zip(x)
        .map(|(lx, xi)| (lx - lambda * xi).abs())
        .fold(0.0, f64::max)
}
