//! Closed-form lower bounds for the algebraic connectivity.

use crate::error::{Error, Result};

/// Denominator of the matching-number bound, `−4β² + 4β(n+2) − 2n + 5`.
pub fn matching_bound_denominator(n: usize, beta: usize) -> i64 {
    let (n, b) = (n as i64, beta as i64);
    -4 * b * b + 4 * b * (n + 2) - 2 * n + 5
}

/// Denominator of the edge-cover bound, `−4γ² + 4γ(n−2) + 6n + 5`.
pub fn cover_bound_denominator(n: usize, gamma: usize) -> i64 {
    let (n, g) = (n as i64, gamma as i64);
    -4 * g * g + 4 * g * (n - 2) + 6 * n + 5
}

/// Lower bound on `α(G)` for connected `G` of order `n` and matching number `β`.
pub fn bound_matching(n: usize, beta: usize) -> Result<f64> {
    if n < 2 || beta == 0 || 2 * beta > n {
        return Err(Error::Infeasible(format!("need n >= 2 and 1 <= beta <= n/2, got n={n}, beta={beta}")));
    }
    Ok(8.0 / matching_bound_denominator(n, beta) as f64)
}

/// Lower bound on `α(G)` for connected `G` of order `n` and edge covering number `γ`.
pub fn bound_cover(n: usize, gamma: usize) -> Result<f64> {
    if n < 2 || 2 * gamma < n || gamma >= n {
        return Err(Error::Infeasible(format!("need n >= 2 and n/2 <= gamma <= n-1, got n={n}, gamma={gamma}")));
    }
    Ok(8.0 / cover_bound_denominator(n, gamma) as f64)
}

/// Lower bound on `α(T(k,l,d−1))` with `d = dm1 + 1` and `n = k + l + d − 1`:
/// `(nd/4 − (2n + d² − 4d − 5)/8)⁻¹`, evaluated as `8 / (2nd − 2n − d² + 4d + 5)`.
pub fn kirkland_bound(k: usize, l: usize, dm1: usize) -> Result<f64> {
    if k < 1 || l < 1 || dm1 < 2 {
        return Err(Error::Infeasible(format!(
            "need k >= 1, l >= 1 and d >= 3, got k={k}, l={l}, d={}",
            dm1 + 1
        )));
    }
    let n = (k + l + dm1) as i64;
    let d = (dm1 + 1) as i64;
    Ok(8.0 / (2 * n * d - 2 * n - d * d + 4 * d + 5) as f64)
}

/// `α(P_n) = 2(1 − cos(π/n))`.
pub fn path_alpha(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooSmall(format!("path needs n >= 2, got {n}")));
    }
    Ok(2.0 * (1.0 - (std::f64::consts::PI / n as f64).cos()))
}
