//! Transition temperature via the spectral radius of the gap operator
//! linearized at u = 0: the discretized operator
//!
//! ```text
//! A_ij = w_j U(xi_i, xi_j) tanh(xi_j / 2T) / xi_j
//! ```
//!
//! has a Perron eigenvalue that decreases strictly in T; the transition
//! sits where it crosses 1.

use crate::error::{Error, Result};
use crate::potential::PotentialKernel;
use crate::quad::EnergyGrid;
use crate::special::tanh_sat;

const POWER_ITERATION_CAP: usize = 100_000;
const POWER_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, serde::Serialize)]
pub struct TcResult {
    pub tc: f64,
    /// Spectral radius evaluated at `tc` (within the requested tolerance of 1).
    #[serde(rename = "radius")]
    pub spectral_radius_at_tc: f64,
    /// Final bisection bracket strictly containing `tc`.
    pub bracket: (f64, f64),
    /// Total power-iteration steps spent across all radius evaluations.
    #[serde(rename = "iterations")]
    pub power_iterations: usize,
}

/// Spectral radius of the linearized operator at temperature `t`.
pub fn linearized_radius(kernel: &PotentialKernel, grid: &EnergyGrid, t: f64) -> Result<f64> {
    linearized_mode(kernel, grid, t).map(|(radius, _)| radius)
}

/// Spectral radius together with the (positive, sup-normalized) Perron
/// eigenvector, by power iteration from a strictly positive start. The
/// Collatz-Wielandt bounds max_i (Av)_i/v_i and min_i (Av)_i/v_i enclose the
/// Perron eigenvalue of a positive matrix, so their gap is a rigorous
/// stopping criterion.
pub fn linearized_mode(
    kernel: &PotentialKernel,
    grid: &EnergyGrid,
    t: f64,
) -> Result<(f64, Vec<f64>)> {
    let (radius, vector, _) = mode_with_count(kernel, grid, t)?;
    Ok((radius, vector))
}

fn mode_with_count(
    kernel: &PotentialKernel,
    grid: &EnergyGrid,
    t: f64,
) -> Result<(f64, Vec<f64>, usize)> {
    if !(t > 0.0) {
        return Err(Error::param("temperature", "must be positive"));
    }
    let n = grid.len();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        let x = grid.nodes()[i];
        for (j, (&xi, &w)) in grid.nodes().iter().zip(grid.weights()).enumerate() {
            a[i * n + j] = w * kernel.eval(x, xi)? * tanh_sat(xi / (2.0 * t)) / xi;
        }
    }

    let mut v = vec![1.0; n];
    let mut av = vec![0.0; n];
    for step in 1..=POWER_ITERATION_CAP {
        for i in 0..n {
            av[i] = crate::sum::compensated_dot(&a[i * n..(i + 1) * n], &v);
        }
        let mut upper = f64::NEG_INFINITY;
        let mut lower = f64::INFINITY;
        for (num, den) in av.iter().zip(&v) {
            let q = num / den;
            upper = upper.max(q);
            lower = lower.min(q);
        }
        if upper - lower <= POWER_TOLERANCE * upper.abs() {
            let radius = 0.5 * (upper + lower);
            let sup = av.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            let vector = av.iter().map(|x| x / sup).collect();
            return Ok((radius, vector, step));
        }
        let sup = av.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        for (vi, ai) in v.iter_mut().zip(&av) {
            *vi = ai / sup;
        }
    }
    Err(Error::PowerIterationStalled {
        iterations: POWER_ITERATION_CAP,
    })
}

/// Bisection on radius(T) - 1 with automatic bracketing: starting from
/// T = epsilon the bracket is grown by doubling (or shrunk toward
/// epsilon/100 when even epsilon is already below the crossing).
pub fn find_tc(kernel: &PotentialKernel, grid: &EnergyGrid, tol: f64) -> Result<TcResult> {
    if !(tol > 0.0) {
        return Err(Error::param("tol", "must be positive"));
    }
    let epsilon = if grid.epsilon() > 0.0 {
        grid.epsilon()
    } else {
        1e-6 * grid.omega_cut()
    };

    let mut iterations = 0usize;
    let mut radius_at = |t: f64| -> Result<f64> {
        let (r, _, steps) = mode_with_count(kernel, grid, t)?;
        iterations += steps;
        Ok(r)
    };

    // grow or shrink the initial point until the radius exceeds 1
    let mut t_low = epsilon;
    let mut r_low = radius_at(t_low)?;
    while r_low <= 1.0 {
        if t_low < epsilon / 100.0 {
            return Err(Error::NoTransition { t_low });
        }
        t_low /= 10.0;
        r_low = radius_at(t_low)?;
    }

    // double upward until the radius drops below 1
    let mut t_high = 2.0 * t_low;
    let mut r_high = radius_at(t_high)?;
    while r_high >= 1.0 {
        if t_high > 1e3 * grid.omega_cut() {
            return Err(Error::BracketingFailed { t_high });
        }
        t_high *= 2.0;
        r_high = radius_at(t_high)?;
    }
    let _ = (r_low, r_high);

    for _ in 0..200 {
        let mid = 0.5 * (t_low + t_high);
        let r = radius_at(mid)?;
        if (r - 1.0).abs() <= tol {
            return Ok(TcResult {
                tc: mid,
                spectral_radius_at_tc: r,
                bracket: (t_low, t_high),
                power_iterations: iterations,
            });
        }
        if r > 1.0 {
            t_low = mid;
        } else {
            t_high = mid;
        }
    }
    Err(Error::PowerIterationStalled { iterations })
}
