//! Damped fixed-point solver for the nonlinear gap equation
//!
//! ```text
//! u(T, x) = int_band U(x, xi) u(T, xi) / sqrt(xi^2 + u^2)
//!           * tanh( sqrt(xi^2 + u^2) / (2T) ) dxi
//! ```
//!
//! discretized on an [`EnergyGrid`] (Nystrom collocation at the quadrature
//! nodes), plus temperature sweeps with warm-start continuation and
//! finite-difference temperature derivatives of u^2.

use crate::error::{Error, Result};
use crate::potential::PotentialKernel;
use crate::quad::EnergyGrid;
use crate::special::tanh_sat;

/// Hard collapse threshold: an iterate whose sup-norm falls below this is
/// snapped to the exact zero fixed point.
pub const TRIVIAL_THRESHOLD: f64 = 1e-13;

/// A converged solution also counts as trivial when its sup-norm sits below
/// 1e4 * tol: just above the transition the residual stop fires at
/// sup ~ tol / (1 - spectral radius), well before the iterate can decay to
/// the hard threshold, yet the solution is the zero one.
fn is_trivial(sup: f64, tol: f64) -> bool {
    sup < TRIVIAL_THRESHOLD || sup < 1e4 * tol
}

/// Fixed-point iteration controls.
#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Sup-norm residual tolerance.
    pub tol: f64,
    pub max_iter: usize,
    /// Picard damping in (0, 1]; halved automatically (down to 1/64) when
    /// the residual rises for five consecutive steps.
    pub damping: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol: 1e-10,
            max_iter: 10_000,
            damping: 1.0,
        }
    }
}

impl SolverOptions {
    fn check(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::param("tol", "must be positive"));
        }
        if !(self.damping > 0.0 && self.damping <= 1.0) {
            return Err(Error::param("damping", "must lie in (0, 1]"));
        }
        Ok(())
    }
}

/// Converged (or explicitly non-converged) gap profile at one temperature.
#[derive(Debug, Clone, serde::Serialize)]
pub struct GapSolution {
    pub temperature: f64,
    /// u(T, xi_i) at the grid nodes, all nonnegative.
    pub values: Vec<f64>,
    /// Sup-norm of (rhs applied to `values`) - `values`.
    pub residual_sup: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Set when the iteration collapsed to the zero solution.
    pub trivial: bool,
}

impl GapSolution {
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// The u == 0 profile, which is an exact fixed point at any temperature.
    pub fn zero(temperature: f64, n: usize) -> Self {
        GapSolution {
            temperature,
            values: vec![0.0; n],
            residual_sup: 0.0,
            iterations: 0,
            converged: true,
            trivial: true,
        }
    }
}

/// Discretized kernel with quadrature weights folded in:
/// a[i][j] = w_j U(xi_i, xi_j). Built once and reused across iterations.
pub(crate) struct KernelMatrix {
    n: usize,
    a: Vec<f64>,
}

impl KernelMatrix {
    pub(crate) fn new(kernel: &PotentialKernel, grid: &EnergyGrid) -> Result<Self> {
        let n = grid.len();
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            let x = grid.nodes()[i];
            for j in 0..n {
                a[i * n + j] = grid.weights()[j] * kernel.eval(x, grid.nodes()[j])?;
            }
        }
        Ok(KernelMatrix { n, a })
    }

    /// out_i = sum_j a_ij phi_j
    pub(crate) fn apply(&self, phi: &[f64], out: &mut [f64]) {
        for i in 0..self.n {
            let row = &self.a[i * self.n..(i + 1) * self.n];
            out[i] = crate::sum::compensated_dot(row, phi);
        }
    }

    /// Row integrals sum_j w_j U(xi_i, xi_j): the default positive start.
    fn row_integrals(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.a[i * self.n..(i + 1) * self.n].iter().sum())
            .collect()
    }
}

/// phi(xi, u) = u / E * tanh(E / 2T), the nonlinear factor under the
/// integral; the tanh factor is 1 at T = 0.
fn phi_factor(xi: f64, u: f64, temperature: f64) -> f64 {
    if u == 0.0 {
        return 0.0;
    }
    let energy = (xi * xi + u * u).sqrt();
    let th = if temperature == 0.0 {
        1.0
    } else {
        tanh_sat(energy / (2.0 * temperature))
    };
    u / energy * th
}

fn phi_vector(grid: &EnergyGrid, u: &[f64], temperature: f64, out: &mut [f64]) {
    for ((o, &xi), &ui) in out.iter_mut().zip(grid.nodes()).zip(u) {
        *o = phi_factor(xi, ui, temperature);
    }
}

/// One application of the gap-equation right side to the profile `u`.
pub fn gap_rhs(
    kernel: &PotentialKernel,
    grid: &EnergyGrid,
    temperature: f64,
    u: &[f64],
) -> Result<Vec<f64>> {
    check_profile(grid, u, temperature)?;
    let matrix = KernelMatrix::new(kernel, grid)?;
    let mut phi = vec![0.0; grid.len()];
    phi_vector(grid, u, temperature, &mut phi);
    let mut out = vec![0.0; grid.len()];
    matrix.apply(&phi, &mut out);
    Ok(out)
}

/// Nystrom evaluation of the right side at an arbitrary energy `x`; this is
/// the natural interpolation of a collocation solution off the grid nodes.
pub fn gap_rhs_at(
    kernel: &PotentialKernel,
    grid: &EnergyGrid,
    temperature: f64,
    u: &[f64],
    x: f64,
) -> Result<f64> {
    check_profile(grid, u, temperature)?;
    let mut acc = crate::sum::CompensatedSum::default();
    for ((&xi, &w), &ui) in grid.nodes().iter().zip(grid.weights()).zip(u) {
        acc.add(w * kernel.eval(x, xi)? * phi_factor(xi, ui, temperature));
    }
    Ok(acc.value())
}

fn check_profile(grid: &EnergyGrid, u: &[f64], temperature: f64) -> Result<()> {
    if u.len() != grid.len() {
        return Err(Error::param("u", "profile length must match the grid"));
    }
    if u.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::param("u", "profile must be finite and nonnegative"));
    }
    if !(temperature >= 0.0) {
        return Err(Error::param("temperature", "must be >= 0"));
    }
    Ok(())
}

/// Default strictly positive initial iterate: the kernel row integrals.
pub fn default_init(kernel: &PotentialKernel, grid: &EnergyGrid) -> Result<Vec<f64>> {
    Ok(KernelMatrix::new(kernel, grid)?.row_integrals())
}

/// Damped Picard iteration u <- (1 - d) u + d rhs(u) until the sup-norm
/// residual drops below `opts.tol`. Exhausting `max_iter` yields an explicit
/// non-converged result carrying the last residual, never a silent answer.
pub fn solve_gap(
    kernel: &PotentialKernel,
    grid: &EnergyGrid,
    temperature: f64,
    init: &[f64],
    opts: SolverOptions,
) -> Result<GapSolution> {
    let matrix = KernelMatrix::new(kernel, grid)?;
    solve_with_matrix(&matrix, grid, temperature, init, opts)
}

/// Zero-temperature solve (tanh factor identically 1) from the default
/// positive start.
pub fn solve_gap_zero_t(
    kernel: &PotentialKernel,
    grid: &EnergyGrid,
    opts: SolverOptions,
) -> Result<GapSolution> {
    let init = default_init(kernel, grid)?;
    solve_gap(kernel, grid, 0.0, &init, opts)
}

fn solve_with_matrix(
    matrix: &KernelMatrix,
    grid: &EnergyGrid,
    temperature: f64,
    init: &[f64],
    opts: SolverOptions,
) -> Result<GapSolution> {
    opts.check()?;
    check_profile(grid, init, temperature)?;

    let n = grid.len();
    let mut u = init.to_vec();
    let mut phi = vec![0.0; n];
    let mut rhs = vec![0.0; n];
    let mut damping = opts.damping;
    let mut rising = 0u32;
    let mut previous_residual = f64::INFINITY;

    for iteration in 0..=opts.max_iter {
        phi_vector(grid, &u, temperature, &mut phi);
        matrix.apply(&phi, &mut rhs);
        let residual = u
            .iter()
            .zip(&rhs)
            .fold(0.0f64, |m, (a, b)| m.max((b - a).abs()));

        if residual <= opts.tol {
            let sup = u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let trivial = is_trivial(sup, opts.tol);
            return Ok(GapSolution {
                temperature,
                values: u,
                residual_sup: residual,
                iterations: iteration,
                converged: true,
                trivial,
            });
        }
        if iteration == opts.max_iter {
            let sup = u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let trivial = is_trivial(sup, opts.tol);
            return Ok(GapSolution {
                temperature,
                values: u,
                residual_sup: residual,
                iterations: iteration,
                converged: false,
                trivial,
            });
        }

        if residual > previous_residual {
            rising += 1;
            if rising >= 5 {
                damping = (0.5 * damping).max(1.0 / 64.0);
                rising = 0;
            }
        } else {
            rising = 0;
        }
        previous_residual = residual;

        for (ui, ri) in u.iter_mut().zip(&rhs) {
            // the rhs of a nonnegative profile is nonnegative, so the mix stays >= 0
            *ui = (1.0 - damping) * *ui + damping * ri;
        }
        if u.iter().all(|v| v.abs() < TRIVIAL_THRESHOLD) {
            // collapsed onto the zero fixed point; snap to it exactly
            let mut zero = GapSolution::zero(temperature, n);
            zero.iterations = iteration + 1;
            return Ok(zero);
        }
    }
    unreachable!("loop returns on the last iteration");
}

/// Solutions along an increasing temperature ladder, each warm-started from
/// the previous one.
#[derive(Debug, Clone)]
pub struct GapSweep {
    kernel: PotentialKernel,
    grid: EnergyGrid,
    opts: SolverOptions,
    temperatures: Vec<f64>,
    solutions: Vec<GapSolution>,
}

/// Sequential continuation: the ladder must start at T = 0 (the zero-T
/// solve seeds the warm start). Non-convergence at one temperature is
/// recorded on that solution and the sweep continues.
pub fn sweep_gap(
    kernel: &PotentialKernel,
    grid: &EnergyGrid,
    temperatures: &[f64],
    opts: SolverOptions,
) -> Result<GapSweep> {
    if temperatures.is_empty() {
        return Err(Error::param("temperatures", "must be non-empty"));
    }
    if temperatures[0] != 0.0 {
        return Err(Error::param("temperatures", "ladder must start at T = 0"));
    }
    if temperatures.windows(2).any(|p| !(p[0] < p[1])) {
        return Err(Error::param("temperatures", "must be strictly increasing"));
    }

    let matrix = KernelMatrix::new(kernel, grid)?;
    let mut solutions = Vec::with_capacity(temperatures.len());
    let mut seed = matrix.row_integrals();
    for &t in temperatures {
        let sol = solve_with_matrix(&matrix, grid, t, &seed, opts)?;
        // keep a positive seed alive for the next rung even if this one
        // collapsed to the trivial solution
        if !sol.trivial {
            seed = sol.values.clone();
        }
        solutions.push(sol);
    }
    Ok(GapSweep {
        kernel: kernel.clone(),
        grid: grid.clone(),
        opts,
        temperatures: temperatures.to_vec(),
        solutions,
    })
}

impl GapSweep {
    pub fn grid(&self) -> &EnergyGrid {
        &self.grid
    }

    pub fn kernel(&self) -> &PotentialKernel {
        &self.kernel
    }

    pub fn tol(&self) -> f64 {
        self.opts.tol
    }

    pub fn temperatures(&self) -> &[f64] {
        &self.temperatures
    }

    pub fn solutions(&self) -> &[GapSolution] {
        &self.solutions
    }

    /// The T = 0 base of the ladder (sweeps always start at absolute zero).
    pub fn zero_solution(&self) -> &GapSolution {
        &self.solutions[0]
    }

    /// Solution at temperature `t`: the stored one when the ladder contains
    /// `t`, otherwise solved on demand, warm-started from the nearest stored
    /// rung at or below `t`. On-demand solves must converge.
    pub fn solve_at(&self, t: f64) -> Result<GapSolution> {
        if !(t >= 0.0) {
            return Err(Error::param("temperature", "must be >= 0"));
        }
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1e-300);
        if let Some(k) = self.temperatures.iter().position(|&tk| close(tk, t)) {
            return Ok(self.solutions[k].clone());
        }
        let matrix = KernelMatrix::new(&self.kernel, &self.grid)?;
        let seed = self
            .solutions
            .iter()
            .rfind(|s| s.temperature <= t && !s.trivial && s.converged)
            .map(|s| s.values.clone())
            .unwrap_or_else(|| matrix.row_integrals());
        let sol = solve_with_matrix(&matrix, &self.grid, t, &seed, self.opts)?;
        if !sol.converged {
            return Err(Error::NotConverged {
                temperature: t,
                iterations: sol.iterations,
                residual: sol.residual_sup,
            });
        }
        Ok(sol)
    }

    /// Central finite difference of the squared profile,
    /// [u^2(T+h) - u^2(T-h)] / 2h, improved by one Richardson step (h, h/2).
    ///
    /// When the u^2 differences at both steps fall below ten times the solver
    /// tolerance the derivative is indistinguishable from zero at this
    /// resolution and the zero vector is returned (near absolute zero the
    /// true derivative vanishes faster than any power of T).
    pub fn du2_dt(&self, t: f64, h: f64) -> Result<Vec<f64>> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::StepSize {
                h,
                message: "step must be positive and finite".into(),
            });
        }
        if t - h < 0.0 {
            return Err(Error::StepSize {
                h,
                message: format!("T - h = {} below absolute zero", t - h),
            });
        }
        if h < 16.0 * f64::EPSILON * t.max(1.0) {
            return Err(Error::StepSize {
                h,
                message: "step below floating-point resolution; use a larger h".into(),
            });
        }

        let n = self.grid.len();
        let mut signal = 0.0f64;
        let mut diff = |hh: f64| -> Result<Vec<f64>> {
            let up = self.solve_at(t + hh)?;
            let um = self.solve_at(t - hh)?;
            let mut d = vec![0.0; n];
            for i in 0..n {
                let raw = up.values[i] * up.values[i] - um.values[i] * um.values[i];
                signal = signal.max(raw.abs());
                d[i] = raw / (2.0 * hh);
            }
            Ok(d)
        };
        let coarse = diff(h)?;
        let fine = diff(0.5 * h)?;

        if signal < 10.0 * self.opts.tol {
            return Ok(vec![0.0; n]);
        }
        Ok(coarse
            .iter()
            .zip(&fine)
            .map(|(c, f)| (4.0 * f - c) / 3.0)
            .collect())
    }
}

/// Default step for temperature derivatives of the profile.
pub fn default_du2_step(t: f64) -> f64 {
    (0.01 * t).max(1e-4)
}
