//! Thermodynamic potential of the superconducting band,
//!
//! ```text
//! Omega(T) = -2 N0 int E dx
//!            + N0 int u^2/E tanh(E/2T) dx
//!            - 4 N0 T int ln(1 + e^{-E/T}) dx,      E = sqrt(x^2 + u^2),
//! ```
//!
//! its temperature derivative as the full seven-term analytic expansion
//! (entropy S = -dOmega/dT), and the specific heat C_V = -T d^2Omega/dT^2.
//! Every analytic derivative is cross-checkable against Richardson finite
//! differences of Omega; the pair of routes is the module's central
//! correctness invariant.

use crate::error::{Error, Result};
use crate::gap::{GapSolution, GapSweep};
use crate::potential::PotentialKernel;
use crate::quad::EnergyGrid;
use crate::special::{fermi, ln1p_exp_neg, sech2, tanh_sat};

/// Material parameters: band edges, density of states at the Fermi surface,
/// and the pairing kernel. Units have k_B = 1; Omega carries N0 * energy^2.
#[derive(Debug, Clone)]
pub struct MaterialSpec {
    pub epsilon: f64,
    pub omega_cut: f64,
    pub n0: f64,
    pub kernel: PotentialKernel,
}

impl MaterialSpec {
    /// Check band bounds, the density of states, positivity of the kernel on
    /// the grid, and that the grid actually spans this material's band.
    pub fn validate(&self, grid: &EnergyGrid) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon < self.omega_cut) {
            return Err(Error::param(
                "epsilon",
                format!(
                    "need 0 < epsilon < omega_cut, got [{}, {}]",
                    self.epsilon, self.omega_cut
                ),
            ));
        }
        if !(self.n0 > 0.0) || !self.n0.is_finite() {
            return Err(Error::param("n0", "must be positive and finite"));
        }
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs().max(1.0);
        if !close(grid.epsilon(), self.epsilon) || !close(grid.omega_cut(), self.omega_cut) {
            return Err(Error::param(
                "grid",
                "grid band does not match the material band",
            ));
        }
        self.kernel.validate(grid)?;
        Ok(())
    }
}

/// One evaluated point of the thermodynamic curves. `entropy_formula` comes
/// from the analytic seven-term expansion, `entropy_fd` and `cv_fd` from
/// Richardson finite differences of Omega; `consistency_gap` is their
/// relative disagreement. `fd_resolved` is false when the finite differences
/// sit below double-precision rounding of Omega (deep low-T regime).
#[derive(Debug, Clone, serde::Serialize)]
pub struct ThermoPoint {
    pub temperature: f64,
    pub omega: f64,
    pub entropy_formula: f64,
    pub entropy_fd: f64,
    pub cv_fd: Option<f64>,
    pub consistency_gap: f64,
    pub fd_resolved: bool,
}

/// The seven-term expansion of dOmega/dT, kept term by term so the
/// low-temperature hierarchy (which terms survive near absolute zero) can be
/// tested numerically instead of assumed. The seventh term is split into its
/// leading Fermi-factor piece and its du^2/dT piece.
#[derive(Debug, Clone, Copy)]
pub struct OmegaSlopeTerms {
    pub term1: f64,
    pub term2: f64,
    pub term3: f64,
    pub term4: f64,
    pub term5: f64,
    pub term6: f64,
    pub term7_leading: f64,
    pub term7_du2: f64,
}

impl OmegaSlopeTerms {
    pub fn sum(&self) -> f64 {
        self.term1
            + self.term2
            + self.term3
            + self.term4
            + self.term5
            + self.term6
            + self.term7_leading
            + self.term7_du2
    }

    /// The terms weighted by du^2/dT (set to zero by the near-zero
    /// approximation).
    pub fn du2_weighted(&self) -> [f64; 5] {
        [self.term1, self.term2, self.term3, self.term4, self.term7_du2]
    }

    pub fn term7(&self) -> f64 {
        self.term7_leading + self.term7_du2
    }
}

/// Omega evaluated on a converged profile. At T = 0 the tanh factor is 1 and
/// the log term vanishes.
pub fn omega(spec: &MaterialSpec, grid: &EnergyGrid, sol: &GapSolution) -> Result<f64> {
    if sol.values.len() != grid.len() {
        return Err(Error::param("solution", "profile does not match the grid"));
    }
    if !(sol.temperature >= 0.0) {
        return Err(Error::param("temperature", "must be >= 0"));
    }
    let t = sol.temperature;
    let n0 = spec.n0;
    let mut acc = crate::sum::CompensatedSum::default();
    for ((&x, &w), &u) in grid.nodes().iter().zip(grid.weights()).zip(&sol.values) {
        let e = (x * x + u * u).sqrt();
        let mut v = -2.0 * n0 * e;
        if u != 0.0 {
            let th = if t == 0.0 { 1.0 } else { tanh_sat(e / (2.0 * t)) };
            v += n0 * u * u / e * th;
        }
        if t > 0.0 {
            v -= 4.0 * n0 * t * ln1p_exp_neg(e / t);
        }
        if !v.is_finite() {
            return Err(Error::NonFiniteIntegrand { index: 0, node: x });
        }
        acc.add(w * v);
    }
    Ok(acc.value())
}

/// Omega(sol) - Omega(zero_ref), where `zero_ref` is a zero-temperature
/// profile, with the subtraction carried out inside the integrand. The plain
/// difference of two omega() values loses everything below machine epsilon
/// of the full potential (~1), which buries low-temperature finite
/// differences; differencing per node keeps the rounding floor at the scale
/// of the thermal part itself.
pub fn omega_thermal(
    spec: &MaterialSpec,
    grid: &EnergyGrid,
    sol: &GapSolution,
    zero_ref: &GapSolution,
) -> Result<f64> {
    if sol.values.len() != grid.len() || zero_ref.values.len() != grid.len() {
        return Err(Error::param("solution", "profile does not match the grid"));
    }
    if zero_ref.temperature != 0.0 {
        return Err(Error::param("zero_ref", "reference must be the T = 0 profile"));
    }
    let t = sol.temperature;
    let n0 = spec.n0;
    let mut acc = crate::sum::CompensatedSum::default();
    for (i, (&x, &w)) in grid.nodes().iter().zip(grid.weights()).enumerate() {
        let ut = sol.values[i];
        let u0 = zero_ref.values[i];
        let et = (x * x + ut * ut).sqrt();
        let e0 = (x * x + u0 * u0).sqrt();
        // E_t - E_0 without cancellation
        let band = -2.0 * n0 * (ut - u0) * (ut + u0) / (et + e0);
        let pair_t = if ut == 0.0 {
            0.0
        } else {
            let th = if t == 0.0 { 1.0 } else { tanh_sat(et / (2.0 * t)) };
            ut * ut / et * th
        };
        let pair_0 = if u0 == 0.0 { 0.0 } else { u0 * u0 / e0 };
        let mut v = band + n0 * (pair_t - pair_0);
        if t > 0.0 {
            v -= 4.0 * n0 * t * ln1p_exp_neg(et / t);
        }
        if !v.is_finite() {
            return Err(Error::NonFiniteIntegrand { index: i, node: x });
        }
        acc.add(w * v);
    }
    Ok(acc.value())
}

/// The full seven-term analytic expansion of dOmega/dT at temperature `t`,
/// with du^2/dT supplied by the sweep's finite-difference estimator at step
/// `h`.
pub fn d_omega_dt_terms(
    spec: &MaterialSpec,
    sweep: &GapSweep,
    t: f64,
    h: f64,
) -> Result<OmegaSlopeTerms> {
    if !(t > 0.0) {
        return Err(Error::param("temperature", "must be positive"));
    }
    let grid = sweep.grid();
    let sol = sweep.solve_at(t)?;
    let v_t = sweep.du2_dt(t, h)?;
    let n0 = spec.n0;

    let mut acc = [crate::sum::CompensatedSum::default(); 8];
    for i in 0..grid.len() {
        let x = grid.nodes()[i];
        let w = grid.weights()[i];
        let u = sol.values[i];
        let dv = v_t[i];
        let e = (x * x + u * u).sqrt();
        let y = e / (2.0 * t);
        let z = e / t;
        let th = tanh_sat(y);
        let s2 = sech2(y);
        let f = fermi(z);

        acc[0].add(w * (-n0 * dv / e));
        acc[1].add(w * (n0 * dv * th / e));
        acc[2].add(w * (-0.5 * n0 * dv * u * u / (e * e * e) * th));
        acc[3].add(w * (0.25 * n0 / t * dv * u * u / (e * e) * s2));
        acc[4].add(w * (-0.5 * n0 / (t * t) * u * u * s2));
        acc[5].add(w * (-4.0 * n0 * ln1p_exp_neg(z)));
        acc[6].add(w * (-4.0 * n0 * f * z));
        acc[7].add(w * (4.0 * n0 * f * dv / (2.0 * e)));
    }
    Ok(OmegaSlopeTerms {
        term1: acc[0].value(),
        term2: acc[1].value(),
        term3: acc[2].value(),
        term4: acc[3].value(),
        term5: acc[4].value(),
        term6: acc[5].value(),
        term7_leading: acc[6].value(),
        term7_du2: acc[7].value(),
    })
}

/// Sum of the seven-term expansion (the analytic dOmega/dT).
pub fn d_omega_dt_formula(spec: &MaterialSpec, sweep: &GapSweep, t: f64, h: f64) -> Result<f64> {
    Ok(d_omega_dt_terms(spec, sweep, t, h)?.sum())
}

/// Entropy by both routes: S = -dOmega/dT from the analytic expansion and
/// from a Richardson central difference of Omega.
pub fn entropy(spec: &MaterialSpec, sweep: &GapSweep, t: f64, h: f64) -> Result<ThermoPoint> {
    let formula = -d_omega_dt_formula(spec, sweep, t, h)?;
    let (fd_slope, omega_t, resolved) = omega_slope_fd(spec, sweep, t, h)?;
    let entropy_fd = -fd_slope;
    let consistency_gap = (formula - entropy_fd).abs() / entropy_fd.abs().max(1e-300);
    Ok(ThermoPoint {
        temperature: t,
        omega: omega_t,
        entropy_formula: formula,
        entropy_fd,
        cv_fd: None,
        consistency_gap,
        fd_resolved: resolved,
    })
}

/// C_V = -T d^2Omega/dT^2 by a Richardson second central difference of the
/// thermal part of the potential (the zero-temperature reference drops out
/// of any temperature difference). The cancellation guard rejects steps
/// whose second difference has fallen below 100 machine epsilons of the full
/// potential.
pub fn specific_heat(spec: &MaterialSpec, sweep: &GapSweep, t: f64, h: f64) -> Result<f64> {
    check_steps(t, h)?;
    let zero_ref = sweep.zero_solution();
    let omega_at =
        |tt: f64| -> Result<f64> { omega_thermal(spec, sweep.grid(), &sweep.solve_at(tt)?, zero_ref) };
    let center_sol = sweep.solve_at(t)?;
    let guard_scale = omega(spec, sweep.grid(), &center_sol)?.abs();
    let center = omega_thermal(spec, sweep.grid(), &center_sol, zero_ref)?;
    let second = |hh: f64| -> Result<f64> {
        let plus = omega_at(t + hh)?;
        let minus = omega_at(t - hh)?;
        let diff = plus - 2.0 * center + minus;
        if diff.abs() < 100.0 * f64::EPSILON * guard_scale {
            return Err(Error::CancellationGuard { temperature: t });
        }
        Ok(diff / (hh * hh))
    };
    let coarse = second(h)?;
    let fine = second(0.5 * h)?;
    Ok(-t * (4.0 * fine - coarse) / 3.0)
}

fn check_steps(t: f64, h: f64) -> Result<()> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::StepSize {
            h,
            message: "step must be positive and finite".into(),
        });
    }
    if t - h < 0.0 {
        return Err(Error::StepSize {
            h,
            message: "T - h reaches below absolute zero".into(),
        });
    }
    Ok(())
}

/// Richardson slope of Omega (through its thermal part) plus Omega(T) itself
/// and a flag telling whether the differences stood above rounding noise of
/// the full potential.
fn omega_slope_fd(
    spec: &MaterialSpec,
    sweep: &GapSweep,
    t: f64,
    h: f64,
) -> Result<(f64, f64, bool)> {
    check_steps(t, h)?;
    let zero_ref = sweep.zero_solution();
    let omega_at =
        |tt: f64| -> Result<f64> { omega_thermal(spec, sweep.grid(), &sweep.solve_at(tt)?, zero_ref) };
    let center_plain = omega(spec, sweep.grid(), &sweep.solve_at(t)?)?;
    let mut resolved = true;
    let mut slope = |hh: f64| -> Result<f64> {
        let plus = omega_at(t + hh)?;
        let minus = omega_at(t - hh)?;
        if (plus - minus).abs() < 100.0 * f64::EPSILON * center_plain.abs() {
            resolved = false;
        }
        Ok((plus - minus) / (2.0 * hh))
    };
    let coarse = slope(h)?;
    let fine = slope(0.5 * h)?;
    Ok(((4.0 * fine - coarse) / 3.0, center_plain, resolved))
}

/// Default steps: first derivatives tolerate a finer step than the
/// cancellation-limited second difference.
pub fn default_h_first(t: f64) -> f64 {
    0.02 * t
}

pub fn default_h_second(t: f64) -> f64 {
    0.05 * t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gap::{sweep_gap, SolverOptions};
    use crate::test_oracles::adaptive_simpson;

    fn reference() -> (MaterialSpec, EnergyGrid) {
        let kernel = PotentialKernel::constant(0.3).unwrap();
        let grid = EnergyGrid::build(1e-3, 1.0, 16, 20).unwrap();
        let spec = MaterialSpec {
            epsilon: 1e-3,
            omega_cut: 1.0,
            n0: 1.0,
            kernel,
        };
        (spec, grid)
    }

    fn tight() -> SolverOptions {
        SolverOptions {
            tol: 1e-12,
            ..SolverOptions::default()
        }
    }

    #[test]
    fn normal_state_omega_at_zero_temperature_is_the_band_integral() {
        let (spec, grid) = reference();
        let zero = GapSolution::zero(0.0, grid.len());
        let v = omega(&spec, &grid, &zero).unwrap();
        let exact = -(1.0 - 1e-6); // -N0 (b^2 - eps^2)
        assert!((v - exact).abs() <= 1e-12);
    }

    #[test]
    fn normal_state_omega_matches_adaptive_reference_at_finite_temperature() {
        let (spec, grid) = reference();
        let t = 0.1;
        let zero = GapSolution::zero(t, grid.len());
        let v = omega(&spec, &grid, &zero).unwrap();
        let log_part = adaptive_simpson(
            &|x: f64| (1.0 + (-x / t).exp()).ln(),
            1e-3,
            1.0,
            1e-14,
        );
        let exact = -(1.0 - 1e-6) - 4.0 * t * log_part;
        assert!((v - exact).abs() <= 1e-10, "{v} vs {exact}");
    }

    #[test]
    fn normal_state_omega_approaches_the_high_temperature_asymptote() {
        let (spec, grid) = reference();
        let t = 100.0;
        let zero = GapSolution::zero(t, grid.len());
        let v = omega(&spec, &grid, &zero).unwrap();
        let asymptote = -4.0 * t * std::f64::consts::LN_2 * (1.0 - 1e-3);
        assert!(
            ((v - -(1.0 - 1e-6)) / asymptote - 1.0).abs() < 0.01,
            "omega {v}, log-term asymptote {asymptote}"
        );
    }

    #[test]
    fn normal_state_entropy_formula_reduces_to_the_two_surviving_terms() {
        // with u == 0 the expansion collapses to the log + Fermi terms; the
        // finite-difference route over the normal-state Omega must agree
        let (spec, grid) = reference();
        let t = 0.15;
        let h = default_h_first(t);
        let formula = 4.0
            * spec.n0
            * grid
                .integrate(|x| {
                    ln1p_exp_neg(x / t) + (x / t) * fermi(x / t)
                })
                .unwrap();
        let omega_norm = |tt: f64| {
            let zero = GapSolution::zero(tt, grid.len());
            omega(&spec, &grid, &zero).unwrap()
        };
        let slope = |hh: f64| (omega_norm(t + hh) - omega_norm(t - hh)) / (2.0 * hh);
        let fd = -(4.0 * slope(h / 2.0) - slope(h)) / 3.0;
        assert!(
            (formula - fd).abs() / fd.abs() <= 1e-6,
            "formula {formula} vs fd {fd}"
        );
    }

    #[test]
    fn dual_route_entropy_agrees_at_half_tc() {
        let (spec, grid) = reference();
        let tc = crate::tc::find_tc(&spec.kernel, &grid, 1e-10).unwrap().tc;
        let temps: Vec<f64> = vec![0.0, 0.25 * tc, 0.5 * tc, 0.75 * tc];
        let sweep = sweep_gap(&spec.kernel, &grid, &temps, tight()).unwrap();
        let t = 0.5 * tc;
        let point = entropy(&spec, &sweep, t, default_h_first(t)).unwrap();
        assert!(point.fd_resolved);
        assert!(
            point.consistency_gap < 1e-4,
            "gap = {}",
            point.consistency_gap
        );
        assert!(point.entropy_formula > 0.0);
    }

    #[test]
    fn entropy_vanishes_toward_absolute_zero() {
        let (spec, grid) = reference();
        let sweep = sweep_gap(&spec.kernel, &grid, &[0.0], tight()).unwrap();
        let u0 = sweep.solutions()[0].sup_norm();
        let t = 0.01 * u0;
        let point = entropy(&spec, &sweep, t, default_h_first(t)).unwrap();
        assert!(
            point.entropy_formula.abs() < 1e-10 * spec.n0 * spec.omega_cut,
            "S = {}",
            point.entropy_formula
        );
    }

    #[test]
    fn specific_heat_is_positive_and_consistent_across_steps() {
        let (spec, grid) = reference();
        let tc = crate::tc::find_tc(&spec.kernel, &grid, 1e-10).unwrap().tc;
        let sweep = sweep_gap(&spec.kernel, &grid, &[0.0, 0.3 * tc, 0.6 * tc], tight()).unwrap();
        let t = 0.5 * tc;
        let h = default_h_second(t);
        let cv_a = specific_heat(&spec, &sweep, t, h).unwrap();
        let cv_b = specific_heat(&spec, &sweep, t, 0.5 * h).unwrap();
        assert!(cv_a > 0.0);
        // both Richardson estimates are O(h^4); agreement well below h^2
        assert!(
            (cv_a - cv_b).abs() / cv_a < (h / t) * (h / t),
            "cv({h}) = {cv_a}, cv({}) = {cv_b}",
            0.5 * h
        );
    }

    #[test]
    fn specific_heat_cross_checks_against_the_entropy_formula_slope() {
        let (spec, grid) = reference();
        let tc = crate::tc::find_tc(&spec.kernel, &grid, 1e-10).unwrap().tc;
        let sweep = sweep_gap(&spec.kernel, &grid, &[0.0], tight()).unwrap();
        let t = 0.5 * tc;
        let cv = specific_heat(&spec, &sweep, t, default_h_second(t)).unwrap();
        // T dS/dT with S from the seven-term expansion
        let big_h = 0.02 * t;
        let s_at = |tt: f64| {
            -d_omega_dt_formula(&spec, &sweep, tt, default_h_first(tt)).unwrap()
        };
        let slope = (s_at(t + big_h) - s_at(t - big_h)) / (2.0 * big_h);
        let cv_from_entropy = t * slope;
        assert!(
            (cv - cv_from_entropy).abs() / cv < 1e-3,
            "cv {cv} vs T dS/dT {cv_from_entropy}"
        );
    }

    #[test]
    fn normal_state_specific_heat_reaches_the_sommerfeld_form() {
        // eps/(2T) = 5e-3 and b/(2T) = 25 with eps = 1e-3: T = 0.1, b = 5
        let kernel = PotentialKernel::constant(0.3).unwrap();
        let grid = EnergyGrid::build(1e-3, 5.0, 24, 20).unwrap();
        let spec = MaterialSpec {
            epsilon: 1e-3,
            omega_cut: 5.0,
            n0: 1.0,
            kernel,
        };
        let t = 0.1;
        let omega_norm = |tt: f64| {
            let zero = GapSolution::zero(tt, grid.len());
            omega(&spec, &grid, &zero).unwrap()
        };
        let h = 0.02 * t;
        let second = |hh: f64| {
            (omega_norm(t + hh) - 2.0 * omega_norm(t) + omega_norm(t - hh)) / (hh * hh)
        };
        let cv = -t * (4.0 * second(h / 2.0) - second(h)) / 3.0;
        let sommerfeld = 8.0 * t * std::f64::consts::PI.powi(2) / 12.0;
        assert!(
            ((cv - sommerfeld) / sommerfeld).abs() < 0.005,
            "cv {cv} vs sommerfeld {sommerfeld}"
        );
    }

    #[test]
    fn omega_is_nonincreasing_and_condensation_lowers_it() {
        let (spec, grid) = reference();
        let tc = crate::tc::find_tc(&spec.kernel, &grid, 1e-10).unwrap().tc;
        let temps: Vec<f64> = (0..8).map(|i| i as f64 * 0.12 * tc).collect();
        let sweep = sweep_gap(&spec.kernel, &grid, &temps, tight()).unwrap();
        let mut previous = f64::INFINITY;
        for sol in sweep.solutions() {
            let v = omega(&spec, &grid, sol).unwrap();
            assert!(v <= previous + 1e-12, "Omega grew with temperature");
            previous = v;
            // superconducting Omega sits below the normal-state one
            let normal = omega(
                &spec,
                &grid,
                &GapSolution::zero(sol.temperature, grid.len()),
            )
            .unwrap();
            assert!(v <= normal + 1e-12);
        }
    }

    #[test]
    fn cancellation_guard_trips_on_flat_second_differences() {
        let (spec, grid) = reference();
        let sweep = sweep_gap(&spec.kernel, &grid, &[0.0], tight()).unwrap();
        let u0 = sweep.solutions()[0].sup_norm();
        // deep low-T: the second difference of Omega is below rounding
        let t = 0.02 * u0;
        let err = specific_heat(&spec, &sweep, t, default_h_second(t));
        assert!(matches!(err, Err(Error::CancellationGuard { .. })));
    }

    #[test]
    fn material_validation_rejects_inverted_bands_and_mismatched_grids() {
        let (mut spec, grid) = reference();
        assert!(spec.validate(&grid).is_ok());
        spec.epsilon = 2.0;
        assert!(spec.validate(&grid).is_err());
        spec.epsilon = 1e-3;
        spec.n0 = -1.0;
        assert!(spec.validate(&grid).is_err());
        spec.n0 = 1.0;
        let other = EnergyGrid::build(1e-2, 1.0, 4, 8).unwrap();
        assert!(spec.validate(&other).is_err());
    }
}
