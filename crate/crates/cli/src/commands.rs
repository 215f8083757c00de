//! The seven subcommands: each loads a validated config, runs the matching
//! pipeline, and emits deterministic artifacts into the output directory.

use std::path::{Path, PathBuf};

use bcs_core::{
    build_report, default_h_first, default_h_second, default_init, entropy, find_tc, measure_t0,
    omega, solve_gap, specific_heat, sweep_gap, universal_ratio, GapSolution, GapSweep,
};
use serde::Serialize;

use crate::config::{load_config, sweep_ladder, LoadedConfig};
use crate::output::{fmt17, to_json_pretty, Csv, OutputDir};
use crate::{svg, CliError};

#[derive(Serialize)]
struct SolveSummary {
    temperature: f64,
    sup_norm: f64,
    residual_sup: f64,
    iterations: usize,
    converged: bool,
    trivial: bool,
}

pub fn run_solve(
    config_path: &Path,
    temperature: f64,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let loaded = load_config(config_path)?;
    let dir = output_dir(&loaded, out)?;
    if !(temperature >= 0.0) {
        return Err(CliError::Config(format!(
            "temperature: must be >= 0, got {temperature}"
        )));
    }

    let init = default_init(&loaded.spec.kernel, &loaded.grid)?;
    let sol = solve_gap(
        &loaded.spec.kernel,
        &loaded.grid,
        temperature,
        &init,
        loaded.solver,
    )?;

    let mut csv = Csv::new(&["xi", "u0"]);
    for (&x, &u) in loaded.grid.nodes().iter().zip(&sol.values) {
        csv.row(&[x, u]);
    }
    dir.write("solution.csv", &csv.finish())?;
    dir.write(
        "solve.json",
        &to_json_pretty(&SolveSummary {
            temperature: sol.temperature,
            sup_norm: sol.sup_norm(),
            residual_sup: sol.residual_sup,
            iterations: sol.iterations,
            converged: sol.converged,
            trivial: sol.trivial,
        })?,
    )?;

    if sol.converged {
        Ok(())
    } else {
        Err(CliError::NonConvergence(format!(
            "solve at T = {temperature} stopped at residual {}",
            sol.residual_sup
        )))
    }
}

pub fn run_sweep(config_path: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let loaded = load_config(config_path)?;
    let dir = output_dir(&loaded, out)?;
    let sweep = build_sweep(&loaded)?;
    write_gap_sweep(&dir, &loaded, &sweep)?;
    if loaded.wants("svg") {
        let points: Vec<(f64, f64)> = sweep
            .solutions()
            .iter()
            .map(|s| (s.temperature, s.sup_norm()))
            .collect();
        dir.write(
            "gap_sup.svg",
            &svg::line_plot("gap amplitude vs temperature", "T", "sup u0(T)", &points),
        )?;
    }
    let stuck: Vec<f64> = sweep
        .solutions()
        .iter()
        .filter(|s| !s.converged)
        .map(|s| s.temperature)
        .collect();
    if stuck.is_empty() {
        Ok(())
    } else {
        Err(CliError::NonConvergence(format!(
            "{} sweep temperature(s) did not converge (first at T = {})",
            stuck.len(),
            stuck[0]
        )))
    }
}

pub fn run_tc(config_path: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let loaded = load_config(config_path)?;
    let dir = output_dir(&loaded, out)?;
    let tc = find_tc(&loaded.spec.kernel, &loaded.grid, 1e-10)?;
    dir.write("tc.json", &to_json_pretty(&tc)?)?;
    Ok(())
}

pub fn run_thermo(config_path: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let loaded = load_config(config_path)?;
    let dir = output_dir(&loaded, out)?;
    let sweep = build_sweep(&loaded)?;
    write_thermo_curve(&dir, &loaded, &sweep)?;
    Ok(())
}

pub fn run_asympt(config_path: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let loaded = load_config(config_path)?;
    let dir = output_dir(&loaded, out)?;
    write_asymptotics(&dir, &loaded)?;
    Ok(())
}

pub fn run_ratio(config_path: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let loaded = load_config(config_path)?;
    let dir = output_dir(&loaded, out)?;
    write_ratio(&dir, &loaded)?;
    Ok(())
}

pub fn run_report(config_path: &Path, out: Option<PathBuf>) -> Result<(), CliError> {
    let loaded = load_config(config_path)?;
    let dir = output_dir(&loaded, out)?;

    let tc = find_tc(&loaded.spec.kernel, &loaded.grid, 1e-10)?;
    dir.write("tc.json", &to_json_pretty(&tc)?)?;

    let sweep = build_sweep(&loaded)?;
    write_gap_sweep(&dir, &loaded, &sweep)?;
    write_thermo_curve(&dir, &loaded, &sweep)?;
    write_asymptotics(&dir, &loaded)?;
    let ratio = write_ratio(&dir, &loaded)?;

    let u0_zero = sweep.zero_solution().clone();
    let t0 = measure_t0(&loaded.spec, &sweep, &u0_zero)?;
    let u0_sup = u0_zero.sup_norm();

    let mut summary = String::new();
    summary.push_str(&format!("transition temperature tc = {}\n", fmt17(tc.tc)));
    summary.push_str(&format!(
        "spectral radius at tc = {}\n",
        fmt17(tc.spectral_radius_at_tc)
    ));
    summary.push_str(&format!("zero-temperature gap sup = {}\n", fmt17(u0_sup)));
    summary.push_str(&format!("u0(0)/tc = {}\n", fmt17(u0_sup / tc.tc)));
    summary.push_str(&format!(
        "near-zero validity edge t0 = {} ({} of u0): largest ladder T with approximation residual <= 1e-6\n",
        fmt17(t0),
        fmt17(t0 / u0_sup.max(1e-300)),
    ));
    summary.push_str(&format!("h_c(0)^2 = {}\n", fmt17(ratio.hc0_sq)));
    summary.push_str(&format!("c_v normal at tc = {}\n", fmt17(ratio.cvn_tc)));
    summary.push_str(&format!(
        "ratio h_c(0)^2 / (tc c_v^n(tc)) = {}\n",
        fmt17(ratio.ratio)
    ));
    summary.push_str(&format!(
        "universal weak-coupling limit = {}\n",
        fmt17(ratio.universal_limit)
    ));
    summary.push_str(&format!(
        "relative deviation from the limit = {}\n",
        fmt17(ratio.deviation)
    ));
    dir.write("summary.txt", &summary)?;
    Ok(())
}

impl LoadedConfig {
    fn wants(&self, format: &str) -> bool {
        self.config.output.formats.iter().any(|f| f == format)
    }
}

fn output_dir(loaded: &LoadedConfig, out: Option<PathBuf>) -> Result<OutputDir, CliError> {
    let root = out.unwrap_or_else(|| loaded.config.output.directory.clone());
    OutputDir::create(&root, &loaded.raw)
}

/// The configured temperature ladder; a t_max of 0 resolves to 0.95 of the
/// computed transition temperature.
fn build_sweep(loaded: &LoadedConfig) -> Result<GapSweep, CliError> {
    let t_max = if loaded.config.sweep.t_max > 0.0 {
        loaded.config.sweep.t_max
    } else {
        0.95 * find_tc(&loaded.spec.kernel, &loaded.grid, 1e-10)?.tc
    };
    let ladder = sweep_ladder(&loaded.config.sweep, t_max);
    Ok(sweep_gap(
        &loaded.spec.kernel,
        &loaded.grid,
        &ladder,
        loaded.solver,
    )?)
}

fn write_gap_sweep(dir: &OutputDir, loaded: &LoadedConfig, sweep: &GapSweep) -> Result<(), CliError> {
    let mut csv = Csv::new(&["T", "xi", "u0", "residual"]);
    for sol in sweep.solutions() {
        for (&x, &u) in loaded.grid.nodes().iter().zip(&sol.values) {
            csv.row(&[sol.temperature, x, u, sol.residual_sup]);
        }
    }
    dir.write("gap_sweep.csv", &csv.finish())
}

fn write_thermo_curve(
    dir: &OutputDir,
    loaded: &LoadedConfig,
    sweep: &GapSweep,
) -> Result<(), CliError> {
    let mut csv = Csv::new(&[
        "T",
        "Omega",
        "S_formula",
        "S_fd",
        "C_V",
        "consistency_gap",
    ]);
    let mut entropy_points = Vec::new();
    let mut heat_points = Vec::new();
    for &t in sweep.temperatures().iter().filter(|&&t| t > 0.0) {
        let point = entropy(&loaded.spec, sweep, t, default_h_first(t)).map_err(CliError::from)?;
        // deep in the low-temperature region the second difference of the
        // potential sinks below double-precision rounding; the curve keeps
        // the point with an explicit nan instead of an invented number
        let cv = match specific_heat(&loaded.spec, sweep, t, default_h_second(t)) {
            Ok(v) => v,
            Err(bcs_core::Error::CancellationGuard { .. }) => f64::NAN,
            Err(e) => return Err(e.into()),
        };
        csv.row(&[
            t,
            point.omega,
            point.entropy_formula,
            point.entropy_fd,
            cv,
            point.consistency_gap,
        ]);
        entropy_points.push((t, point.entropy_formula));
        heat_points.push((t, cv));
    }
    dir.write("thermo_curve.csv", &csv.finish())?;
    if loaded.wants("svg") {
        dir.write(
            "entropy.svg",
            &svg::line_plot("entropy vs temperature", "T", "S(T)", &entropy_points),
        )?;
        dir.write(
            "specific_heat.svg",
            &svg::line_plot("specific heat vs temperature", "T", "C_V(T)", &heat_points),
        )?;
    }
    Ok(())
}

fn write_asymptotics(dir: &OutputDir, loaded: &LoadedConfig) -> Result<(), CliError> {
    // the lowest rung compares quantities around e^{-20} of the band scale;
    // resolving them needs residuals tighter than the general-purpose default
    let solver = bcs_core::SolverOptions {
        tol: loaded.solver.tol.min(1e-13),
        max_iter: loaded.solver.max_iter.max(40_000),
        damping: loaded.solver.damping,
    };
    let sweep = sweep_gap(&loaded.spec.kernel, &loaded.grid, &[0.0], solver)?;
    let u0_zero = sweep.zero_solution().clone();
    if u0_zero.trivial {
        return Err(CliError::Numerical(
            "zero-temperature solution is trivial; no low-temperature regime to compare".into(),
        ));
    }
    let ladder: Vec<f64> = [0.2, 0.1, 0.05]
        .iter()
        .map(|f| f * u0_zero.sup_norm())
        .collect();
    let reports = build_report(&loaded.spec, &sweep, &u0_zero, &ladder)?;
    let mut csv = Csv::new(&[
        "T", "s_lowT", "s_full", "err_s", "cv_lowT", "cv_full", "err_cv", "err_gap",
    ]);
    for r in &reports {
        csv.row(&[
            r.temperature,
            r.s_low_t,
            r.s_full,
            r.err_s,
            r.cv_low_t,
            r.cv_full,
            r.err_cv,
            r.err_gap,
        ]);
    }
    dir.write("asymptotics.csv", &csv.finish())
}

fn write_ratio(dir: &OutputDir, loaded: &LoadedConfig) -> Result<bcs_core::RatioReport, CliError> {
    let u0 = bcs_core::solve_gap_zero_t(&loaded.spec.kernel, &loaded.grid, loaded.solver)?;
    if !u0.converged {
        return Err(CliError::NonConvergence(
            "zero-temperature solve did not converge".into(),
        ));
    }
    let tc = find_tc(&loaded.spec.kernel, &loaded.grid, 1e-10)?;
    let report = universal_ratio(&loaded.spec, &loaded.grid, &u0, tc.tc)?;
    dir.write("ratio.json", &to_json_pretty(&report)?)?;
    Ok(report)
}

/// Exposed for tests: the superconducting and normal-state potentials at the
/// sweep temperatures (condensation diagnostics).
#[allow(dead_code)]
pub fn condensation_curve(
    loaded: &LoadedConfig,
    sweep: &GapSweep,
) -> Result<Vec<(f64, f64, f64)>, CliError> {
    let mut out = Vec::new();
    for sol in sweep.solutions() {
        let super_omega = omega(&loaded.spec, &loaded.grid, sol)?;
        let normal = GapSolution::zero(sol.temperature, loaded.grid.len());
        let normal_omega = omega(&loaded.spec, &loaded.grid, &normal)?;
        out.push((sol.temperature, super_omega, normal_omega));
    }
    Ok(out)
}

pub fn dispatch(command: crate::Command) -> Result<(), CliError> {
    match command {
        crate::Command::Solve {
            config,
            temperature,
            out,
        } => run_solve(&config, temperature, out),
        crate::Command::Sweep { config, out } => run_sweep(&config, out),
        crate::Command::Tc { config, out } => run_tc(&config, out),
        crate::Command::Thermo { config, out } => run_thermo(&config, out),
        crate::Command::Asympt { config, out } => run_asympt(&config, out),
        crate::Command::Ratio { config, out } => run_ratio(&config, out),
        crate::Command::Report { config, out } => run_report(&config, out),
    }
}
