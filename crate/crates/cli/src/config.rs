//! Run configuration: structured key-value file (TOML) holding the material,
//! grid, solver, sweep, and output sections. Unknown keys are rejected and
//! every validation failure names the offending key. The config file is the
//! reproducibility artifact; commands copy it verbatim into the output
//! directory.

use std::path::{Path, PathBuf};

use bcs_core::{EnergyGrid, MaterialSpec, PotentialKernel, SolverOptions};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub material: MaterialSection,
    #[serde(default)]
    pub grid: GridSection,
    #[serde(default)]
    pub solver: SolverSection,
    #[serde(default)]
    pub sweep: SweepSection,
    #[serde(default)]
    pub output: OutputSection,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialSection {
    pub epsilon: f64,
    pub omega_cut: f64,
    #[serde(default = "default_n0")]
    pub n0: f64,
    pub kernel: KernelSection,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum KernelSection {
    Constant { strength: f64 },
    Separable { coefficients: Vec<f64> },
    Tabulated { csv: PathBuf },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSection {
    #[serde(default = "default_panels")]
    pub panels: usize,
    #[serde(default = "default_order")]
    pub order: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverSection {
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default = "default_max_iter")]
    pub max_iter: usize,
    #[serde(default = "default_damping")]
    pub damping: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    #[serde(default)]
    pub t_min: f64,
    /// Upper edge of the ladder; 0 means automatic (0.95 of the computed
    /// transition temperature).
    #[serde(default)]
    pub t_max: f64,
    #[serde(default = "default_points")]
    pub points: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    #[serde(default = "default_directory")]
    pub directory: PathBuf,
    #[serde(default = "default_formats")]
    pub formats: Vec<String>,
}

fn default_n0() -> f64 {
    1.0
}
fn default_panels() -> usize {
    16
}
fn default_order() -> usize {
    20
}
fn default_tol() -> f64 {
    1e-10
}
fn default_max_iter() -> usize {
    10_000
}
fn default_damping() -> f64 {
    1.0
}
fn default_points() -> usize {
    13
}
fn default_directory() -> PathBuf {
    PathBuf::from("out")
}
fn default_formats() -> Vec<String> {
    vec!["csv".into(), "json".into()]
}

impl Default for GridSection {
    fn default() -> Self {
        GridSection {
            panels: default_panels(),
            order: default_order(),
        }
    }
}

impl Default for SolverSection {
    fn default() -> Self {
        SolverSection {
            tol: default_tol(),
            max_iter: default_max_iter(),
            damping: default_damping(),
        }
    }
}

impl Default for SweepSection {
    fn default() -> Self {
        SweepSection {
            t_min: 0.0,
            t_max: 0.0,
            points: default_points(),
            spacing: Spacing::Linear,
        }
    }
}

impl Default for OutputSection {
    fn default() -> Self {
        OutputSection {
            directory: default_directory(),
            formats: default_formats(),
        }
    }
}

/// The loaded configuration together with its raw bytes (copied into the
/// output directory) and the validated numerical objects.
#[derive(Debug)]
pub struct LoadedConfig {
    pub raw: String,
    pub config: RunConfig,
    pub spec: MaterialSpec,
    pub grid: EnergyGrid,
    pub solver: SolverOptions,
}

pub fn load_config(path: &Path) -> Result<LoadedConfig, CliError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let config: RunConfig =
        toml::from_str(&raw).map_err(|e| CliError::Config(format!("parse error: {e}")))?;
    validate(path, raw, config)
}

fn validate(path: &Path, raw: String, config: RunConfig) -> Result<LoadedConfig, CliError> {
    let bad = |key: &str, msg: String| CliError::Config(format!("{key}: {msg}"));

    let m = &config.material;
    if !m.epsilon.is_finite() || m.epsilon <= 0.0 {
        return Err(bad("material.epsilon", format!("must be > 0, got {}", m.epsilon)));
    }
    if !m.omega_cut.is_finite() || m.omega_cut <= m.epsilon {
        return Err(bad(
            "material.epsilon",
            format!(
                "must be below material.omega_cut, got epsilon = {} and omega_cut = {}",
                m.epsilon, m.omega_cut
            ),
        ));
    }
    if !m.n0.is_finite() || m.n0 <= 0.0 {
        return Err(bad("material.n0", format!("must be > 0, got {}", m.n0)));
    }

    let kernel = match &m.kernel {
        KernelSection::Constant { strength } => PotentialKernel::constant(*strength)
            .map_err(|e| bad("material.kernel.strength", e.to_string()))?,
        KernelSection::Separable { coefficients } => {
            PotentialKernel::separable(coefficients.clone())
                .map_err(|e| bad("material.kernel.coefficients", e.to_string()))?
        }
        KernelSection::Tabulated { csv } => {
            // relative table paths resolve against the config file location
            let resolved = if csv.is_relative() {
                path.parent().unwrap_or(Path::new(".")).join(csv)
            } else {
                csv.clone()
            };
            PotentialKernel::from_csv_file(&resolved)
                .map_err(|e| bad("material.kernel.csv", e.to_string()))?
        }
    };

    let g = &config.grid;
    let grid = EnergyGrid::build(m.epsilon, m.omega_cut, g.panels, g.order)
        .map_err(|e| bad("grid", e.to_string()))?;

    let s = &config.solver;
    if !s.tol.is_finite() || s.tol <= 0.0 {
        return Err(bad("solver.tol", format!("must be > 0, got {}", s.tol)));
    }
    if !(s.damping > 0.0 && s.damping <= 1.0) {
        return Err(bad(
            "solver.damping",
            format!("must lie in (0, 1], got {}", s.damping),
        ));
    }
    if s.max_iter == 0 {
        return Err(bad("solver.max_iter", "must be at least 1".into()));
    }

    let w = &config.sweep;
    if w.points < 2 {
        return Err(bad("sweep.points", format!("need at least 2, got {}", w.points)));
    }
    if w.t_min < 0.0 || !w.t_min.is_finite() {
        return Err(bad("sweep.t_min", format!("must be >= 0, got {}", w.t_min)));
    }
    if w.t_max != 0.0 && w.t_max <= w.t_min {
        return Err(bad(
            "sweep.t_max",
            format!("must exceed sweep.t_min, got {} <= {}", w.t_max, w.t_min),
        ));
    }
    if w.spacing == Spacing::Log && w.t_min <= 0.0 {
        return Err(bad("sweep.spacing", "log spacing needs sweep.t_min > 0".into()));
    }

    for f in &config.output.formats {
        if !matches!(f.as_str(), "csv" | "json" | "svg") {
            return Err(bad("output.formats", format!("unknown format {f:?}")));
        }
    }

    let spec = MaterialSpec {
        epsilon: m.epsilon,
        omega_cut: m.omega_cut,
        n0: m.n0,
        kernel,
    };
    spec.validate(&grid)
        .map_err(|e| bad("material.kernel", e.to_string()))?;

    let solver = SolverOptions {
        tol: s.tol,
        max_iter: s.max_iter,
        damping: s.damping,
    };

    Ok(LoadedConfig {
        raw,
        config,
        spec,
        grid,
        solver,
    })
}

/// The temperature ladder requested by the sweep section; always starts at
/// absolute zero (a positive t_min ladder is preceded by the T = 0 rung the
/// continuation needs). `t_max_resolved` must already be positive.
pub fn sweep_ladder(section: &SweepSection, t_max_resolved: f64) -> Vec<f64> {
    let mut out = vec![0.0];
    let lo = section.t_min;
    let n = section.points;
    match section.spacing {
        Spacing::Linear => {
            let step = (t_max_resolved - lo) / (n - 1) as f64;
            for i in 0..n {
                let t = lo + step * i as f64;
                if t > 0.0 {
                    out.push(t);
                }
            }
        }
        Spacing::Log => {
            let ratio = (t_max_resolved / lo).ln() / (n - 1) as f64;
            for i in 0..n {
                out.push(lo * (ratio * i as f64).exp());
            }
        }
    }
    out.dedup_by(|a, b| (*a - *b).abs() <= 1e-15 * b.abs());
    out
}
