//! Gap equation of the BCS-Bogoliubov model with an arbitrary strictly
//! positive continuous pairing kernel: fixed-point solver, spectral
//! transition temperature, thermodynamic potential with entropy and specific
//! heat by dual routes, and the near-absolute-zero approximations with their
//! universal critical-field ratio.
//!
//! Units: k_B = 1; energies share the band unit, the thermodynamic potential
//! carries N0 * energy^2 (band units, no volume normalization).

pub mod asymptotics;
pub mod error;
pub mod gap;
pub mod interp;
pub mod potential;
pub mod quad;
pub mod special;
pub(crate) mod sum;
pub mod tc;
pub mod thermo;

pub use asymptotics::{
    approximation_residual, build_report, cv_low_t, cvn_tc, entropy_low_t, gap_low_t, hc0_squared,
    measure_t0, universal_ratio, universal_ratio_limit, AsymptoticReport, RatioReport,
};
pub use error::{Error, Result};
pub use gap::{
    default_du2_step, default_init, gap_rhs, gap_rhs_at, solve_gap, solve_gap_zero_t, sweep_gap,
    GapSolution, GapSweep, SolverOptions,
};
pub use interp::MonotoneCubic;
pub use potential::{KernelValidation, PotentialKernel};
pub use quad::{integrate_half_line, EnergyGrid};
pub use tc::{find_tc, linearized_mode, linearized_radius, TcResult};
pub use thermo::{
    d_omega_dt_formula, d_omega_dt_terms, default_h_first, default_h_second, entropy, omega,
    omega_thermal, specific_heat, MaterialSpec, OmegaSlopeTerms, ThermoPoint,
};
