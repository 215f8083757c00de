//! Pairing kernels U(x, xi): strictly positive continuous functions on the
//! energy band square. Three parameterized families are supported; symmetry
//! is never assumed, only positivity and continuity.

use crate::error::{Error, Result};
use crate::quad::EnergyGrid;

#[derive(Debug, Clone)]
pub enum PotentialKernel {
    /// U(x, xi) = strength everywhere.
    Constant { strength: f64 },
    /// U(x, xi) = g(x) g(xi) with g a polynomial (coefficients in ascending
    /// order). g must be positive on the band; `validate` checks it.
    Separable { coefficients: Vec<f64> },
    /// Bilinear interpolation of a positive table. Knots are strictly
    /// increasing and span the band; `values` is row-major, one row per
    /// x-knot.
    Tabulated {
        x_knots: Vec<f64>,
        xi_knots: Vec<f64>,
        values: Vec<f64>,
    },
}

/// Positivity report: minimum sampled kernel value and where it occurred.
#[derive(Debug, Clone)]
pub struct KernelValidation {
    pub min_value: f64,
    pub min_at: (f64, f64),
    pub points_checked: usize,
}

impl PotentialKernel {
    pub fn constant(strength: f64) -> Result<Self> {
        if !(strength > 0.0) || !strength.is_finite() {
            return Err(Error::param("strength", "must be positive and finite"));
        }
        Ok(PotentialKernel::Constant { strength })
    }

    pub fn separable(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.is_empty() || coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::param("coefficients", "need finite, non-empty list"));
        }
        Ok(PotentialKernel::Separable { coefficients })
    }

    pub fn tabulated(x_knots: Vec<f64>, xi_knots: Vec<f64>, rows: Vec<Vec<f64>>) -> Result<Self> {
        if x_knots.len() < 2 || xi_knots.len() < 2 {
            return Err(Error::param("knots", "need at least two knots per axis"));
        }
        for knots in [&x_knots, &xi_knots] {
            if knots.windows(2).any(|p| !(p[0] < p[1])) {
                return Err(Error::param("knots", "must be strictly increasing"));
            }
        }
        if rows.len() != x_knots.len() || rows.iter().any(|r| r.len() != xi_knots.len()) {
            return Err(Error::param(
                "values",
                "table shape must be x_knots.len() rows by xi_knots.len() columns",
            ));
        }
        let values: Vec<f64> = rows.into_iter().flatten().collect();
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::param("values", "table entries must be finite"));
        }
        Ok(PotentialKernel::Tabulated {
            x_knots,
            xi_knots,
            values,
        })
    }

    /// Parse a CSV matrix: first row = xi knots (first cell is a label and
    /// ignored), first column = x knots, body = kernel values.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::TableFormat("empty table".into()))?;
        let xi_knots: Vec<f64> = header
            .split(',')
            .skip(1)
            .map(|c| parse_cell(c, "xi knot"))
            .collect::<Result<_>>()?;
        let mut x_knots = Vec::new();
        let mut rows = Vec::new();
        for line in lines {
            let mut cells = line.split(',');
            let x = parse_cell(
                cells.next().ok_or_else(|| Error::TableFormat("short row".into()))?,
                "x knot",
            )?;
            let row: Vec<f64> = cells.map(|c| parse_cell(c, "value")).collect::<Result<_>>()?;
            if row.len() != xi_knots.len() {
                return Err(Error::TableFormat(format!(
                    "row for x = {x} has {} values, expected {}",
                    row.len(),
                    xi_knots.len()
                )));
            }
            x_knots.push(x);
            rows.push(row);
        }
        Self::tabulated(x_knots, xi_knots, rows)
    }

    pub fn from_csv_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::TableFormat(format!("{}: {e}", path.display())))?;
        Self::from_csv_str(&text)
    }

    /// Kernel value at (x, xi). Tabulated kernels reject arguments outside
    /// their knot span; the analytic families are defined everywhere.
    pub fn eval(&self, x: f64, xi: f64) -> Result<f64> {
        match self {
            PotentialKernel::Constant { strength } => Ok(*strength),
            PotentialKernel::Separable { coefficients } => {
                Ok(horner(coefficients, x) * horner(coefficients, xi))
            }
            PotentialKernel::Tabulated {
                x_knots,
                xi_knots,
                values,
            } => {
                let lo_x = x_knots[0];
                let hi_x = x_knots[x_knots.len() - 1];
                let lo_xi = xi_knots[0];
                let hi_xi = xi_knots[xi_knots.len() - 1];
                if x < lo_x || x > hi_x || xi < lo_xi || xi > hi_xi {
                    return Err(Error::OutOfBand {
                        x,
                        xi,
                        lo: lo_x.min(lo_xi),
                        hi: hi_x.max(hi_xi),
                    });
                }
                let i = cell_index(x_knots, x);
                let j = cell_index(xi_knots, xi);
                let ncol = xi_knots.len();
                let tx = (x - x_knots[i]) / (x_knots[i + 1] - x_knots[i]);
                let txi = (xi - xi_knots[j]) / (xi_knots[j + 1] - xi_knots[j]);
                let v00 = values[i * ncol + j];
                let v01 = values[i * ncol + j + 1];
                let v10 = values[(i + 1) * ncol + j];
                let v11 = values[(i + 1) * ncol + j + 1];
                Ok(v00 * (1.0 - tx) * (1.0 - txi)
                    + v01 * (1.0 - tx) * txi
                    + v10 * tx * (1.0 - txi)
                    + v11 * tx * txi)
            }
        }
    }

    /// Check strict positivity on the grid's node product set plus panel
    /// boundaries; tabulated kernels additionally have every table entry
    /// checked directly.
    pub fn validate(&self, grid: &EnergyGrid) -> Result<KernelValidation> {
        if let PotentialKernel::Tabulated {
            x_knots, xi_knots, values, ..
        } = self
        {
            let ncol = xi_knots.len();
            for (k, &v) in values.iter().enumerate() {
                if v <= 0.0 {
                    return Err(Error::NonPositiveKernel {
                        value: v,
                        site: format!(
                            "table cell ({}, {}) [x = {}, xi = {}]",
                            k / ncol,
                            k % ncol,
                            x_knots[k / ncol],
                            xi_knots[k % ncol]
                        ),
                    });
                }
            }
        }

        let mut points: Vec<f64> = grid.nodes().to_vec();
        let width = (grid.omega_cut() - grid.epsilon()) / grid.panels() as f64;
        for p in 0..=grid.panels() {
            points.push(grid.epsilon() + width * p as f64);
        }

        let mut min_value = f64::INFINITY;
        let mut min_at = (points[0], points[0]);
        for &x in &points {
            for &xi in &points {
                let v = self.eval(x, xi)?;
                if v <= 0.0 {
                    return Err(Error::NonPositiveKernel {
                        value: v,
                        site: format!("(x, xi) = ({x}, {xi})"),
                    });
                }
                if v < min_value {
                    min_value = v;
                    min_at = (x, xi);
                }
            }
        }
        Ok(KernelValidation {
            min_value,
            min_at,
            points_checked: points.len() * points.len(),
        })
    }
}

fn parse_cell(cell: &str, what: &str) -> Result<f64> {
    cell.trim()
        .parse::<f64>()
        .map_err(|_| Error::TableFormat(format!("cannot parse {what} from {cell:?}")))
}

fn horner(coefficients: &[f64], x: f64) -> f64 {
    coefficients.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Index of the cell [knots[i], knots[i+1]] containing q (q within span).
fn cell_index(knots: &[f64], q: f64) -> usize {
    let i = knots.partition_point(|&k| k <= q);
    i.saturating_sub(1).min(knots.len() - 2)
}
