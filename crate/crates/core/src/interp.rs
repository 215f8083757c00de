//! Shape-preserving piecewise-cubic Hermite interpolation (Fritsch-Carlson
//! slopes). Preserves local monotonicity, so positive data never undershoots
//! through zero; used to sample the zero-temperature gap profile at rescaled
//! arguments.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct MonotoneCubic {
    x: Vec<f64>,
    y: Vec<f64>,
    d: Vec<f64>,
}

impl MonotoneCubic {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        let n = x.len();
        if n < 2 || y.len() != n {
            return Err(Error::param("interpolation data", "need matching x/y with >= 2 points"));
        }
        if x.iter().chain(y.iter()).any(|v| !v.is_finite()) {
            return Err(Error::param("interpolation data", "values must be finite"));
        }

        let mut h = Vec::with_capacity(n - 1);
        let mut delta = Vec::with_capacity(n - 1);
        for (xw, yw) in x.windows(2).zip(y.windows(2)) {
            let hi = xw[1] - xw[0];
            if hi <= 0.0 {
                return Err(Error::param("interpolation data", "x must be strictly increasing"));
            }
            h.push(hi);
            delta.push((yw[1] - yw[0]) / hi);
        }

        let mut d = vec![0.0; n];
        if n == 2 {
            d[0] = delta[0];
            d[1] = delta[0];
            return Ok(MonotoneCubic { x, y, d });
        }

        // interior: weighted harmonic mean when the secants agree in sign
        for k in 1..n - 1 {
            let (s1, s2) = (delta[k - 1], delta[k]);
            if s1 == 0.0 || s2 == 0.0 || s1.signum() != s2.signum() {
                d[k] = 0.0;
            } else {
                let w1 = 2.0 * h[k] + h[k - 1];
                let w2 = h[k] + 2.0 * h[k - 1];
                d[k] = (w1 + w2) / (w1 / s1 + w2 / s2);
            }
        }
        d[0] = endpoint_slope(h[0], h[1], delta[0], delta[1]);
        d[n - 1] = endpoint_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);

        Ok(MonotoneCubic { x, y, d })
    }

    /// Evaluate the interpolant; queries are clamped to the knot span
    /// (needed only for rounding-level overshoot of the endpoints).
    pub fn eval(&self, q: f64) -> f64 {
        let n = self.x.len();
        let q = q.clamp(self.x[0], self.x[n - 1]);
        let i = self
            .x
            .partition_point(|&k| k <= q)
            .saturating_sub(1)
            .min(n - 2);
        let h = self.x[i + 1] - self.x[i];
        let t = (q - self.x[i]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.y[i] + h10 * h * self.d[i] + h01 * self.y[i + 1] + h11 * h * self.d[i + 1]
    }

    pub fn span(&self) -> (f64, f64) {
        (self.x[0], self.x[self.x.len() - 1])
    }
}

/// Shape-preserving three-point endpoint slope with the Fritsch-Carlson
/// limiter.
fn endpoint_slope(h0: f64, h1: f64, del0: f64, del1: f64) -> f64 {
    let mut d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if d.signum() != del0.signum() {
        d = 0.0;
    } else if del0.signum() != del1.signum() && d.abs() > 3.0 * del0.abs() {
        d = 3.0 * del0;
    }
    d
}
