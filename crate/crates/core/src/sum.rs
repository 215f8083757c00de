//! Compensated (Kahan-Babuska-Neumaier) accumulation. The solver iterates
//! 300+-term quadrature sums to residuals near the arithmetic floor, and the
//! low-temperature thermodynamics differences quantities eleven orders below
//! the potential itself; plain sequential accumulation is the limiting noise
//! source there.

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

pub(crate) fn compensated_dot(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = CompensatedSum::default();
    for (x, y) in a.iter().zip(b) {
        acc.add(x * y);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancellation_that_plain_summation_loses() {
        let mut acc = CompensatedSum::default();
        for &v in &[1.0, 1e-16, 1e-16, 1e-16, 1e-16, 1e-16, -1.0] {
            acc.add(v);
        }
        assert_eq!(acc.value(), 5e-16);
    }

    #[test]
    fn dot_matches_plain_arithmetic_on_benign_data() {
        let a = [1.0, 2.0, 3.0];
        let b = [4.0, 5.0, 6.0];
        assert_eq!(compensated_dot(&a, &b), 32.0);
    }
}
