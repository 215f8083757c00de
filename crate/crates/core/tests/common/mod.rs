//! Shared oracles for the integration suites: plain bisection and adaptive
//! Simpson quadrature, both independent of the library's numerical paths.

#![allow(dead_code)]

pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
    }
    fn rec<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let left = simpson(f, a, m);
        let right = simpson(f, m, b);
        if depth > 60 || (left + right - whole).abs() <= 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            rec(f, a, m, left, tol / 2.0, depth + 1) + rec(f, m, b, right, tol / 2.0, depth + 1)
        }
    }
    let whole = simpson(f, a, b);
    rec(f, a, b, whole, tol, 0)
}

pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(
        flo.signum() != f(hi).signum(),
        "bisect needs a sign change on [{lo}, {hi}]"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 || (hi - lo) <= 1e-15 * hi.abs() {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Scalar zero-temperature gap of the constant kernel: root of
/// 1 = strength (asinh(b/d) - asinh(eps/d)).
pub fn scalar_gap_zero_t(strength: f64, eps: f64, b: f64) -> f64 {
    bisect(
        |d| strength * ((b / d).asinh() - (eps / d).asinh()) - 1.0,
        1e-8,
        b,
    )
}

/// Collect failures per criterion and emit exactly one pass/fail line.
pub struct Criterion {
    number: u32,
    label: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    pub fn new(number: u32, label: &'static str) -> Self {
        Criterion {
            number,
            label,
            failures: Vec::new(),
        }
    }

    pub fn check(&mut self, ok: bool, detail: impl Into<String>) {
        if !ok {
            self.failures.push(detail.into());
        }
    }

    pub fn finish(self) {
        if self.failures.is_empty() {
            println!("[acceptance] criterion {:02} PASS — {}", self.number, self.label);
        } else {
            println!(
                "[acceptance] criterion {:02} FAIL — {}: {}",
                self.number,
                self.label,
                self.failures.join("; ")
            );
            panic!(
                "criterion {:02} failed: {}",
                self.number,
                self.failures.join("; ")
            );
        }
    }
}
