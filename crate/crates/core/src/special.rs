//! Overflow-safe elementary functions shared by the thermodynamic integrands.
//!
//! Every cosh/tanh/exp of a large argument is evaluated through one of these
//! helpers so that quasiparticle energies far above the temperature scale
//! saturate or underflow cleanly instead of producing inf/NaN.

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// tanh saturating to exactly 1 for arguments above 20 (already 1 to within
/// f64 rounding there). Arguments are nonnegative in this crate.
#[inline]
pub fn tanh_sat(x: f64) -> f64 {
    if x > 20.0 {
        1.0
    } else {
        x.tanh()
    }
}

/// e^{-z} for z >= 0, returning exactly 0 beyond 700 (cuts subnormals off
/// before the hardware underflow at ~745).
#[inline]
pub fn exp_neg(z: f64) -> f64 {
    if z > 700.0 {
        0.0
    } else {
        (-z).exp()
    }
}

/// 1/cosh^2(x) for x >= 0, computed as 4 e^{-2x} / (1 + e^{-2x})^2 so large
/// arguments underflow to 0 instead of overflowing cosh.
#[inline]
pub fn sech2(x: f64) -> f64 {
    let e = exp_neg(2.0 * x);
    4.0 * e / ((1.0 + e) * (1.0 + e))
}

/// 1/cosh(x) for x >= 0.
#[inline]
pub fn sech(x: f64) -> f64 {
    let e = exp_neg(x);
    2.0 * e / (1.0 + e * e)
}

/// Fermi factor 1/(e^z + 1) for z >= 0, in the underflow-safe form
/// e^{-z}/(1 + e^{-z}).
#[inline]
pub fn fermi(z: f64) -> f64 {
    let e = exp_neg(z);
    e / (1.0 + e)
}

/// ln(1 + e^{-z}) for z >= 0.
#[inline]
pub fn ln1p_exp_neg(z: f64) -> f64 {
    exp_neg(z).ln_1p()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturation_and_underflow() {
        assert_eq!(tanh_sat(25.0), 1.0);
        assert_eq!(sech2(800.0), 0.0);
        assert_eq!(fermi(800.0), 0.0);
        assert_eq!(ln1p_exp_neg(800.0), 0.0);
        assert_eq!(exp_neg(700.5), 0.0);
        assert!(exp_neg(699.5) > 0.0);
    }

    #[test]
    fn matches_naive_forms_in_the_safe_range() {
        for &x in &[0.0, 0.3, 1.0, 5.0, 19.0] {
            assert!((tanh_sat(x) - x.tanh()).abs() < 1e-15);
            assert!((sech2(x) - 1.0 / (x.cosh() * x.cosh())).abs() < 1e-15);
            assert!((sech(x) - 1.0 / x.cosh()).abs() < 1e-15);
            assert!((fermi(x) - 1.0 / (x.exp() + 1.0)).abs() < 1e-15);
            assert!((ln1p_exp_neg(x) - (1.0 + (-x).exp()).ln()).abs() < 1e-15);
        }
    }
}
