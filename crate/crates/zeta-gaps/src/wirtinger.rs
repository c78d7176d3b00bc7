//! Analytic constants of the three functional inequalities feeding the gap
//! bounds: the integral `I(k)` of the Brnetic-Pecaric Wirtinger inequality,
//! the Agarwal-Pang Gamma-ratio constant, and the Yang Opial factor.

use thiserror::Error;

use crate::quad::{self, QuadError, QuadratureResult};
use crate::rational::{gamma_half_ratio, ExactRational, PiScaled};

#[derive(Debug, Error, Clone)]
pub enum WirtingerError {
    #[error("k must be >= 1 (got {0})")]
    KOutOfRange(u32),
    #[error("tolerance must satisfy 0 < tol <= 1e-6 (got {0:e})")]
    InvalidTolerance(f64),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

const MAX_PANELS: usize = 4096;

/// The integrand of `I(k)`, written in the overflow-free form
/// `(t(1-t))^{2k-1} / (t^{2k-1} + (1-t)^{2k-1})`.
///
/// The raw form `1/(t^{1-2k} + (1-t)^{1-2k})` is a 1/inf expression at the
/// endpoints; analytically the integrand tends to 0 there, which this form
/// (with explicit endpoint handling) reproduces.
fn i_integrand(k: u32, t: f64) -> f64 {
    if t <= 0.0 || t >= 1.0 {
        return 0.0;
    }
    let e = (2 * k - 1) as i32;
    let u = t.powi(e);
    let v = (1.0 - t).powi(e);
    (u * v) / (u + v)
}

/// `I(k) = int_0^1 dt / (t^{1-2k} + (1-t)^{1-2k})` by adaptive quadrature.
///
/// The integrand is smooth on (0,1), symmetric about 1/2, and flat at both
/// endpoints, so plain panel bisection converges fast. `tol` is the absolute
/// error target and must be at most 1e-6.
pub fn i_integral(k: u32, tol: f64) -> Result<QuadratureResult, WirtingerError> {
    if k < 1 {
        return Err(WirtingerError::KOutOfRange(k));
    }
    if !(tol > 0.0 && tol <= 1e-6) {
        return Err(WirtingerError::InvalidTolerance(tol));
    }
    Ok(quad::integrate(|t| i_integrand(k, t), 0.0, 1.0, tol, MAX_PANELS)?)
}

/// Same integrand restricted to `[0, 1/2]`; doubling this must reproduce
/// [`i_integral`] by symmetry.
pub fn i_integral_half(k: u32, tol: f64) -> Result<QuadratureResult, WirtingerError> {
    if k < 1 {
        return Err(WirtingerError::KOutOfRange(k));
    }
    if !(tol > 0.0 && tol <= 1e-6) {
        return Err(WirtingerError::InvalidTolerance(tol));
    }
    Ok(quad::integrate(|t| i_integrand(k, t), 0.0, 0.5, tol, MAX_PANELS)?)
}

/// Published decimal values of `I(k)` for `k = 2..=7`, as printed (rounded
/// to 4-5 significant digits, so comparisons belong at ~1e-3 relative).
pub fn published_i_values() -> Vec<(u32, ExactRational)> {
    [
        (2u32, (2863i64, 125_000i64)),
        (3, (19_581, 5_000_000)),
        (4, (743, 1_000_000)),
        (5, (14_961, 100_000_000)),
        (6, (15_653, 500_000_000)),
        (7, (16_823, 2_500_000_000)),
    ]
    .into_iter()
    .map(|(k, (n, d))| (k, ExactRational::new(n, d).expect("nonzero denominator")))
    .collect()
}

/// The exact Agarwal-Pang constant `2 Gamma(2k+1) / (pi^{2k} Gamma^2((2k+1)/2))`.
pub fn ap_constant(k: u32) -> PiScaled {
    assert!(k >= 1, "ap_constant requires k >= 1");
    gamma_half_ratio(k)
}

/// The Yang Opial factor `n/(m+n) * half_length^m` for the two-endpoint form
/// on an interval of half-width `half_length`.
pub fn yang_factor(m: u32, n: u32, half_length: f64) -> f64 {
    assert!(m >= 2 && m % 2 == 0, "m must be even and >= 2");
    assert!(n >= 2 && n % 2 == 0, "n must be even and >= 2");
    assert!(half_length > 0.0, "half_length must be positive");
    f64::from(n) / f64::from(m + n) * half_length.powi(m as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::pi_f64;
    use crate::special::ln_gamma;

    // Independently computed high-precision values of I(k) (50-digit
    // arithmetic, tanh-sinh quadrature), frozen here as the numeric oracle.
    const I_REFERENCE: [(u32, f64); 7] = [
        (1, 0.16666666666666666666),
        (2, 0.022903672307862609906),
        (3, 0.0039161770283739060487),
        (4, 0.00074300000294130622214),
        (5, 0.00014961103344869223160),
        (6, 0.000031306378635722525866),
        (7, 0.0000067292287448810801642),
    ];

    #[test]
    fn i1_has_closed_form_one_sixth() {
        // for k = 1 the integrand reduces to t(1-t)
        let r = i_integral(1, 1e-12).unwrap();
        assert!((r.value - 1.0 / 6.0).abs() < 1e-12);
        assert!(r.abs_error_estimate <= 1e-12);
        assert!(r.panels_used <= MAX_PANELS);
    }

    #[test]
    fn i_matches_high_precision_reference() {
        for (k, expect) in I_REFERENCE {
            let r = i_integral(k, 1e-10).unwrap();
            assert!(
                (r.value - expect).abs() / expect < 1e-9,
                "I({k}) = {} vs {expect}",
                r.value
            );
        }
    }

    #[test]
    fn i_matches_published_decimals_at_1e3() {
        for (k, published) in published_i_values() {
            let r = i_integral(k, 1e-10).unwrap();
            let p = published.to_f64();
            assert!((r.value - p).abs() / p < 1e-3, "I({k}) vs published {p}");
        }
    }

    #[test]
    fn i_symmetry_about_one_half() {
        for k in 1..=7 {
            let whole = i_integral(k, 1e-11).unwrap().value;
            let half = i_integral_half(k, 1e-11).unwrap().value;
            assert!((2.0 * half - whole).abs() <= 2e-11, "k = {k}");
        }
    }

    #[test]
    fn i_strictly_decreasing_in_k() {
        let mut prev = f64::INFINITY;
        for k in 1..=7 {
            let v = i_integral(k, 1e-10).unwrap().value;
            assert!(v > 0.0 && v < prev, "k = {k}");
            prev = v;
        }
    }

    #[test]
    fn i_rejects_bad_arguments() {
        assert!(matches!(i_integral(0, 1e-8), Err(WirtingerError::KOutOfRange(0))));
        assert!(matches!(i_integral(2, 1e-5), Err(WirtingerError::InvalidTolerance(_))));
        assert!(matches!(i_integral(2, 0.0), Err(WirtingerError::InvalidTolerance(_))));
        assert!(matches!(i_integral(2, -1e-9), Err(WirtingerError::InvalidTolerance(_))));
    }

    #[test]
    fn integrand_endpoint_limits_are_zero() {
        for k in 1..=7 {
            assert_eq!(i_integrand(k, 0.0), 0.0);
            assert_eq!(i_integrand(k, 1.0), 0.0);
            assert!(i_integrand(k, 1e-300).is_finite());
            assert!(i_integrand(k, 0.5) > 0.0);
        }
    }

    #[test]
    fn ap_constant_examples() {
        assert_eq!(ap_constant(1).coefficient.to_string(), "16");
        assert_eq!(ap_constant(1).pi_power, -3);
        assert_eq!(ap_constant(2).coefficient.to_string(), "256/3");
        assert_eq!(ap_constant(3).coefficient.to_string(), "2048/5");
        assert!((ap_constant(1).to_f64() - 0.51602455).abs() < 1e-8);
    }

    #[test]
    fn ap_constant_agrees_with_log_gamma() {
        let pi = pi_f64();
        for k in 1..=12u32 {
            let k_ = f64::from(k);
            let direct = ((2.0f64).ln() + ln_gamma(2.0 * k_ + 1.0)
                - 2.0 * k_ * pi.ln()
                - 2.0 * ln_gamma(k_ + 0.5))
            .exp();
            let mine = ap_constant(k).to_f64();
            assert!((mine - direct).abs() / direct <= 1e-12, "k = {k}");
            assert!(mine > 0.0);
        }
    }

    #[test]
    fn yang_factor_examples() {
        let pi = pi_f64();
        assert!((yang_factor(2, 2, pi / 2.0) - 0.5 * (pi / 2.0).powi(2)).abs() < 1e-15);
        assert_eq!(yang_factor(2, 2, 1.0), 0.5);
        assert!((yang_factor(4, 2, 2.0) - 16.0 / 3.0).abs() < 1e-15);
    }
}
