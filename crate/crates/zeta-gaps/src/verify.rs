//! Property checks of the three functional inequalities behind the gap
//! bounds, on random finite sine series — functions with exact boundary
//! zeros and closed-form derivatives.
//!
//! Margins are signed so that nonnegative means the inequality held; the
//! violation floor sits two orders below the quadrature tolerance to
//! separate genuine counterexamples from integration noise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::quad::{self, QuadError};
use crate::rational::pi_f64;
use crate::wirtinger::{ap_constant, i_integral, yang_factor, WirtingerError};

/// Margins below this count as violations; quadrature runs at 1e-10, so
/// noise sits well above this floor only for genuine failures.
pub const VIOLATION_FLOOR: f64 = -1e-8;

const QUAD_TOL: f64 = 1e-10;
const MAX_PANELS: usize = 4096;

#[derive(Debug, Error, Clone)]
pub enum VerifyError {
    #[error("n_terms must be in 1..=64 (got {0})")]
    BadTermCount(usize),
    #[error("amplitude must be positive (got {0})")]
    BadAmplitude(f64),
    #[error("k must be in 1..=7 (got {0})")]
    KOutOfRange(u32),
    #[error("Opial exponents must be even and >= 2 (got m = {m}, n = {n})")]
    BadParity { m: u32, n: u32 },
    #[error("interval must satisfy b > a (got a = {a}, b = {b})")]
    BadInterval { a: f64, b: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadError),
    #[error(transparent)]
    Wirtinger(#[from] WirtingerError),
}

/// A finite sine series `f(t) = sum_j c_j sin(j t)` on `[0, pi]`, so that
/// `f(0) = f(pi) = 0` exactly and `f'(t) = sum_j j c_j cos(j t)` in closed
/// form.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialFunction {
    coefficients: Vec<f64>,
}

impl TrialFunction {
    pub fn new(coefficients: Vec<f64>) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| c * ((i + 1) as f64 * t).sin())
            .sum()
    }

    pub fn deriv(&self, t: f64) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| (i + 1) as f64 * c * ((i + 1) as f64 * t).cos())
            .sum()
    }

    /// The function scaled by a constant.
    pub fn scaled(&self, c: f64) -> Self {
        Self { coefficients: self.coefficients.iter().map(|x| c * x).collect() }
    }
}

/// Deterministic trial: `n_terms` coefficients drawn uniformly from
/// `[-amplitude, amplitude]` by a seeded generator. The same seed always
/// yields the same function, and amplitude acts as an exact scale factor.
pub fn random_trial(
    seed: u64,
    n_terms: usize,
    amplitude: f64,
) -> Result<TrialFunction, VerifyError> {
    if !(1..=64).contains(&n_terms) {
        return Err(VerifyError::BadTermCount(n_terms));
    }
    if !(amplitude > 0.0) {
        return Err(VerifyError::BadAmplitude(amplitude));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coefficients = (0..n_terms)
        .map(|_| amplitude * rng.gen_range(-1.0..=1.0))
        .collect();
    Ok(TrialFunction { coefficients })
}

fn check_k(k: u32) -> Result<(), VerifyError> {
    if (1..=7).contains(&k) {
        Ok(())
    } else {
        Err(VerifyError::KOutOfRange(k))
    }
}

/// Margin of `int_0^pi (f')^{2k} >= (1/(pi^{2k} I(k))) int_0^pi f^{2k}`.
pub fn verify_wirtinger_bp(f: &TrialFunction, k: u32) -> Result<f64, VerifyError> {
    check_k(k)?;
    let pi = pi_f64();
    let constant = 1.0 / (pi.powi(2 * k as i32) * i_integral(k, QUAD_TOL)?.value);
    let e = 2 * k as i32;
    let lhs = quad::integrate(|t| f.deriv(t).powi(e), 0.0, pi, QUAD_TOL, MAX_PANELS)?.value;
    let rhs = quad::integrate(|t| f.eval(t).powi(e), 0.0, pi, QUAD_TOL, MAX_PANELS)?.value;
    Ok(lhs - constant * rhs)
}

/// Margin of the two-endpoint Opial form
/// `int_0^pi |f|^m |f'|^n <= (n/(m+n)) (pi/2)^m int_0^pi |f'|^{m+n}`
/// (reported as RHS - LHS).
pub fn verify_opial_yang(f: &TrialFunction, m: u32, n: u32) -> Result<f64, VerifyError> {
    if m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0 {
        return Err(VerifyError::BadParity { m, n });
    }
    let pi = pi_f64();
    let factor = yang_factor(m, n, pi / 2.0);
    let lhs = quad::integrate(
        |t| f.eval(t).powi(m as i32) * f.deriv(t).powi(n as i32),
        0.0,
        pi,
        QUAD_TOL,
        MAX_PANELS,
    )?
    .value;
    let rhs = factor
        * quad::integrate(|t| f.deriv(t).powi((m + n) as i32), 0.0, pi, QUAD_TOL, MAX_PANELS)?
            .value;
    Ok(rhs - lhs)
}

/// Margin of `int_0^pi (f')^{2k} >= C_k int_0^pi f^{2k}` with the exact
/// Gamma-ratio constant `C_k = 2 Gamma(2k+1)/(pi^{2k} Gamma^2((2k+1)/2))`.
pub fn verify_wirtinger_ap(f: &TrialFunction, k: u32) -> Result<f64, VerifyError> {
    check_k(k)?;
    let pi = pi_f64();
    let constant = ap_constant(k).to_f64();
    let e = 2 * k as i32;
    let lhs = quad::integrate(|t| f.deriv(t).powi(e), 0.0, pi, QUAD_TOL, MAX_PANELS)?.value;
    let rhs = quad::integrate(|t| f.eval(t).powi(e), 0.0, pi, QUAD_TOL, MAX_PANELS)?.value;
    Ok(lhs - constant * rhs)
}

/// Margin of the affinely transported inequality on `[a, b]`:
/// `((b-a)/pi)^{2k} int_a^b (x')^{2k} >= (1/(pi^{2k} I(k))) int_a^b x^{2k}`
/// for `x(s) = f((s-a) pi/(b-a))`. The whole margin scales by `(b-a)/pi`
/// against the `[0, pi]` case, so its sign is invariant.
pub fn transformed_interval_check(
    f: &TrialFunction,
    a: f64,
    b: f64,
    k: u32,
) -> Result<f64, VerifyError> {
    check_k(k)?;
    if !(b > a) {
        return Err(VerifyError::BadInterval { a, b });
    }
    let pi = pi_f64();
    let rate = pi / (b - a);
    let scale = ((b - a) / pi).powi(2 * k as i32);
    let constant = 1.0 / (pi.powi(2 * k as i32) * i_integral(k, QUAD_TOL)?.value);
    let e = 2 * k as i32;
    let lhs = scale
        * quad::integrate(|s| (f.deriv((s - a) * rate) * rate).powi(e), a, b, QUAD_TOL, MAX_PANELS)?
            .value;
    let rhs = constant
        * quad::integrate(|s| f.eval((s - a) * rate).powi(e), a, b, QUAD_TOL, MAX_PANELS)?.value;
    Ok(lhs - rhs)
}

/// Which inequality a suite run exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    WirtingerBp,
    OpialYang,
    WirtingerAp,
}

impl Inequality {
    pub fn tag(self) -> &'static str {
        match self {
            Inequality::WirtingerBp => "wirtinger_bp",
            Inequality::OpialYang => "opial_yang",
            Inequality::WirtingerAp => "wirtinger_ap",
        }
    }
}

/// Outcome of a seeded trial batch for one inequality at one `k`.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub inequality: &'static str,
    pub k: u32,
    pub trials: u32,
    pub min_margin: f64,
    pub violations: u32,
}

/// Runs `trials` seeded random trials of one inequality for each
/// `k in 1..=3`. For the Opial form `k` maps to exponents
/// `(m, n) = (max(2, 2k-2), 2)`. Trials vary their term count cyclically.
pub fn run_inequality_suite(
    inequality: Inequality,
    trials: u32,
    seed: u64,
) -> Result<Vec<SuiteSummary>, VerifyError> {
    let mut out = Vec::new();
    for k in 1..=3u32 {
        let mut min_margin = f64::INFINITY;
        let mut violations = 0u32;
        for i in 0..trials {
            let trial_seed = seed
                .wrapping_add(u64::from(i))
                .wrapping_add(u64::from(k) << 32);
            let f = random_trial(trial_seed, 1 + (i as usize % 8), 1.0)?;
            let margin = match inequality {
                Inequality::WirtingerBp => verify_wirtinger_bp(&f, k)?,
                Inequality::WirtingerAp => verify_wirtinger_ap(&f, k)?,
                Inequality::OpialYang => verify_opial_yang(&f, (2 * k - 2).max(2), 2)?,
            };
            if margin < min_margin {
                min_margin = margin;
            }
            if margin < VIOLATION_FLOOR {
                violations += 1;
            }
        }
        out.push(SuiteSummary {
            inequality: inequality.tag(),
            k,
            trials,
            min_margin,
            violations,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sine() -> TrialFunction {
        TrialFunction::new(vec![1.0])
    }

    #[test]
    fn random_trial_is_deterministic() {
        let a = random_trial(123, 8, 1.0).unwrap();
        let b = random_trial(123, 8, 1.0).unwrap();
        assert_eq!(a, b);
        let c = random_trial(124, 8, 1.0).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_trial_amplitude_scales_exactly() {
        let unit = random_trial(5, 6, 1.0).unwrap();
        let double = random_trial(5, 6, 2.0).unwrap();
        for (u, d) in unit.coefficients().iter().zip(double.coefficients()) {
            assert_eq!(*d, 2.0 * u);
        }
    }

    #[test]
    fn random_trial_single_term_is_a_sine_multiple() {
        let f = random_trial(9, 1, 1.0).unwrap();
        assert_eq!(f.coefficients().len(), 1);
        let c = f.coefficients()[0];
        let t = 0.7;
        assert!((f.eval(t) - c * t.sin()).abs() < 1e-15);
        assert!((f.deriv(t) - c * t.cos()).abs() < 1e-15);
    }

    #[test]
    fn random_trial_validation() {
        assert!(matches!(random_trial(1, 0, 1.0), Err(VerifyError::BadTermCount(0))));
        assert!(matches!(random_trial(1, 65, 1.0), Err(VerifyError::BadTermCount(65))));
        assert!(matches!(random_trial(1, 4, 0.0), Err(VerifyError::BadAmplitude(_))));
    }

    #[test]
    fn boundary_zeros_are_exact() {
        let f = random_trial(77, 12, 2.0).unwrap();
        assert_eq!(f.eval(0.0), 0.0);
        // sin(j*pi) for the f64 pi is not exactly 0, but is ~1e-15 small
        assert!(f.eval(pi_f64()).abs() < 1e-13);
    }

    #[test]
    fn bp_margin_for_pure_sine_k2() {
        let pi = pi_f64();
        // int cos^4 = int sin^4 = 3 pi / 8
        let lhs = 3.0 * pi / 8.0;
        let i2 = i_integral(2, 1e-12).unwrap().value;
        let expected = lhs - lhs / (pi.powi(4) * i2);
        let margin = verify_wirtinger_bp(&sine(), 2).unwrap();
        assert!(margin > 0.0);
        assert!((margin - expected).abs() < 1e-9, "{margin} vs {expected}");
    }

    #[test]
    fn ap_margin_for_pure_sine_k1() {
        let pi = pi_f64();
        let expected = (pi / 2.0) * (1.0 - ap_constant(1).to_f64());
        let margin = verify_wirtinger_ap(&sine(), 1).unwrap();
        assert!((margin - expected).abs() < 1e-9);
    }

    #[test]
    fn yang_margin_for_pure_sine() {
        let pi = pi_f64();
        // int sin^2 cos^2 = pi/8, int cos^4 = 3 pi/8
        let expected = 0.5 * (pi / 2.0).powi(2) * (3.0 * pi / 8.0) - pi / 8.0;
        let margin = verify_opial_yang(&sine(), 2, 2).unwrap();
        assert!((margin - expected).abs() < 1e-9);
    }

    #[test]
    fn zero_function_has_zero_margins() {
        let zero = TrialFunction::new(vec![0.0, 0.0]);
        assert_eq!(verify_wirtinger_bp(&zero, 2).unwrap(), 0.0);
        assert_eq!(verify_wirtinger_ap(&zero, 1).unwrap(), 0.0);
        assert_eq!(verify_opial_yang(&zero, 2, 2).unwrap(), 0.0);
    }

    #[test]
    fn parity_and_domain_validation() {
        let f = sine();
        assert!(matches!(verify_opial_yang(&f, 3, 2), Err(VerifyError::BadParity { .. })));
        assert!(matches!(verify_opial_yang(&f, 2, 0), Err(VerifyError::BadParity { .. })));
        assert!(matches!(verify_wirtinger_bp(&f, 0), Err(VerifyError::KOutOfRange(0))));
        assert!(matches!(verify_wirtinger_ap(&f, 8), Err(VerifyError::KOutOfRange(8))));
        assert!(matches!(
            transformed_interval_check(&f, 2.0, 2.0, 1),
            Err(VerifyError::BadInterval { .. })
        ));
    }

    #[test]
    fn homogeneity_of_margins() {
        for (seed, k) in [(11u64, 1u32), (12, 2), (13, 3)] {
            let f = random_trial(seed, 4, 1.0).unwrap();
            let g = f.scaled(2.0);
            let power = 2.0f64.powi(2 * k as i32);
            let mf = verify_wirtinger_bp(&f, k).unwrap();
            let mg = verify_wirtinger_bp(&g, k).unwrap();
            assert!((mg - power * mf).abs() <= 1e-9 * (power * mf).abs(), "bp k = {k}");
            let mf = verify_wirtinger_ap(&f, k).unwrap();
            let mg = verify_wirtinger_ap(&g, k).unwrap();
            assert!((mg - power * mf).abs() <= 1e-9 * (power * mf).abs(), "ap k = {k}");
            let (m, n) = ((2 * k - 2).max(2), 2);
            let power = 2.0f64.powi((m + n) as i32);
            let mf = verify_opial_yang(&f, m, n).unwrap();
            let mg = verify_opial_yang(&g, m, n).unwrap();
            assert!((mg - power * mf).abs() <= 1e-9 * (power * mf).abs(), "yang k = {k}");
        }
    }

    #[test]
    fn transformed_identity_interval_reduces_to_bp() {
        let f = random_trial(21, 5, 1.0).unwrap();
        let direct = verify_wirtinger_bp(&f, 2).unwrap();
        let transformed = transformed_interval_check(&f, 0.0, pi_f64(), 2).unwrap();
        assert_eq!(direct.to_bits(), transformed.to_bits());
    }

    #[test]
    fn transformed_translation_preserves_margin() {
        let f = random_trial(22, 5, 1.0).unwrap();
        let base = transformed_interval_check(&f, 0.0, pi_f64(), 2).unwrap();
        let shifted = transformed_interval_check(&f, 5.0, 5.0 + pi_f64(), 2).unwrap();
        assert!((shifted - base).abs() <= 1e-9 * base.abs(), "{base} vs {shifted}");
    }

    #[test]
    fn transformed_pullback_on_doubled_interval_holds() {
        // x(s) = sin(s/2) on [0, 2pi]
        let margin = transformed_interval_check(&sine(), 0.0, 2.0 * pi_f64(), 2).unwrap();
        assert!(margin > 0.0);
    }

    #[test]
    fn transformed_sign_preserved_on_random_intervals() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for i in 0..100 {
            let f = random_trial(1000 + i, 1 + (i as usize % 6), 1.0).unwrap();
            let a = rng.gen_range(-10.0..10.0);
            let b = a + rng.gen_range(0.1..20.0);
            let k = 1 + (i % 3) as u32;
            let base = verify_wirtinger_bp(&f, k).unwrap();
            let moved = transformed_interval_check(&f, a, b, k).unwrap();
            assert!(
                base >= VIOLATION_FLOOR && moved >= VIOLATION_FLOOR,
                "i = {i}: base {base}, moved {moved}"
            );
            assert_eq!(base > 0.0, moved > 0.0, "sign flipped at i = {i}");
        }
    }

    #[test]
    fn one_sided_opial_sharpness_for_linear_witness() {
        // single-endpoint form with m = n = 1 on [0, 1], x(t) = t:
        // LHS = int t dt = 1/2, RHS = (1/2) * 1 * int 1 dt = 1/2
        let lhs = quad::integrate(|t: f64| t.abs(), 0.0, 1.0, 1e-12, 64).unwrap().value;
        let rhs = 0.5 * quad::integrate(|_| 1.0f64, 0.0, 1.0, 1e-12, 64).unwrap().value;
        assert!(lhs / rhs >= 0.999, "ratio = {}", lhs / rhs);
        assert!((lhs / rhs - 1.0).abs() < 1e-12);
    }

    #[test]
    fn short_suite_has_no_violations() {
        for ineq in [Inequality::WirtingerBp, Inequality::OpialYang, Inequality::WirtingerAp] {
            for summary in run_inequality_suite(ineq, 60, 424242).unwrap() {
                assert_eq!(summary.violations, 0, "{} k = {}", summary.inequality, summary.k);
                assert!(summary.min_margin >= VIOLATION_FLOOR);
                assert_eq!(summary.trials, 60);
            }
        }
    }
}
