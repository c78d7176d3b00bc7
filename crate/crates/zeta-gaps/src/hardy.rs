//! Numerical Hardy Z-function machinery: the Riemann-Siegel theta function
//! and main-sum evaluation of `Z(t)`, sign-change zero scans with a
//! count-based completeness audit, normalized gap statistics, and empirical
//! moment integrals for comparison against the conjectured growth.
//!
//! One Riemann-Siegel correction term is used throughout. That resolves
//! signs comfortably at the heights this crate targets (absolute error
//! ~1e-3 near t = 20 falling to ~5e-6 by t = 1e4, roughly an O(t^{-3/4})
//! scale); it is not a record-precision evaluator.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::quad::integrate_composite;
use crate::rational::pi_f64;
use crate::rmt::{a_factor, b_coeff, CoeffError};

/// Lower edge of the asymptotic regime accepted by [`theta`] and [`z_eval`].
pub const T_MIN_REGIME: f64 = 10.0;

/// Zeros are refined by bisection until the bracket is this narrow.
pub const REFINE_TOLERANCE: f64 = 1e-9;

/// Scan work is partitioned at absolute multiples of this width, so any two
/// scans agree exactly wherever their chunk grids overlap (and parallel and
/// serial runs agree everywhere).
const CHUNK_WIDTH: f64 = 64.0;

/// Central-difference step for `Z'`.
const DERIV_STEP: f64 = 1e-4;

/// Fixed panel width of the moment integrator; integrals over ranges whose
/// endpoints differ by whole panels add up exactly.
const MOMENT_PANEL_WIDTH: f64 = 1.0;

#[derive(Debug, Error, Clone)]
pub enum HardyError {
    #[error("t = {0} is below the asymptotic regime (t >= {T_MIN_REGIME} required)")]
    OutOfRegime(f64),
    #[error("invalid scan range: t_min = {t_min}, t_max = {t_max} (need t_max >= t_min >= {T_MIN_REGIME})")]
    InvalidRange { t_min: f64, t_max: f64 },
    #[error("grid factor must lie in (0, 0.5] (got {0})")]
    InvalidGridFactor(f64),
    #[error("gap statistics need at least 2 zeros (got {0})")]
    TooFewZeros(usize),
    #[error("moment k must be in 1..=3 and h in 0..=k (got k = {k}, h = {h})")]
    MomentDomain { k: u32, h: u32 },
    #[error("panel budget {budget} is below the {required} unit panels needed for T = {t}")]
    PanelBudgetExceeded { budget: usize, required: usize, t: f64 },
    #[error(transparent)]
    Coefficients(#[from] CoeffError),
}

fn two_pi() -> f64 {
    2.0 * pi_f64()
}

/// Riemann-Siegel theta, by the asymptotic series
/// `(t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3)`.
///
/// The next term is below 4e-9 already at t = 10, which is where the
/// accepted regime starts.
pub fn theta(t: f64) -> Result<f64, HardyError> {
    if !(t >= T_MIN_REGIME) {
        return Err(HardyError::OutOfRegime(t));
    }
    Ok(theta_raw(t))
}

fn theta_raw(t: f64) -> f64 {
    let pi = pi_f64();
    0.5 * t * (t / (2.0 * pi)).ln() - 0.5 * t - pi / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t * t)
}

/// First Riemann-Siegel remainder shape
/// `psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p)`,
/// with the removable points near p = 1/4, 3/4 evaluated by the derivative
/// ratio.
fn psi(p: f64) -> f64 {
    let pi = pi_f64();
    let phase = 2.0 * pi * (p * p - p - 0.0625);
    let den = (2.0 * pi * p).cos();
    if den.abs() < 1e-9 {
        return (2.0 * p - 1.0) * phase.sin() / (2.0 * pi * p).sin();
    }
    phase.cos() / den
}

/// Hardy Z at `t >= 10`: main sum `2 sum_{n <= sqrt(t/2pi)} cos(theta - t log n)/sqrt(n)`
/// plus the first correction term.
pub fn z_eval(t: f64) -> Result<f64, HardyError> {
    if !(t >= T_MIN_REGIME) {
        return Err(HardyError::OutOfRegime(t));
    }
    Ok(z_raw(t))
}

pub(crate) fn z_raw(t: f64) -> f64 {
    let a = (t / two_pi()).sqrt();
    let n = a.floor() as u64;
    let th = theta_raw(t);
    let mut sum = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        sum += (th - t * jf.ln()).cos() / jf.sqrt();
    }
    let p = a - n as f64;
    let mut c0 = psi(p) * (two_pi() / t).powf(0.25);
    if (n - 1) % 2 == 1 {
        c0 = -c0;
    }
    2.0 * sum + c0
}

/// Riemann-von Mangoldt main term `(T/2pi) log(T/(2pi e))`.
///
/// This is only the leading term of the zero count: it is within O(log T)
/// of the true count for T above 2 pi e, and goes negative below that.
pub fn count_main_term(t: f64) -> f64 {
    assert!(t > 0.0, "count_main_term requires t > 0");
    t / two_pi() * (t / (two_pi() * std::f64::consts::E)).ln()
}

/// Allowance used by the completeness audit: generous room for the
/// O(log T) term the main count omits.
pub fn count_allowance(t_max: f64) -> f64 {
    2.0 + 2.0 * t_max.ln() / pi_f64()
}

/// An ordered table of critical-line zero ordinates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroTable {
    /// Strictly increasing zero ordinates.
    pub ordinates: Vec<f64>,
    pub t_min: f64,
    pub t_max: f64,
    pub refine_tolerance: f64,
}

/// Issued when the audit still sees a deficit after close-pair recovery.
#[derive(Debug, Clone, Serialize)]
pub struct ScanWarning {
    pub deficit: f64,
    pub allowance: f64,
    /// Largest surviving gap intervals, the natural place to look for
    /// missed close pairs.
    pub suspect_intervals: Vec<(f64, f64)>,
}

/// Scan result: the zero table plus the audit bookkeeping.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub table: ZeroTable,
    /// Main-term estimate of how many zeros the range holds.
    pub expected_count: f64,
    /// Zeros recovered by the fine rescan, if it ran.
    pub rescued: usize,
    pub warning: Option<ScanWarning>,
}

/// Scans `[t_min, t_max]` for sign changes of Z on a grid with local step
/// `grid_factor * 2pi/log t` (a fraction of the average spacing), refines
/// every bracket by bisection, audits the count against the main term, and
/// re-scans oversized gaps at a tenth of the step when zeros appear to be
/// missing. A deficit beyond [`count_allowance`] becomes a [`ScanWarning`],
/// not an error.
pub fn find_zeros(t_min: f64, t_max: f64, grid_factor: f64) -> Result<ScanReport, HardyError> {
    if !(t_min >= T_MIN_REGIME) || !(t_max >= t_min) {
        return Err(HardyError::InvalidRange { t_min, t_max });
    }
    if !(grid_factor > 0.0 && grid_factor <= 0.5) {
        return Err(HardyError::InvalidGridFactor(grid_factor));
    }

    let chunks = chunk_boundaries(t_min, t_max);
    let mut ordinates: Vec<f64> = chunks
        .par_iter()
        .map(|&(lo, hi)| scan_interval(lo, hi, grid_factor))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    if t_max > t_min && z_raw(t_max) == 0.0 {
        ordinates.push(t_max);
    }
    dedup_sorted(&mut ordinates);

    let expected = count_main_term(t_max) - count_main_term(t_min);
    let mut rescued = 0usize;
    if expected - ordinates.len() as f64 > 1.5 {
        let fine = grid_factor / 10.0;
        let suspects = suspect_gaps(&ordinates, t_min, t_max, 1.4);
        let mut recovered: Vec<f64> = suspects
            .par_iter()
            .map(|&(a, b)| scan_interval(a, b, fine))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        recovered.retain(|&z| {
            ordinates
                .binary_search_by(|o| o.total_cmp(&z))
                .err()
                .map(|i| {
                    let near_prev = i > 0 && (z - ordinates[i - 1]).abs() < 1e-6;
                    let near_next = i < ordinates.len() && (ordinates[i] - z).abs() < 1e-6;
                    !(near_prev || near_next)
                })
                .unwrap_or(false)
        });
        rescued = recovered.len();
        ordinates.extend(recovered);
        ordinates.sort_by(|a, b| a.total_cmp(b));
        dedup_sorted(&mut ordinates);
    }

    let deficit = expected - ordinates.len() as f64;
    let allowance = count_allowance(t_max);
    let warning = (deficit.abs() > allowance).then(|| ScanWarning {
        deficit,
        allowance,
        suspect_intervals: suspect_gaps(&ordinates, t_min, t_max, 1.6).into_iter().take(8).collect(),
    });

    Ok(ScanReport {
        table: ZeroTable {
            ordinates,
            t_min,
            t_max,
            refine_tolerance: REFINE_TOLERANCE,
        },
        expected_count: expected,
        rescued,
        warning,
    })
}

/// Work units aligned to absolute multiples of [`CHUNK_WIDTH`].
fn chunk_boundaries(t_min: f64, t_max: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut lo = t_min;
    while lo < t_max {
        let aligned = ((lo / CHUNK_WIDTH).floor() + 1.0) * CHUNK_WIDTH;
        let hi = aligned.min(t_max);
        if hi <= lo {
            break;
        }
        out.push((lo, hi));
        lo = hi;
    }
    out
}

/// Sign-change scan of one interval; the grid starts at `lo` and adapts to
/// the local average spacing.
fn scan_interval(lo: f64, hi: f64, grid_factor: f64) -> Vec<f64> {
    let mut zeros = Vec::new();
    let mut t = lo;
    let mut ft = z_raw(t);
    if ft == 0.0 {
        zeros.push(t);
    }
    while t < hi {
        let step = grid_factor * two_pi() / t.ln();
        let next = (t + step).min(hi);
        if next <= t {
            break;
        }
        let fnext = z_raw(next);
        if fnext == 0.0 {
            if next < hi {
                zeros.push(next);
            }
        } else if ft != 0.0 && ft.is_sign_positive() != fnext.is_sign_positive() {
            zeros.push(bisect(t, ft, next));
        }
        t = next;
        ft = fnext;
    }
    zeros
}

fn bisect(mut a: f64, fa: f64, mut b: f64) -> f64 {
    let mut positive_left = fa.is_sign_positive();
    for _ in 0..80 {
        if b - a <= REFINE_TOLERANCE {
            break;
        }
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = z_raw(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.is_sign_positive() == positive_left {
            a = mid;
            positive_left = fm.is_sign_positive();
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

fn dedup_sorted(zeros: &mut Vec<f64>) {
    zeros.dedup_by(|b, a| (*b - *a).abs() <= REFINE_TOLERANCE);
}

/// Gap intervals whose length exceeds `threshold` times the local average
/// spacing `2pi/log(t/2pi)`; these are where close pairs hide.
fn suspect_gaps(zeros: &[f64], t_min: f64, t_max: f64, threshold: f64) -> Vec<(f64, f64)> {
    let mut intervals = Vec::new();
    let mut edges: Vec<f64> = Vec::with_capacity(zeros.len() + 2);
    edges.push(t_min);
    edges.extend_from_slice(zeros);
    edges.push(t_max);
    for w in edges.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b <= a {
            continue;
        }
        let mid = 0.5 * (a + b);
        let local_mean = two_pi() / (mid / two_pi()).ln();
        if (b - a) / local_mean > threshold {
            intervals.push((a, b));
        }
    }
    intervals
}

/// Histogram with fixed-width buckets starting at 0.
#[derive(Debug, Clone, Serialize)]
pub struct Histogram {
    pub bucket_width: f64,
    pub counts: Vec<u64>,
}

impl Histogram {
    fn build(values: &[f64], bucket_width: f64) -> Self {
        let mut counts: Vec<u64> = Vec::new();
        for &v in values {
            let idx = (v / bucket_width).floor().max(0.0) as usize;
            if idx >= counts.len() {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        Histogram { bucket_width, counts }
    }
}

/// Normalized gap statistics for a zero table.
#[derive(Debug, Clone, Serialize)]
pub struct GapStatistics {
    /// `r_n = (t_{n+1} - t_n) * log(t_n) / 2pi`.
    pub normalized_gaps: Vec<f64>,
    /// Largest `r_n`.
    pub max_gap: f64,
    /// Mean of `r_n`. With this normalization the finite-height mean sits
    /// near `log t / log(t/2pi)` (about 1.28 around t ~ 1e3..1e4) and drifts
    /// toward 1 only as t grows; see `mean_gap_local` for the
    /// density-matched statistic.
    pub mean_gap: f64,
    /// Mean of gaps normalized by the local average spacing
    /// `2pi / log(t_n/2pi)`; very close to 1 at any height.
    pub mean_gap_local: f64,
    pub histogram: Histogram,
}

/// Gap statistics per the `r_n` normalization above. Needs >= 2 zeros.
pub fn gap_stats(zeros: &ZeroTable) -> Result<GapStatistics, HardyError> {
    let n = zeros.ordinates.len();
    if n < 2 {
        return Err(HardyError::TooFewZeros(n));
    }
    let mut normalized = Vec::with_capacity(n - 1);
    let mut local_sum = 0.0;
    for w in zeros.ordinates.windows(2) {
        let gap = w[1] - w[0];
        normalized.push(gap * w[0].ln() / two_pi());
        local_sum += gap * (w[0] / two_pi()).ln() / two_pi();
    }
    let max_gap = normalized.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean_gap = normalized.iter().sum::<f64>() / normalized.len() as f64;
    let mean_gap_local = local_sum / normalized.len() as f64;
    let histogram = Histogram::build(&normalized, 0.25);
    Ok(GapStatistics { normalized_gaps: normalized, max_gap, mean_gap, mean_gap_local, histogram })
}

/// One empirical mixed moment against its conjectured growth.
#[derive(Debug, Clone, Serialize)]
pub struct EmpiricalMoment {
    pub k: u32,
    pub h: u32,
    #[serde(rename = "T")]
    pub t_upper: f64,
    /// `int_{10}^{T} Z^{2(k-h)} (Z')^{2h} dt` by the fixed composite rule.
    pub integral_value: f64,
    /// `a(k) b(h,k) T (log T)^{k^2+2h}` with `a(k)` truncated at 1e6.
    pub predicted: f64,
    pub ratio: f64,
}

/// Empirical moment of `Z^{2(k-h)} (Z')^{2h}` over `[10, T]`.
///
/// `Z'` is taken by central differences with step 1e-4. `panels` is the
/// panel budget: the composite rule uses unit-width panels, so at least
/// `ceil(T - 10)` are needed. The comparison ratio is informational — at
/// reachable heights log T is small and lower-order terms are visible.
pub fn empirical_moment(
    k: u32,
    h: u32,
    t_upper: f64,
    panels: usize,
) -> Result<EmpiricalMoment, HardyError> {
    if !(1..=3).contains(&k) || h > k {
        return Err(HardyError::MomentDomain { k, h });
    }
    if !(t_upper > T_MIN_REGIME + 1.0) {
        return Err(HardyError::InvalidRange { t_min: T_MIN_REGIME, t_max: t_upper });
    }
    let required = ((t_upper - T_MIN_REGIME) / MOMENT_PANEL_WIDTH).ceil() as usize;
    if required > panels {
        return Err(HardyError::PanelBudgetExceeded { budget: panels, required, t: t_upper });
    }
    let zpow = 2 * (k - h) as i32;
    let dpow = 2 * h as i32;
    let f = |t: f64| -> f64 {
        let z = z_raw(t);
        let mut v = z.powi(zpow);
        if dpow > 0 {
            let dz = (z_raw(t + DERIV_STEP) - z_raw(t - DERIV_STEP)) / (2.0 * DERIV_STEP);
            v *= dz.powi(dpow);
        }
        v
    };
    let integral_value = integrate_composite(f, T_MIN_REGIME, t_upper, MOMENT_PANEL_WIDTH);
    let exponent = (k * k + 2 * h) as i32;
    let predicted = a_factor(k, 1_000_000)
        * b_coeff(h, k)?.to_f64()
        * t_upper
        * t_upper.ln().powi(exponent);
    Ok(EmpiricalMoment {
        k,
        h,
        t_upper,
        integral_value,
        predicted,
        ratio: integral_value / predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    // exact zero ordinates, 50-digit reference
    const TRUE_ZEROS: [f64; 5] = [
        14.134725141734694,
        21.022039638771555,
        25.010857580145689,
        30.424876125859513,
        32.935061587739190,
    ];

    #[test]
    fn theta_rejects_low_t() {
        assert!(matches!(theta(9.99), Err(HardyError::OutOfRegime(_))));
        assert!(theta(10.0).is_ok());
    }

    #[test]
    fn theta_reference_values() {
        // frozen from 30-digit evaluation of the exact theta
        assert!((theta(100.0).unwrap() - 87.97216523178722).abs() < 1e-9);
        assert!((theta(1000.0).unwrap() - 2034.5464280380316).abs() < 1e-9);
        assert!((theta(10.0).unwrap() - -3.0670743962898953).abs() < 1e-7);
    }

    #[test]
    fn theta_derivative_matches_leading_log() {
        let fd = (theta(1000.001).unwrap() - theta(999.999).unwrap()) / 0.002;
        assert!((fd - 2.5349391062863957).abs() < 1e-6);
        // at t = 2 pi e the leading derivative is exactly 1/2
        let t = 2.0 * pi_f64() * std::f64::consts::E;
        let fd = (theta(t + 1e-3).unwrap() - theta(t - 1e-3).unwrap()) / 2e-3;
        assert!((fd - 0.5).abs() < 1e-3);
    }

    #[test]
    fn z_eval_reference_values() {
        // (t, exact Z(t), allowance for the one-term remainder at that height)
        let cases = [
            (15.0, 0.7199423913421371, 5e-3),
            (18.0, 2.3367996899169519, 5e-3),
            (25.0, -0.0148724838979710, 2e-2), // the C0-only error is ~1e-2 here

            (100.0, 2.6926970566644635, 1e-2),
            (113.49003461093127, 1.661271526940002, 5e-3), // fractional part of sqrt(t/2pi) ~ 0.25
            (1000.0, 0.9977946375215866, 1e-3),
            (5000.0, -0.8042572363529399, 5e-4),
            (10000.0, -0.3413947242312086, 1e-4),
        ];
        for (t, expect, tol) in cases {
            let v = z_eval(t).unwrap();
            assert!((v - expect).abs() < tol, "Z({t}) = {v}, expected ~{expect}");
        }
    }

    #[test]
    fn z_sign_pattern_around_early_zeros() {
        assert!(z_eval(18.0).unwrap() > 0.0);
        assert!(z_eval(25.0).unwrap() < 0.0);
        let before = z_eval(14.0).unwrap();
        let after = z_eval(14.3).unwrap();
        assert!(before * after < 0.0, "sign change across the first zero");
    }

    #[test]
    fn z_eval_rejects_low_t() {
        assert!(matches!(z_eval(9.0), Err(HardyError::OutOfRegime(_))));
    }

    #[test]
    fn z_is_finite_across_the_regime() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let t = rng.gen_range(10.0..100_000.0);
            let v = z_eval(t).unwrap();
            assert!(v.is_finite(), "Z({t}) = {v}");
        }
    }

    #[test]
    fn count_main_term_values() {
        let t = 2.0 * pi_f64() * std::f64::consts::E;
        assert!(count_main_term(t).abs() < 1e-12);
        assert!((count_main_term(100.0) - 28.127344).abs() < 1e-5);
        let mut prev = count_main_term(18.0);
        for i in 19..200 {
            let v = count_main_term(f64::from(i));
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn scan_10_to_50_finds_ten_zeros() {
        let report = find_zeros(10.0, 50.0, 0.25).unwrap();
        assert_eq!(report.table.ordinates.len(), 10);
        assert!(report.warning.is_none());
        // independent coarse oracle: fixed-step 0.01 sign-change count
        let mut count = 0;
        let mut prev = z_eval(10.0).unwrap();
        let mut t: f64 = 10.0;
        while t < 50.0 {
            t += 0.01;
            let cur = z_eval(t.min(50.0)).unwrap();
            if prev * cur < 0.0 {
                count += 1;
            }
            prev = cur;
        }
        assert_eq!(count, 10);
        for (found, exact) in report.table.ordinates.iter().zip(TRUE_ZEROS) {
            assert!((found - exact).abs() < 1e-2, "{found} vs {exact}");
        }
    }

    #[test]
    fn scan_10_to_100_finds_29_zeros() {
        let report = find_zeros(10.0, 100.0, 0.25).unwrap();
        assert_eq!(report.table.ordinates.len(), 29);
        // every zero is bracketed by a sign change at 10x the refine tolerance
        let delta = 10.0 * REFINE_TOLERANCE;
        for &z in &report.table.ordinates {
            let prod = z_eval(z - delta).unwrap() * z_eval(z + delta).unwrap();
            assert!(prod < 0.0, "zero at {z} not bracketed");
        }
        // strictly increasing
        for w in report.table.ordinates.windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn empty_range_yields_no_zeros() {
        let report = find_zeros(50.0, 50.0, 0.25).unwrap();
        assert!(report.table.ordinates.is_empty());
    }

    #[test]
    fn scan_validates_arguments() {
        assert!(matches!(find_zeros(5.0, 50.0, 0.25), Err(HardyError::InvalidRange { .. })));
        assert!(matches!(find_zeros(50.0, 20.0, 0.25), Err(HardyError::InvalidRange { .. })));
        assert!(matches!(find_zeros(10.0, 50.0, 0.0), Err(HardyError::InvalidGridFactor(_))));
        assert!(matches!(find_zeros(10.0, 50.0, 0.7), Err(HardyError::InvalidGridFactor(_))));
    }

    #[test]
    fn scan_is_deterministic_and_thread_count_independent() {
        let serial_pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let parallel_pool = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap();
        let serial = serial_pool.install(|| find_zeros(10.0, 600.0, 0.25)).unwrap();
        let parallel = parallel_pool.install(|| find_zeros(10.0, 600.0, 0.25)).unwrap();
        assert_eq!(serial.table.ordinates.len(), parallel.table.ordinates.len());
        for (a, b) in serial.table.ordinates.iter().zip(&parallel.table.ordinates) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
        let again = find_zeros(10.0, 600.0, 0.25).unwrap();
        assert_eq!(again.table.ordinates, serial.table.ordinates);
    }

    #[test]
    fn lehmer_pair_recovered_by_fine_rescan() {
        // the famous close pair near t = 7005 (gap ~0.038) sits below the
        // default scan step there (~0.18) and must come from the rescue pass
        let report = find_zeros(6950.0, 7050.0, 0.25).unwrap();
        let near: Vec<f64> = report
            .table
            .ordinates
            .iter()
            .copied()
            .filter(|z| (7005.0..7005.2).contains(z))
            .collect();
        assert_eq!(near.len(), 2, "both zeros of the pair: {near:?}");
        assert!((near[0] - 7005.0629).abs() < 5e-3);
        assert!((near[1] - 7005.1006).abs() < 5e-3);
        assert!(report.warning.is_none());
    }

    #[test]
    fn gap_stats_definition_and_errors() {
        let t0 = 1000.0f64;
        let gap = 2.0 * pi_f64() / t0.ln();
        let table = ZeroTable {
            ordinates: vec![t0, t0 + gap],
            t_min: t0,
            t_max: t0 + 1.0,
            refine_tolerance: REFINE_TOLERANCE,
        };
        let stats = gap_stats(&table).unwrap();
        assert!((stats.normalized_gaps[0] - 1.0).abs() < 1e-12);
        assert!((stats.mean_gap - 1.0).abs() < 1e-12);

        let short = ZeroTable { ordinates: vec![t0], ..table.clone() };
        assert!(matches!(gap_stats(&short), Err(HardyError::TooFewZeros(1))));

        // scaling linearity: doubling every gap doubles every r_n
        let doubled = ZeroTable { ordinates: vec![t0, t0 + 2.0 * gap], ..table };
        let stats2 = gap_stats(&doubled).unwrap();
        assert!((stats2.normalized_gaps[0] - 2.0 * stats.normalized_gaps[0]).abs() < 1e-12);
    }

    #[test]
    fn gap_stats_over_1000_to_2000() {
        let report = find_zeros(1000.0, 2000.0, 0.25).unwrap();
        assert_eq!(report.table.ordinates.len(), 868);
        let stats = gap_stats(&report.table).unwrap();
        // finite-height mean of r_n: log-t normalization inflates it by
        // log t / log(t/2pi) ~ 1.33 here; frozen from the reference scan
        assert!((stats.mean_gap - 1.3365).abs() < 0.01, "mean = {}", stats.mean_gap);
        assert!((stats.mean_gap_local - 1.0).abs() < 0.02, "local = {}", stats.mean_gap_local);
        assert!((stats.max_gap - 2.9203).abs() < 0.05, "max = {}", stats.max_gap);
        assert!(stats.max_gap > 1.5);
        assert!(stats.normalized_gaps.iter().all(|&r| r > 0.0));
        let total: u64 = stats.histogram.counts.iter().sum();
        assert_eq!(total as usize, stats.normalized_gaps.len());
    }

    #[test]
    fn moment_additivity_with_aligned_panels() {
        let a = empirical_moment(1, 0, 1010.0, 1000).unwrap();
        let whole = empirical_moment(1, 0, 2010.0, 2000).unwrap();
        // the [1010, 2010] piece via aligned composite panels
        let zsq = |t: f64| z_raw(t).powi(2);
        let right = integrate_composite(zsq, 1010.0, 2010.0, 1.0);
        let sum = a.integral_value + right;
        assert!(
            (whole.integral_value - sum).abs() < 1e-9 * whole.integral_value,
            "{} vs {}",
            whole.integral_value,
            sum
        );
    }

    #[test]
    fn moment_second_moment_band_at_desk_height() {
        let m = empirical_moment(1, 0, 2000.0, 1990).unwrap();
        // frozen reference: integral ~ 11820, T log T ~ 15202, ratio ~ 0.778
        assert!((m.integral_value - 11820.8).abs() < 5.0, "integral = {}", m.integral_value);
        assert!(m.ratio > 0.6 && m.ratio < 1.4, "ratio = {}", m.ratio);
        // a(1) = 1 and b(0,1) = 1, up to Euler-product round-off
        let expect = 2000.0 * 2000.0f64.ln();
        assert!((m.predicted - expect).abs() < 1e-10 * expect);
    }

    #[test]
    fn moment_mixed_is_positive_finite() {
        let m = empirical_moment(2, 1, 2000.0, 1990).unwrap();
        assert!(m.integral_value > 0.0 && m.integral_value.is_finite());
        assert!(m.ratio > 0.0 && m.ratio.is_finite());
        // frozen reference scan put this ratio near 0.99
        assert!(m.ratio > 0.2 && m.ratio < 5.0, "ratio = {}", m.ratio);
    }

    #[test]
    fn moment_domain_checks() {
        assert!(matches!(empirical_moment(4, 0, 100.0, 100), Err(HardyError::MomentDomain { .. })));
        assert!(matches!(empirical_moment(2, 3, 100.0, 100), Err(HardyError::MomentDomain { .. })));
        assert!(matches!(
            empirical_moment(1, 0, 1000.0, 10),
            Err(HardyError::PanelBudgetExceeded { .. })
        ));
        assert!(matches!(empirical_moment(1, 0, 10.5, 100), Err(HardyError::InvalidRange { .. })));
    }
}
