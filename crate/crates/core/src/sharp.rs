//! The proof-ratio functions R0..R4 and the sharp constants they pin down.
//!
//! Each ratio compares I0 against a hyperbolic bound; the sharp constants
//! are interior extrema:
//!
//! * R0 = I0^2 / (sinh 2t / 2t), decreasing from 1 to 2/pi,
//! * R1 = (I0^2 - sinh t/t) / ((cosh t - 1) sinh t / t), unimodal with
//!   maximum delta_0 ~ 0.67664 at t_0 ~ 2.7113555314,
//! * R2 = (cosh t - I0) / (cosh t - sinh t/t), increasing from 3/4 to 1,
//! * R3(p) = (I0 - 1) / ((cosh pt - 1)/p^2), monotone for p outside
//!   (sqrt3/2, 1), with an interior minimum lambda_0(p) inside it,
//! * R4(theta) = (cosh(t cos theta) + cosh(t sin theta)) / (2 I0).
//!
//! Every ratio has three evaluation regimes: a truncated series ratio
//! below t = 1e-3 (numerator and denominator of R1..R3 both vanish to
//! O(t^2), so direct division loses all digits), direct formulas through
//! t = 30, and e^{-t}-scaled forms beyond (I0^2 overflows long before
//! e^t does).

use num_rational::BigRational;

use crate::bessel::{i0_scaled, i0_series, SeriesConfig};
use crate::error::{Error, Result};
use crate::quadrature::QuadratureConfig;
use crate::scalar::Real;
use crate::series::{Coeff, PowerSeries};
use crate::solver::{coarse_log_scan, golden_section_max, golden_section_min, SolverResult};

const SMALL_T: f64 = 1e-3;
const LARGE_T: f64 = 30.0;

/// Identifies one of the proof ratios; R3 and R4 carry their parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RatioKind<R> {
    R0,
    R1,
    R2,
    R3 { p: R },
    R4 { theta: R },
}

/// Evaluates the ratio at t >= 0; t = 0 returns the limit value.
pub fn ratio_eval<R: Real>(kind: RatioKind<R>, t: R) -> Result<R> {
    if !(t >= R::zero()) || !t.is_finite() {
        return Err(Error::Domain(format!("ratio_eval: t = {t} must be >= 0")));
    }
    if let RatioKind::R3 { p } = kind {
        if !(p > R::zero()) {
            return Err(Error::Domain("ratio_eval: R3 needs p > 0".into()));
        }
    }
    if t == R::zero() {
        return Ok(limit_at_zero(kind));
    }
    let tf = t.to_f64().unwrap_or(f64::NAN);
    match kind {
        RatioKind::R0 => {
            if tf > LARGE_T {
                let s = i0_scaled(t, &QuadratureConfig::default())?;
                let four_t = R::of(4.0) * t;
                Ok(four_t * s * s / (R::one() - (-four_t).exp()))
            } else {
                let i0 = i0_series(t, &SeriesConfig::default())?;
                let two_t = t + t;
                Ok(i0 * i0 / (two_t.sinh() / two_t))
            }
        }
        RatioKind::R1 => {
            if tf < SMALL_T {
                Ok(series_ratio_r1(t))
            } else if tf > LARGE_T {
                let s = i0_scaled(t, &QuadratureConfig::default())?;
                let e1 = (-t).exp();
                let e2 = (-(t + t)).exp();
                let e3 = (-(t + t + t)).exp();
                let half = R::of(0.5);
                let num = s * s - (e1 - e3) / (t + t);
                let den = ((R::one() + e2) * half - e1) * ((R::one() - e2) * half) / t;
                Ok(num / den)
            } else {
                let i0 = i0_series(t, &SeriesConfig::default())?;
                let sh = t.sinh() / t;
                Ok((i0 * i0 - sh) / ((t.cosh() - R::one()) * sh))
            }
        }
        RatioKind::R2 => {
            if tf < SMALL_T {
                Ok(series_ratio_r2(t))
            } else if tf > LARGE_T {
                let s = i0_scaled(t, &QuadratureConfig::default())?;
                let e2 = (-(t + t)).exp();
                let half = R::of(0.5);
                let ch = (R::one() + e2) * half;
                Ok((ch - s) / (ch - (R::one() - e2) * half / t))
            } else {
                let i0 = i0_series(t, &SeriesConfig::default())?;
                Ok((t.cosh() - i0) / (t.cosh() - t.sinh() / t))
            }
        }
        RatioKind::R3 { p } => {
            if tf < SMALL_T {
                Ok(series_ratio_r3(t, p))
            } else if tf > LARGE_T {
                // scale by e^{-mt}, m = max(1, p), so both parts stay finite
                let s = i0_scaled(t, &QuadratureConfig::default())?;
                let m = p.max(R::one());
                let num = s * ((R::one() - m) * t).exp() - (-(m * t)).exp();
                let den = (((p - m) * t).exp() + (-((p + m) * t)).exp()
                    - R::of(2.0) * (-(m * t)).exp())
                    / (R::of(2.0) * p * p);
                Ok(num / den)
            } else {
                let i0 = i0_series(t, &SeriesConfig::default())?;
                Ok((i0 - R::one()) / (((p * t).cosh() - R::one()) / (p * p)))
            }
        }
        RatioKind::R4 { theta } => {
            let (c, s) = (theta.cos(), theta.sin());
            if tf > LARGE_T {
                let quarter = R::of(0.25);
                let num = ((-(t * (R::one() - c))).exp()
                    + (-(t * (R::one() + c))).exp()
                    + (-(t * (R::one() - s))).exp()
                    + (-(t * (R::one() + s))).exp())
                    * quarter;
                let i0s = i0_scaled(t, &QuadratureConfig::default())?;
                Ok(num / i0s)
            } else {
                let i0 = i0_series(t, &SeriesConfig::default())?;
                Ok(((t * c).cosh() + (t * s).cosh()) / (R::of(2.0) * i0))
            }
        }
    }
}

/// Limit of the ratio as t -> 0+.
pub fn limit_at_zero<R: Real>(kind: RatioKind<R>) -> R {
    match kind {
        RatioKind::R0 => R::one(),
        RatioKind::R1 => R::of(2.0 / 3.0),
        RatioKind::R2 => R::of(0.75),
        RatioKind::R3 { .. } => R::of(0.5),
        RatioKind::R4 { .. } => R::one(),
    }
}

fn q(n: i64, d: i64) -> BigRational {
    <BigRational as Coeff>::from_ratio(n, d)
}

fn three_term_ratio<R: Real>(num: [BigRational; 3], den: [BigRational; 3], t: R) -> R {
    let x = t * t;
    let hi = |c: &[BigRational; 3]| {
        R::of(Coeff::to_f64(&c[0]))
            + x * (R::of(Coeff::to_f64(&c[1])) + x * R::of(Coeff::to_f64(&c[2])))
    };
    hi(&num) / hi(&den)
}

/// R1 near zero: both parts start at t^2; three exact coefficients each.
fn series_ratio_r1<R: Real>(t: R) -> R {
    let i0sq = PowerSeries::<BigRational>::i0(4).mul(&PowerSeries::i0(4));
    let sinhc = PowerSeries::<BigRational>::sinhc(q(1, 1), 4);
    let sinh2 = PowerSeries::<BigRational>::sinhc(q(4, 1), 4); // sinh(2t)/(2t)
    let c = |n: usize| i0sq.c[n].clone() - sinhc.c[n].clone();
    let d = |n: usize| sinh2.c[n].clone() - sinhc.c[n].clone();
    three_term_ratio([c(1), c(2), c(3)], [d(1), d(2), d(3)], t)
}

/// R2 near zero.
fn series_ratio_r2<R: Real>(t: R) -> R {
    let cosh = PowerSeries::<BigRational>::cosh(q(1, 1), 4);
    let i0 = PowerSeries::<BigRational>::i0(4);
    let sinhc = PowerSeries::<BigRational>::sinhc(q(1, 1), 4);
    let a = |n: usize| cosh.c[n].clone() - i0.c[n].clone();
    let b = |n: usize| cosh.c[n].clone() - sinhc.c[n].clone();
    three_term_ratio([a(1), a(2), a(3)], [b(1), b(2), b(3)], t)
}

/// R3 near zero; the denominator coefficients carry p^{2n-2}.
fn series_ratio_r3<R: Real>(t: R, p: R) -> R {
    let x = t * t;
    let p2 = p * p;
    // mu_n = 1/(4^n n!^2); nu_n = p^{2n-2}/(2n)!
    let num = R::of(0.25) + x * (R::of(1.0 / 64.0) + x * R::of(1.0 / 2304.0));
    let den = R::of(0.5) + x * (p2 * R::of(1.0 / 24.0) + x * (p2 * p2 * R::of(1.0 / 720.0)));
    num / den
}

/// Maximizes R1: coarse 100-point log scan over [1e-3, 50] to bracket,
/// then golden-section refinement. Returns (t0, delta0 = R1(t0)).
pub fn find_t0_delta0<R: Real>(tol: R) -> Result<SolverResult<R>> {
    if !(tol > R::zero()) {
        return Err(Error::Domain("find_t0_delta0: tol must be > 0".into()));
    }
    let f = |t: R| ratio_eval(RatioKind::R1, t).unwrap_or(R::neg_infinity());
    let (grid, _vals, best) = coarse_log_scan(f, R::of(1e-3), R::of(50.0), 100);
    let lo = grid[best.saturating_sub(1)];
    let hi = grid[(best + 1).min(grid.len() - 1)];
    let r = golden_section_max(f, lo, hi, tol, 400);
    if !r.converged {
        return Err(Error::NonConvergence(format!(
            "find_t0_delta0: bracket width {} after {} iterations",
            r.residual, r.iterations
        )));
    }
    Ok(r)
}

/// Minimizes R3(.; p) for p strictly inside (sqrt(3)/2, 1). Returns
/// (t0(p), lambda0(p)); lambda0 < 1/2 because the limit value at 0 is 1/2
/// and the minimum is interior.
pub fn find_lambda0<R: Real>(p: R, tol: R) -> Result<SolverResult<R>> {
    let lo_p = R::of(3.0f64.sqrt() / 2.0);
    if !(p > lo_p && p < R::one()) {
        return Err(Error::Domain(format!(
            "find_lambda0: p = {p} must lie strictly inside (sqrt3/2, 1)"
        )));
    }
    if !(tol > R::zero()) {
        return Err(Error::Domain("find_lambda0: tol must be > 0".into()));
    }
    let f = |t: R| ratio_eval(RatioKind::R3 { p }, t).unwrap_or(R::infinity());
    let (grid, vals, _) = coarse_log_scan(f, R::of(1e-3), R::of(50.0), 100);
    let mut best = 0usize;
    for i in 1..vals.len() {
        if vals[i] < vals[best] {
            best = i;
        }
    }
    let lo = grid[best.saturating_sub(1)];
    let hi = grid[(best + 1).min(grid.len() - 1)];
    let r = golden_section_min(f, lo, hi, tol, 400);
    if !r.converged {
        return Err(Error::NonConvergence(format!(
            "find_lambda0: bracket width {} after {} iterations",
            r.residual, r.iterations
        )));
    }
    Ok(r)
}

/// Shape of a sampled function on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    /// Increasing, then decreasing; the index is the sampled peak.
    UnimodalUp(usize),
    /// Decreasing, then increasing; the index is the sampled trough.
    UnimodalDown(usize),
    Mixed,
}

/// Classifies the sampled values of a ratio on a strictly increasing grid.
pub fn monotonicity_scan<R: Real>(kind: RatioKind<R>, grid: &[R]) -> Result<Monotonicity> {
    if grid.len() < 3 {
        return Err(Error::Domain("monotonicity_scan: need >= 3 grid points".into()));
    }
    for w in grid.windows(2) {
        if !(w[0] > R::zero() && w[1] > w[0]) {
            return Err(Error::Domain(
                "monotonicity_scan: grid must be strictly increasing and positive".into(),
            ));
        }
    }
    let vals: Result<Vec<R>> = grid.iter().map(|&t| ratio_eval(kind, t)).collect();
    let vals = vals?;
    Ok(classify(&vals))
}

pub(crate) fn classify<R: Real>(vals: &[R]) -> Monotonicity {
    let mut signs = Vec::with_capacity(vals.len() - 1);
    for (i, w) in vals.windows(2).enumerate() {
        if w[1] > w[0] {
            signs.push((i, 1i8));
        } else if w[1] < w[0] {
            signs.push((i, -1i8));
        }
    }
    if signs.is_empty() {
        return Monotonicity::Mixed;
    }
    let first = signs[0].1;
    let mut flip: Option<usize> = None;
    for &(i, s) in &signs[1..] {
        if s != first {
            flip = Some(i);
            break;
        }
    }
    match flip {
        None => {
            if first > 0 {
                Monotonicity::Increasing
            } else {
                Monotonicity::Decreasing
            }
        }
        Some(idx) => {
            // a single change of direction at idx; everything after must agree
            let tail_ok = signs.iter().filter(|&&(i, _)| i >= idx).all(|&(_, s)| s != first);
            if !tail_ok {
                Monotonicity::Mixed
            } else if first > 0 {
                Monotonicity::UnimodalUp(idx)
            } else {
                Monotonicity::UnimodalDown(idx)
            }
        }
    }
}

/// Log-spaced grid helper shared by the scans and the acceptance suite.
pub fn log_grid<R: Real>(lo: f64, hi: f64, points: usize) -> Vec<R> {
    let n = points.max(2);
    (0..n)
        .map(|i| R::of((lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (n - 1) as f64).exp()))
        .collect()
}
