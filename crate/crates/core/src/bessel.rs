//! The modified Bessel function I0 by three independent routes.
//!
//! * [`i0_series`] — the even power series, truncated by a relative
//!   term-size criterion (terms decay factorially, so this is cheap),
//! * [`i0_quadrature`] — the integral (2/pi) int_0^{pi/2} cosh(t cos x) dx,
//! * [`i0_scaled`] — e^{-t} I0(t) through (2/pi) int_0^{pi/2}
//!   e^{-2 t sin^2 x} dx, whose integrand lives in (0, 1] so the value is
//!   overflow-free for large t.
//!
//! Consumers that need t > 30 must work with [`i0_scaled`] (or logs):
//! e^t leaves `f64` near t = 709, and products like I0(t)^2 go long before.

use crate::error::{Error, Result};
use crate::quadrature::{integrate_adaptive, QuadratureConfig};
use crate::scalar::Real;

/// Truncation control for power-series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig<R> {
    /// Stop once the next term is below `tolerance` times the partial sum.
    pub tolerance: R,
    /// Hard cap on the number of terms; exceeding it is an error.
    pub max_terms: usize,
}

impl<R: Real> Default for SeriesConfig<R> {
    fn default() -> Self {
        SeriesConfig {
            tolerance: R::of(1e-15),
            max_terms: 500,
        }
    }
}

impl<R: Real> SeriesConfig<R> {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > R::zero()) {
            return Err(Error::Domain("series tolerance must be > 0".into()));
        }
        if self.max_terms < 1 {
            return Err(Error::Domain("max_terms must be >= 1".into()));
        }
        Ok(())
    }
}

/// I0(t) = sum_{n>=0} t^{2n} / (2^{2n} n!^2). Even in t.
pub fn i0_series<R: Real>(t: R, cfg: &SeriesConfig<R>) -> Result<R> {
    cfg.validate()?;
    if !t.is_finite() {
        return Err(Error::Domain(format!("i0_series: t = {t} not finite")));
    }
    let q = t * t * R::of(0.25); // term ratio driver: term_{n+1} = term_n * q / (n+1)^2
    let mut term = R::one();
    let mut sum = R::one();
    for n in 0..cfg.max_terms {
        let np1 = R::of_usize(n + 1);
        term = term * q / (np1 * np1);
        sum = sum + term;
        if term < cfg.tolerance * sum {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(format!(
        "i0_series: {} terms did not reach tolerance at t = {t}",
        cfg.max_terms
    )))
}

/// I0(t) = (2/pi) int_0^{pi/2} cosh(t cos x) dx, by node-doubling quadrature.
pub fn i0_quadrature<R: Real>(t: R, cfg: &QuadratureConfig<R>) -> Result<R> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("i0_quadrature: t = {t} not finite")));
    }
    let t = t.abs();
    let v = integrate_adaptive(|x: R| (t * x.cos()).cosh(), R::zero(), R::FRAC_PI_2(), cfg)?;
    Ok(v * R::of(2.0) * R::FRAC_1_PI())
}

/// e^{-t} I0(t) = (2/pi) int_0^{pi/2} e^{-2 t sin^2 x} dx, for t >= 0.
///
/// The integrand develops a boundary layer of width ~ 1/sqrt(t) at x = 0;
/// node doubling resolves it within the default refinement budget up to
/// the t ~ 10^3 range exercised by the asymptotic checks.
pub fn i0_scaled<R: Real>(t: R, cfg: &QuadratureConfig<R>) -> Result<R> {
    if !(t >= R::zero()) || !t.is_finite() {
        return Err(Error::Domain(format!("i0_scaled: t = {t} must be >= 0 and finite")));
    }
    let two_t = t + t;
    let v = integrate_adaptive(
        |x: R| {
            let s = x.sin();
            (-(two_t * s * s)).exp()
        },
        R::zero(),
        R::FRAC_PI_2(),
        cfg,
    )?;
    Ok(v * R::of(2.0) * R::FRAC_1_PI())
}

/// Natural log of I0(t), stable for any t >= 0 (switches to the scaled
/// integral once e^t would dominate the direct series).
pub fn ln_i0<R: Real>(t: R, series: &SeriesConfig<R>, quad: &QuadratureConfig<R>) -> Result<R> {
    let t = t.abs();
    if t <= R::of(30.0) {
        Ok(i0_series(t, series)?.ln())
    } else {
        Ok(t + i0_scaled(t, quad)?.ln())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const I0_1: f64 = 1.2660658777520084; // 30-term rational partial sum, frozen in coeffs tests

    #[test]
    fn series_at_zero_is_one() {
        assert_eq!(i0_series(0.0, &SeriesConfig::default()).unwrap(), 1.0);
    }

    #[test]
    fn series_at_one() {
        let v = i0_series(1.0, &SeriesConfig::default()).unwrap();
        assert!((v - I0_1).abs() < 1e-15);
    }

    #[test]
    fn series_is_even() {
        let cfg = SeriesConfig::default();
        for t in [0.3f64, 1.7, 9.0, 24.0] {
            assert_eq!(i0_series(t, &cfg).unwrap(), i0_series(-t, &cfg).unwrap());
        }
    }

    #[test]
    fn series_between_one_and_cosh() {
        let v = i0_series(2.0, &SeriesConfig::default()).unwrap();
        assert!(1.0 < v && v < 2.0f64.cosh());
    }

    #[test]
    fn series_max_terms_error() {
        let cfg = SeriesConfig {
            tolerance: 1e-15,
            max_terms: 3,
        };
        assert!(matches!(
            i0_series(10.0, &cfg),
            Err(Error::NonConvergence(_))
        ));
    }

    #[test]
    fn quadrature_at_zero_is_one() {
        let v: f64 = i0_quadrature(0.0, &QuadratureConfig::default()).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn quadrature_matches_series() {
        let q = QuadratureConfig::default();
        let s = SeriesConfig::default();
        for t in [0.5f64, 1.0, 5.0, 20.0] {
            let a = i0_quadrature(t, &q).unwrap();
            let b = i0_series(t, &s).unwrap();
            assert!((a - b).abs() / b < 1e-12, "t={t}: {a} vs {b}");
        }
    }

    #[test]
    fn quadrature_above_sinh_over_t() {
        let v = i0_quadrature(3.0, &QuadratureConfig::default()).unwrap();
        assert!(v > 3.0f64.sinh() / 3.0);
    }

    #[test]
    fn scaled_at_zero_is_one() {
        let v: f64 = i0_scaled(0.0, &QuadratureConfig::default()).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn scaled_asymptotic_at_500() {
        let v = i0_scaled(500.0, &QuadratureConfig::default()).unwrap();
        let lim = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
        assert!((500.0f64.sqrt() * v - lim).abs() < 1e-3);
    }

    #[test]
    fn scaled_within_exponential_bounds() {
        // e^t/(1+2t) < I0(t) < e^t/sqrt(1+2t), scaled by e^{-t}, at t = 4.
        let v = i0_scaled(4.0, &QuadratureConfig::default()).unwrap();
        assert!(1.0 / 9.0 < v && v < 1.0 / 3.0);
    }

    #[test]
    fn scaled_consistent_with_series() {
        let q = QuadratureConfig::default();
        let s = SeriesConfig::default();
        for t in [0.1f64, 1.0, 7.0, 25.0] {
            let a = i0_scaled(t, &q).unwrap() * t.exp();
            let b = i0_series(t, &s).unwrap();
            assert!((a - b).abs() / b < 1e-10, "t={t}: {a} vs {b}");
        }
    }

    #[test]
    fn scaled_rejects_negative() {
        assert!(matches!(
            i0_scaled(-1.0, &QuadratureConfig::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn ln_i0_continuous_across_switch() {
        let s = SeriesConfig::default();
        let q = QuadratureConfig::default();
        let lo: f64 = ln_i0(30.0 - 1e-9, &s, &q).unwrap();
        let hi = ln_i0(30.0 + 1e-9, &s, &q).unwrap();
        assert!((lo - hi).abs() < 1e-9);
    }
}
