//! The bivariate means: arithmetic, geometric, power, logarithmic,
//! identric, Gauss AGM, Toader, and Toader-Qi, plus their p-order
//! transforms and one-variable hyperbolic reductions.
//!
//! Every mean here is symmetric and homogeneous of degree 1, so it reduces
//! to a single-variable form: M(a,b) = sqrt(ab) * m(t) with
//! t = (1/2) ln(b/a). The pair evaluators and the hyperbolic forms are
//! implemented independently and cross-checked in tests; the reduction is
//! a theorem, not a definition, in this crate.

use crate::bessel::{i0_series, ln_i0, SeriesConfig};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_adaptive, integrate_fixed, integrate_graded, QuadratureConfig};
use crate::scalar::Real;

/// A pair of strictly positive mean arguments. No ordering is required.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivePair<R> {
    a: R,
    b: R,
}

impl<R: Real> PositivePair<R> {
    pub fn new(a: R, b: R) -> Result<Self> {
        if !(a > R::zero()) || !(b > R::zero()) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain(format!(
                "mean arguments must be strictly positive and finite, got ({a}, {b})"
            )));
        }
        Ok(PositivePair { a, b })
    }

    pub fn a(&self) -> R {
        self.a
    }

    pub fn b(&self) -> R {
        self.b
    }

    /// sqrt(ab), computed as a product of square roots so that pairs near
    /// the overflow edge stay finite.
    pub fn geometric(&self) -> R {
        self.a.sqrt() * self.b.sqrt()
    }

    /// The half-log parameter t = (1/2) ln(b/a).
    pub fn half_log(&self) -> HalfLogParam<R> {
        HalfLogParam {
            t: (self.b.ln() - self.a.ln()) * R::of(0.5),
        }
    }
}

/// t = (1/2) ln(b/a), the variable of the hyperbolic reduced forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfLogParam<R> {
    pub t: R,
}

/// The mean families of this crate. `Power(0)` coincides with `Geometric`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanKind<R> {
    Geometric,
    Arithmetic,
    Power(R),
    Logarithmic,
    Identric,
    Agm,
    Toader,
    ToaderQi,
}

impl<R: Real> MeanKind<R> {
    pub fn name(&self) -> &'static str {
        match self {
            MeanKind::Geometric => "geometric",
            MeanKind::Arithmetic => "arithmetic",
            MeanKind::Power(_) => "power",
            MeanKind::Logarithmic => "logarithmic",
            MeanKind::Identric => "identric",
            MeanKind::Agm => "agm",
            MeanKind::Toader => "toader",
            MeanKind::ToaderQi => "toader-qi",
        }
    }
}

/// Evaluates a mean at a pair of positive arguments.
pub fn evaluate<R: Real>(kind: MeanKind<R>, pair: PositivePair<R>) -> Result<R> {
    let (a, b) = (pair.a, pair.b);
    if a == b {
        return Ok(a);
    }
    match kind {
        MeanKind::Geometric => Ok(pair.geometric()),
        MeanKind::Arithmetic => Ok((a + b) * R::of(0.5)),
        MeanKind::Power(p) => {
            if p == R::zero() {
                Ok(pair.geometric())
            } else {
                let half = R::of(0.5);
                Ok(((a.powf(p) + b.powf(p)) * half).powf(p.recip()))
            }
        }
        MeanKind::Logarithmic => {
            let log_ratio = b.ln() - a.ln();
            if log_ratio.abs() < R::of(1e-8) {
                // (b-a)/ln(b/a) loses everything near the diagonal; expand
                // sinh(t)/t about t = 0 instead.
                let t = log_ratio * R::of(0.5);
                Ok(pair.geometric() * sinhc_small(t))
            } else {
                Ok((b - a) / log_ratio)
            }
        }
        MeanKind::Identric => {
            let log_ratio = b.ln() - a.ln();
            if log_ratio.abs() < R::of(1e-8) {
                let t = log_ratio * R::of(0.5);
                Ok(pair.geometric() * identric_form_small(t))
            } else {
                // exp((b ln b - a ln a)/(b - a) - 1)
                Ok(((b * b.ln() - a * a.ln()) / (b - a) - R::one()).exp())
            }
        }
        MeanKind::Agm => agm(pair, R::of(1e-15)),
        MeanKind::Toader => toader_mean(pair, &QuadratureConfig::default()),
        MeanKind::ToaderQi => tq_mean(pair, &QuadratureConfig::default()),
    }
}

/// 1 + x/6 + x^2/120 + x^3/5040, x = t^2 (4-term sinh(t)/t expansion).
fn sinhc_small<R: Real>(t: R) -> R {
    let x = t * t;
    R::one() + x * (R::of(1.0 / 6.0) + x * (R::of(1.0 / 120.0) + x * R::of(1.0 / 5040.0)))
}

/// exp(t/tanh t - 1) for |t| << 1 via t/tanh t - 1 = x/3 - x^2/45 + 2x^3/945.
fn identric_form_small<R: Real>(t: R) -> R {
    let x = t * t;
    (x * (R::of(1.0 / 3.0) + x * (R::of(-1.0 / 45.0) + x * R::of(2.0 / 945.0)))).exp()
}

/// Gauss arithmetic-geometric mean by the coupled iteration, stopped when
/// |a_n - b_n| < tol * a_n. Quadratic convergence keeps the count small
/// (<= 8 for argument ratios up to 1e16).
pub fn agm<R: Real>(pair: PositivePair<R>, tol: R) -> Result<R> {
    if !(tol > R::zero()) {
        return Err(Error::Domain("agm: tolerance must be > 0".into()));
    }
    let tol = tol.max(R::epsilon() * R::of(8.0));
    let (mut x, mut y) = if pair.a >= pair.b {
        (pair.a, pair.b)
    } else {
        (pair.b, pair.a)
    };
    for _ in 0..64 {
        if x - y <= tol * x {
            return Ok((x + y) * R::of(0.5));
        }
        let m = (x + y) * R::of(0.5);
        let g = x.sqrt() * y.sqrt();
        if m == x && g == y {
            return Ok((x + y) * R::of(0.5));
        }
        x = m;
        y = g;
    }
    Err(Error::NonConvergence("agm: 64 iterations exhausted".into()))
}

/// Toader mean (2/pi) int_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2) d(theta).
///
/// The integrand has complex singularities at distance ~ min/max from
/// theta = 0, so a single Gauss rule stalls once the arguments are far
/// apart. Panels geometrically graded towards the corner keep convergence
/// geometric at any ratio; the node count per panel is doubled until two
/// estimates agree to the configured tolerance.
pub fn toader_mean<R: Real>(pair: PositivePair<R>, cfg: &QuadratureConfig<R>) -> Result<R> {
    cfg.validate()?;
    let (lo, hi) = if pair.a <= pair.b {
        (pair.a, pair.b)
    } else {
        (pair.b, pair.a)
    };
    let ratio = hi / lo;
    let panels = if ratio.is_finite() {
        (ratio.ln() * R::of(std::f64::consts::LOG2_E))
            .to_f64()
            .map_or(60, |x| x.ceil().max(0.0) as usize)
            .clamp(1, 60)
            + 1
    } else {
        60
    };
    // scale out hi so squares cannot overflow
    let r = lo / hi;
    let f = |theta: R| {
        let (s, c) = (theta.sin(), theta.cos());
        (r * r * c * c + s * s).sqrt()
    };
    let mut nodes = cfg.base_nodes.min(32).max(8);
    let mut prev = integrate_graded(&f, R::zero(), R::FRAC_PI_2(), panels, nodes);
    for _ in 0..cfg.max_refinements {
        nodes *= 2;
        let next = integrate_graded(&f, R::zero(), R::FRAC_PI_2(), panels, nodes);
        if (next - prev).abs() <= cfg.tolerance * next.abs() {
            return Ok(hi * next * R::of(2.0) * R::FRAC_1_PI());
        }
        prev = next;
    }
    Err(Error::NonConvergence(format!(
        "toader_mean: no agreement within {} refinements",
        cfg.max_refinements
    )))
}

/// Toader-Qi mean, computed two ways: directly as the quadrature
/// (2/pi) int_0^{pi/2} a^{cos^2} b^{sin^2} d(theta) (arranged in the
/// overflow-free form max * e^{-2 t cos^2}) and through the Bessel
/// identity sqrt(ab) I0(t). The two must agree within the configured
/// tolerance; the identity-based value is returned.
pub fn tq_mean<R: Real>(pair: PositivePair<R>, cfg: &QuadratureConfig<R>) -> Result<R> {
    cfg.validate()?;
    let t = pair.half_log().t.abs();
    let series = SeriesConfig::default();

    // identity path
    let half_sum_log = (pair.a.ln() + pair.b.ln()) * R::of(0.5);
    let identity = (half_sum_log + ln_i0(t, &series, cfg)?).exp();

    // direct quadrature path: max * (2/pi) int e^{-2 t cos^2}
    let hi = pair.a.max(pair.b);
    let two_t = t + t;
    let integral = integrate_adaptive(
        |theta: R| {
            let c = theta.cos();
            (-(two_t * c * c)).exp()
        },
        R::zero(),
        R::FRAC_PI_2(),
        cfg,
    )?;
    let direct = hi * integral * R::of(2.0) * R::FRAC_1_PI();

    let rel = ((direct - identity) / identity).abs();
    if rel > cfg.tolerance * R::of(100.0) {
        return Err(Error::Consistency(format!(
            "tq_mean paths disagree by {rel} at ({}, {})",
            pair.a, pair.b
        )));
    }
    Ok(identity)
}

/// p-order transform M_p(a,b) = M(a^p, b^p)^{1/p}, p != 0.
pub fn p_order<R: Real>(kind: MeanKind<R>, p: R, pair: PositivePair<R>) -> Result<R> {
    if p == R::zero() || !p.is_finite() {
        return Err(Error::Domain("p_order: p must be nonzero and finite".into()));
    }
    let powered = PositivePair::new(pair.a.powf(p), pair.b.powf(p))?;
    Ok(evaluate(kind, powered)?.powf(p.recip()))
}

/// The hyperbolic reduced form m(t) with M(a,b) = sqrt(ab) m(t):
/// 1 for G, cosh t for A, (cosh pt)^{1/p} for A_p, sinh(t)/t for L,
/// exp(t/tanh t - 1) for the identric mean, I0(t) for Toader-Qi.
/// AGM and Toader have no closed hyperbolic form here.
pub fn hyperbolic_form<R: Real>(kind: MeanKind<R>, param: HalfLogParam<R>) -> Result<R> {
    let t = param.t.abs();
    if !t.is_finite() {
        return Err(Error::Domain("hyperbolic_form: t must be finite".into()));
    }
    match kind {
        MeanKind::Geometric => Ok(R::one()),
        MeanKind::Arithmetic => Ok(t.cosh()),
        MeanKind::Power(p) => {
            if p == R::zero() {
                Ok(R::one())
            } else {
                Ok((p * t).cosh().powf(p.recip()))
            }
        }
        MeanKind::Logarithmic => {
            if t < R::of(1e-4) {
                Ok(sinhc_small(t))
            } else {
                Ok(t.sinh() / t)
            }
        }
        MeanKind::Identric => {
            if t < R::of(1e-4) {
                Ok(identric_form_small(t))
            } else {
                Ok((t / t.tanh() - R::one()).exp())
            }
        }
        MeanKind::ToaderQi => {
            if t <= R::of(30.0) {
                i0_series(t, &SeriesConfig::default())
            } else {
                Ok(ln_i0(t, &SeriesConfig::default(), &QuadratureConfig::default())?.exp())
            }
        }
        MeanKind::Agm | MeanKind::Toader => Err(Error::UnsupportedKind(format!(
            "{} has no closed hyperbolic form",
            kind.name()
        ))),
    }
}

/// Fixed-rule Toader integral used by test oracles; not adaptive.
pub fn toader_fixed_rule<R: Real>(pair: PositivePair<R>, nodes: usize) -> R {
    let (a, b) = (pair.a, pair.b);
    integrate_fixed(
        |theta: R| {
            let (s, c) = (theta.sin(), theta.cos());
            (a * a * c * c + b * b * s * s).sqrt()
        },
        R::zero(),
        R::FRAC_PI_2(),
        nodes,
    ) * R::of(2.0)
        * R::FRAC_1_PI()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: f64, b: f64) -> PositivePair<f64> {
        PositivePair::new(a, b).unwrap()
    }

    #[test]
    fn rejects_nonpositive_arguments() {
        assert!(PositivePair::new(0.0, 1.0).is_err());
        assert!(PositivePair::new(1.0, -2.0).is_err());
        assert!(PositivePair::new(f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn arithmetic_basic() {
        assert_eq!(evaluate(MeanKind::Arithmetic, pair(2.0, 4.0)).unwrap(), 3.0);
    }

    #[test]
    fn equal_arguments_fixed_point() {
        for kind in [
            MeanKind::Geometric,
            MeanKind::Arithmetic,
            MeanKind::Power(2.5),
            MeanKind::Logarithmic,
            MeanKind::Identric,
            MeanKind::Agm,
            MeanKind::Toader,
            MeanKind::ToaderQi,
        ] {
            assert_eq!(evaluate(kind, pair(5.0, 5.0)).unwrap(), 5.0);
        }
    }

    #[test]
    fn logarithmic_closed_form() {
        let e2 = std::f64::consts::E.powi(2);
        let v = evaluate(MeanKind::Logarithmic, pair(1.0, e2)).unwrap();
        assert!((v - (e2 - 1.0) / 2.0).abs() < 1e-14);
    }

    #[test]
    fn g_tq_a_ordering() {
        let p = pair(1.0, 3.0);
        let g = evaluate(MeanKind::Geometric, p).unwrap();
        let tq = evaluate(MeanKind::ToaderQi, p).unwrap();
        let a = evaluate(MeanKind::Arithmetic, p).unwrap();
        assert!(g < tq && tq < a);
    }

    #[test]
    fn agm_reference_value() {
        let v = agm(pair(1.0, 2.0), 1e-15).unwrap();
        assert!((v - 1.4567910310469068692).abs() < 1e-14);
        assert_eq!(agm(pair(5.0, 5.0), 1e-15).unwrap(), 5.0);
    }

    #[test]
    fn agm_above_logarithmic() {
        let p = pair(1.0, 2.0);
        let l = evaluate(MeanKind::Logarithmic, p).unwrap();
        assert!(l < agm(p, 1e-15).unwrap());
    }

    #[test]
    fn agm_matches_elliptic_quadrature_oracle() {
        // AGM(a,b) = (pi/2) / int_0^{pi/2} (a^2 cos^2 + b^2 sin^2)^{-1/2}
        for (a, b) in [(1.0, 2.0), (0.3, 7.0), (1.0, 1.5)] {
            let p = pair(a, b);
            let integral = integrate_adaptive(
                |th: f64| 1.0 / (a * a * th.cos().powi(2) + b * b * th.sin().powi(2)).sqrt(),
                0.0,
                std::f64::consts::FRAC_PI_2,
                &QuadratureConfig::default(),
            )
            .unwrap();
            let oracle = std::f64::consts::FRAC_PI_2 / integral;
            let v = agm(p, 1e-15).unwrap();
            assert!((v - oracle).abs() / oracle < 1e-12, "({a},{b}): {v} vs {oracle}");
        }
    }

    #[test]
    fn toader_reference_value() {
        // frozen from an independent 1e6-point trapezoid run (matches
        // (4/pi) E(sqrt(3)/2) = 1.5419644251900400)
        let v = toader_mean(pair(1.0, 2.0), &QuadratureConfig::default()).unwrap();
        assert!((v - 1.5419644251900400).abs() < 1e-12);
    }

    #[test]
    fn toader_between_power_mean_bounds() {
        let p = pair(1.0, 4.0);
        let t = toader_mean(p, &QuadratureConfig::default()).unwrap();
        let lo = evaluate(MeanKind::Power(1.5), p).unwrap();
        let q = std::f64::consts::LN_2 / (std::f64::consts::FRAC_PI_2).ln();
        let hi = evaluate(MeanKind::Power(q), p).unwrap();
        assert!(lo < t && t < hi, "{lo} {t} {hi}");
    }

    #[test]
    fn toader_handles_extreme_ratio() {
        let p = pair(1e-8, 1.0);
        let v = toader_mean(p, &QuadratureConfig::default()).unwrap();
        // tends to (2/pi) * b as a -> 0
        let lim = 2.0 / std::f64::consts::PI;
        assert!((v - lim).abs() / lim < 1e-6, "v = {v}");
        assert!(v > lim);
    }

    #[test]
    fn tq_identity_and_quadrature_agree() {
        let cfg = QuadratureConfig::default();
        for (a, b) in [(1.0, 4.0), (2.0, 2.0000001), (1.0, 1e8), (5.0, 0.3)] {
            let v = tq_mean(pair(a, b), &cfg).unwrap();
            assert!(v.is_finite() && v > 0.0, "({a},{b}) -> {v}");
        }
    }

    #[test]
    fn tq_reference_value() {
        let e2 = std::f64::consts::E.powi(2);
        let v = tq_mean(pair(1.0, e2), &QuadratureConfig::default()).unwrap();
        // e * I0(1)
        assert!((v - 3.4415238691253353).abs() < 1e-13);
    }

    #[test]
    fn tq_below_half_power_mean() {
        let p = pair(1.0, 4.0);
        let tq = tq_mean(p, &QuadratureConfig::default()).unwrap();
        let a_half = evaluate(MeanKind::Power(0.5), p).unwrap();
        assert!(tq < a_half);
    }

    #[test]
    fn tq_vanishes_towards_boundary() {
        let cfg = QuadratureConfig::default();
        let mut prev = f64::INFINITY;
        let mut x = 1e-2;
        while x >= 1e-12 {
            let v = tq_mean(pair(x, 1.0), &cfg).unwrap();
            assert!(v < prev, "TQ(x,1) must decrease as x -> 0 (x={x})");
            prev = v;
            x *= 1e-2;
        }
        assert!(prev < 0.12);
    }

    #[test]
    fn p_order_identity_and_square() {
        let p = pair(1.0, 4.0);
        let a = evaluate(MeanKind::Arithmetic, p).unwrap();
        assert_eq!(p_order(MeanKind::Arithmetic, 1.0, p).unwrap(), a);
        let v = p_order(MeanKind::Arithmetic, 0.5, p).unwrap();
        assert!((v - 2.25).abs() < 1e-14);
        assert!(p_order(MeanKind::Arithmetic, 0.0, p).is_err());
    }

    #[test]
    fn p_order_logarithmic_above_agm() {
        let p = pair(1.0, 2.0);
        let l32 = p_order(MeanKind::Logarithmic, 1.5, p).unwrap();
        assert!(l32 > agm(p, 1e-15).unwrap());
    }

    #[test]
    fn hyperbolic_forms_basic() {
        let at = |t: f64| HalfLogParam { t };
        assert_eq!(hyperbolic_form(MeanKind::Geometric, at(3.7)).unwrap(), 1.0);
        assert!((hyperbolic_form(MeanKind::Logarithmic, at(1e-9)).unwrap() - 1.0).abs() < 1e-15);
        let v = hyperbolic_form(MeanKind::Identric, at(1.0)).unwrap();
        assert!((v - (1.0 / 1.0f64.tanh() - 1.0).exp()).abs() < 1e-15);
        assert!((v - 1.3675697855590115).abs() < 1e-14);
        assert!(matches!(
            hyperbolic_form(MeanKind::Agm, at(1.0)),
            Err(Error::UnsupportedKind(_))
        ));
        assert!(matches!(
            hyperbolic_form(MeanKind::Toader, at(1.0)),
            Err(Error::UnsupportedKind(_))
        ));
    }

    #[test]
    fn power_form_is_consistent_with_pair_route() {
        // the reduction is meaningful only with the (cosh pt)^{1/p} form
        let p = pair(1.0, 4.0);
        let t = p.half_log();
        for q in [0.5, 1.0, 1.5, 3.0] {
            let lhs = evaluate(MeanKind::Power(q), p).unwrap();
            let rhs = p.geometric() * hyperbolic_form(MeanKind::Power(q), t).unwrap();
            assert!((lhs - rhs).abs() / lhs < 1e-13, "q={q}: {lhs} vs {rhs}");
        }
    }
}
