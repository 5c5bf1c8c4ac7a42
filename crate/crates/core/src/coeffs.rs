//! Exact coefficient tables for the even power series behind I0.
//!
//! Everything here is arbitrary-precision rational: the sequence
//! identities these tables feed (v_2 = 3/80, the Cauchy-product closed
//! forms, ...) are exact statements and are tested with exact equality,
//! not tolerances.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::series::{Coeff, PowerSeries};

/// Which even series a table holds coefficients for (of t^{2n}).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    /// I0(t): 1/(2^{2n} n!^2).
    I0,
    /// I0(t)^2: (2n)!/(2^{2n} n!^4).
    I0Squared,
    /// I0(t)^4, by Cauchy self-product of `I0Squared`.
    I0Fourth,
    /// cosh(t) (sinh(t)/t)^3: (2^{4n+3} - 2^{2n+1})/(2n+3)!.
    CoshSinh3,
    /// v_n = [I0^4]_n - [cosh sinh^3]_n; nonnegative, zero only at n = 0, 1.
    VSequence,
    /// sinh(2t)/(2t): 2^{2n}/(2n+1)!.
    Sinh2tOver2t,
}

impl CoeffKind {
    pub fn name(self) -> &'static str {
        match self {
            CoeffKind::I0 => "i0",
            CoeffKind::I0Squared => "i0-squared",
            CoeffKind::I0Fourth => "i0-fourth",
            CoeffKind::CoshSinh3 => "cosh-sinh3",
            CoeffKind::VSequence => "v-sequence",
            CoeffKind::Sinh2tOver2t => "sinh2t-over-2t",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "i0" => Ok(CoeffKind::I0),
            "i0-squared" => Ok(CoeffKind::I0Squared),
            "i0-fourth" => Ok(CoeffKind::I0Fourth),
            "cosh-sinh3" => Ok(CoeffKind::CoshSinh3),
            "v-sequence" => Ok(CoeffKind::VSequence),
            "sinh2t-over-2t" => Ok(CoeffKind::Sinh2tOver2t),
            other => Err(Error::UnknownSequence(other.into())),
        }
    }
}

/// Exact rational coefficients of one even series, indexed by n.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    pub kind: CoeffKind,
    pub coefficients: Vec<BigRational>,
}

impl CoeffTable {
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coefficients[n]
    }
}

fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

/// Builds the table for `kind` with entries n = 0..=n_max.
pub fn table(kind: CoeffKind, n_max: usize) -> CoeffTable {
    let len = n_max + 1;
    let coefficients = match kind {
        CoeffKind::I0 => PowerSeries::<BigRational>::i0(len).c,
        CoeffKind::I0Squared => (0..len)
            .map(|n| {
                // (2n)! / (2^{2n} n!^4)
                let num = factorial(2 * n);
                let den = pow2(2 * n) * factorial(n).pow(4);
                BigRational::new(num, den)
            })
            .collect(),
        CoeffKind::I0Fourth => {
            let sq = table(CoeffKind::I0Squared, n_max).coefficients;
            cauchy_square(&sq)
        }
        CoeffKind::CoshSinh3 => (0..len)
            .map(|n| {
                let num = pow2(4 * n + 3) - pow2(2 * n + 1);
                BigRational::new(num, factorial(2 * n + 3))
            })
            .collect(),
        CoeffKind::VSequence => {
            let fourth = table(CoeffKind::I0Fourth, n_max).coefficients;
            let lower = table(CoeffKind::CoshSinh3, n_max).coefficients;
            fourth
                .into_iter()
                .zip(lower)
                .map(|(a, b)| a - b)
                .collect()
        }
        CoeffKind::Sinh2tOver2t => (0..len)
            .map(|n| BigRational::new(pow2(2 * n), factorial(2 * n + 1)))
            .collect(),
    };
    CoeffTable { kind, coefficients }
}

/// Cauchy self-product: c_n = sum_k a_k a_{n-k}.
pub fn cauchy_square(a: &[BigRational]) -> Vec<BigRational> {
    (0..a.len())
        .map(|n| {
            let mut acc = BigRational::zero();
            for k in 0..=n {
                acc += a[k].clone() * a[n - k].clone();
            }
            acc
        })
        .collect()
}

/// Coefficients of I0(t)^2 for n = 0..=n_max: (2n)!/(2^{2n} n!^4).
pub fn i0_squared_coeffs(n_max: usize) -> CoeffTable {
    table(CoeffKind::I0Squared, n_max)
}

/// Coefficients of I0(t)^4 by convolving I0^2 with itself.
pub fn i0_fourth_coeffs(n_max: usize) -> CoeffTable {
    table(CoeffKind::I0Fourth, n_max)
}

/// v_n = [I0^4]_n - (2^{4n+3} - 2^{2n+1})/(2n+3)!; v_0 = v_1 = 0, v_2 = 3/80.
pub fn v_sequence(n_max: usize) -> CoeffTable {
    table(CoeffKind::VSequence, n_max)
}

/// (sum a_n t^{2n}) / (sum b_n t^{2n}) with both series truncated under the
/// same relative criterion. Requires every denominator coefficient > 0, so
/// the denominator sum is bounded below by b_0 for t real.
pub fn power_series_ratio<R: Real>(
    numer: &CoeffTable,
    denom: &CoeffTable,
    t: R,
    tolerance: R,
) -> Result<R> {
    if denom.is_empty() || numer.is_empty() {
        return Err(Error::Domain("power_series_ratio: empty table".into()));
    }
    if denom.coefficients.iter().any(|b| !b.is_positive()) {
        return Err(Error::Domain(
            "power_series_ratio: denominator coefficients must all be > 0".into(),
        ));
    }
    if !(tolerance > R::zero()) {
        return Err(Error::Domain("power_series_ratio: tolerance must be > 0".into()));
    }
    let x = t * t;
    let len = numer.len().min(denom.len());
    let mut xn = R::one();
    let mut num_sum = R::zero();
    let mut den_sum = R::zero();
    for n in 0..len {
        let ta = R::of(Coeff::to_f64(&numer.coefficients[n])) * xn;
        let tb = R::of(Coeff::to_f64(&denom.coefficients[n])) * xn;
        num_sum = num_sum + ta;
        den_sum = den_sum + tb;
        if n > 0 && ta.abs() <= tolerance * num_sum.abs() && tb.abs() <= tolerance * den_sum.abs() {
            return Ok(num_sum / den_sum);
        }
        xn = xn * x;
    }
    Err(Error::NonConvergence(format!(
        "power_series_ratio: tables of length {len} did not converge at t = {t}"
    )))
}
