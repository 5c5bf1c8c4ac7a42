//! Integer-indexed sequences behind the monotonicity proofs, in exact
//! rational arithmetic wherever the values are rational.
//!
//! Factorials and binomials are arbitrary-precision: the suites run to
//! n = 200..1000, far past what fixed-width integers hold.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= big(k);
    }
    acc
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * big(n - i) / big(i + 1);
    }
    acc
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Wallis ratio W_n = (2n-1)!!/(2n)!! = (2n)!/(2^{2n} n!^2). W_0 = 1.
pub fn wallis_ratio(n: usize) -> BigRational {
    ratio(factorial(2 * n), (BigInt::one() << (2 * n)) * factorial(n).pow(2))
}

/// s_n = (2n)!(2n+1)!/(2^{4n} n!^4). Strictly decreasing to 2/pi.
pub fn s_seq(n: usize) -> BigRational {
    ratio(
        factorial(2 * n) * factorial(2 * n + 1),
        (BigInt::one() << (4 * n)) * factorial(n).pow(4),
    )
}

/// sum_k C(n,k)^2, computed by brute-force summation, cross-checked
/// against the central binomial C(2n,n) before being returned.
pub fn binom_square_sum(n: usize) -> BigRational {
    let sum: BigInt = (0..=n).map(|k| binomial(n, k).pow(2)).sum();
    let central = binomial(2 * n, n);
    assert_eq!(sum, central, "binomial square-sum identity must hold");
    BigRational::from_integer(sum)
}

/// c_n/d_n = (2^{2n} s_n - 1)/(2^{2n} - 1) for n >= 1.
/// Increasing for n = 1..2, decreasing afterwards; limit 2/pi.
pub fn cd_ratio(n: usize) -> BigRational {
    assert!(n >= 1, "cd_ratio is defined for n >= 1");
    let p = BigRational::from_integer(BigInt::one() << (2 * n));
    let one = BigRational::one();
    (p.clone() * s_seq(n) - one.clone()) / (p - one)
}

/// gamma_n = (n+2)(2n+1) W_n / (2(n+1)) for n >= 1; increasing, >= 9/8.
pub fn gamma_seq(n: usize) -> BigRational {
    assert!(n >= 1, "gamma_seq is defined for n >= 1");
    wallis_ratio(n) * ratio(big(n + 2) * big(2 * n + 1), big(2) * big(n + 1))
}

/// alpha_n/beta_n = ((2n+1)/(2n)) (1 - W_n) for n >= 1; increasing to 1.
pub fn alphabeta_ratio(n: usize) -> BigRational {
    assert!(n >= 1, "alphabeta_ratio is defined for n >= 1");
    let one = BigRational::one();
    ratio(big(2 * n + 1), big(2 * n)) * (one - wallis_ratio(n))
}

/// mu_n/nu_n = W_n / p^{2n-2} for n >= 1, p > 0. Monotone decreasing in n
/// for p >= 1, increasing for p <= sqrt(3)/2, unimodal in between.
pub fn munu_ratio(n: usize, p: f64) -> f64 {
    assert!(n >= 1, "munu_ratio is defined for n >= 1");
    assert!(p > 0.0, "munu_ratio needs p > 0");
    let mut w = 1.0f64;
    for k in 0..n {
        w *= (2 * k + 1) as f64 / (2 * k + 2) as f64;
    }
    w / p.powi(2 * n as i32 - 2)
}

/// rho_n/sigma_n = (1/2) (n!^2 sqrt(2)^n / (2n)!) ((sqrt2-1)^n + (sqrt2+1)^n).
///
/// Equals 1 for n = 0..=3 (the successive-ratio factor vanishes for
/// n = 0..=2) and decreases strictly from n = 3 on.
pub fn rhosigma_ratio(n: usize) -> f64 {
    let s2 = std::f64::consts::SQRT_2;
    let mut fact_ratio = 1.0f64; // n!^2 / (2n)!
    for k in 1..=n {
        fact_ratio *= k as f64 / ((n + k) as f64);
    }
    0.5 * fact_ratio * s2.powi(n as i32) * ((s2 - 1.0).powi(n as i32) + (s2 + 1.0).powi(n as i32))
}

/// eta_n = (sqrt2 + 1)^{2n-1} for n >= 1.
pub fn eta_seq(n: usize) -> f64 {
    assert!(n >= 1, "eta_seq is defined for n >= 1");
    (std::f64::consts::SQRT_2 + 1.0).powi(2 * n as i32 - 1)
}

/// xi_n = (3 sqrt2 - 4) eta_n + (3 sqrt2 + 4)/eta_n - 4 for n >= 1.
/// xi_1 = xi_2 = 0 exactly; xi_n > 0 for n >= 3.
pub fn xi_seq(n: usize) -> f64 {
    let s2 = std::f64::consts::SQRT_2;
    let eta = eta_seq(n);
    (3.0 * s2 - 4.0) * eta + (3.0 * s2 + 4.0) / eta - 4.0
}

/// Gamma-ratio bracket: 1/(x+a)^{1-a} < Gamma(x+a)/Gamma(x+1) < 1/x^{1-a}
/// for x > 0, a in (0,1). Returns (lower, ratio, upper).
pub fn gamma_ratio_bounds(x: f64, a: f64) -> Result<(f64, f64, f64)> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("gamma_ratio_bounds: x = {x} must be > 0")));
    }
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain(format!(
            "gamma_ratio_bounds: a = {a} must lie in (0,1)"
        )));
    }
    let ratio = (ln_gamma(x + a)? - ln_gamma(x + 1.0)?).exp();
    let lower = (x + a).powf(a - 1.0);
    let upper = x.powf(a - 1.0);
    Ok((lower, ratio, upper))
}

/// Both Wallis bound pairs at index n, plus the lower-bound comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct WallisBoundsReport {
    pub n: usize,
    /// W_n evaluated by the stable product recurrence.
    pub wallis: f64,
    /// Kazarinoff bracket (1/sqrt(pi(n+1/2)), 1/sqrt(pi(n+1/4))).
    pub kazarinoff: (f64, f64),
    /// Bracket derived from the c_n/d_n squeeze:
    /// sqrt(((pi-2) 4^{-n} + 2)/(pi(2n+1))) and sqrt((41 + 19*4^{-n})/(60(2n+1))).
    pub refined: (f64, f64),
    pub kazarinoff_holds: bool,
    pub refined_holds: bool,
    /// The refined lower bound is never below the Kazarinoff one.
    pub lower_dominates: bool,
    /// ln of the positive gap refined_lower^2 - kazarinoff_lower^2
    /// = (pi-2) 4^{-n} / (pi(2n+1)), evaluated in log space because the
    /// gap itself underflows f64 around n ~ 500.
    pub lower_gap_ln: f64,
}

/// Verifies both Wallis bound pairs at n >= 1.
pub fn wallis_bounds_check(n: usize) -> WallisBoundsReport {
    assert!(n >= 1, "wallis_bounds_check is defined for n >= 1");
    let pi = std::f64::consts::PI;
    let mut w = 1.0f64;
    for k in 0..n {
        w *= (2 * k + 1) as f64 / (2 * k + 2) as f64;
    }
    let nf = n as f64;
    let kaz = (
        1.0 / (pi * (nf + 0.5)).sqrt(),
        1.0 / (pi * (nf + 0.25)).sqrt(),
    );
    let four_pow = 0.25f64.powi(n as i32); // underflows to 0 for large n; bounds stay valid
    let refined = (
        (((pi - 2.0) * four_pow + 2.0) / (pi * (2.0 * nf + 1.0))).sqrt(),
        ((41.0 + 19.0 * four_pow) / (60.0 * (2.0 * nf + 1.0))).sqrt(),
    );
    let lower_gap_ln = (pi - 2.0).ln() - 2.0 * nf * 2.0f64.ln() - (pi * (2.0 * nf + 1.0)).ln();
    WallisBoundsReport {
        n,
        wallis: w,
        kazarinoff: kaz,
        refined,
        kazarinoff_holds: kaz.0 < w && w < kaz.1,
        refined_holds: refined.0 < w && w < refined.1,
        lower_dominates: refined.0 >= kaz.0 && lower_gap_ln.is_finite(),
        lower_gap_ln,
    }
}

/// One row of a sequence dump: exact rational or floating value.
#[derive(Debug, Clone, PartialEq)]
pub enum SeqEntry {
    Exact { n: usize, value: BigRational },
    Real { n: usize, value: f64 },
}

/// Tabulates a sequence by id up to n_max, starting at the sequence's
/// smallest defined index. Ids: wallis, s, cd-ratio, gamma, alpha-beta,
/// rho-sigma, xi, v, binom-central.
pub fn sequence_table(id: &str, n_max: usize) -> Result<Vec<SeqEntry>> {
    let exact = |f: fn(usize) -> BigRational, start: usize| -> Vec<SeqEntry> {
        (start..=n_max.max(start))
            .map(|n| SeqEntry::Exact { n, value: f(n) })
            .collect()
    };
    let real = |f: fn(usize) -> f64, start: usize| -> Vec<SeqEntry> {
        (start..=n_max.max(start))
            .map(|n| SeqEntry::Real { n, value: f(n) })
            .collect()
    };
    match id {
        "wallis" => Ok(exact(wallis_ratio, 0)),
        "s" => Ok(exact(s_seq, 0)),
        "cd-ratio" => Ok(exact(cd_ratio, 1)),
        "gamma" => Ok(exact(gamma_seq, 1)),
        "alpha-beta" => Ok(exact(alphabeta_ratio, 1)),
        "binom-central" => Ok(exact(binom_square_sum, 0)),
        "v" => {
            let table = crate::coeffs::v_sequence(n_max);
            Ok(table
                .coefficients
                .into_iter()
                .enumerate()
                .map(|(n, value)| SeqEntry::Exact { n, value })
                .collect())
        }
        "rho-sigma" => Ok(real(rhosigma_ratio, 0)),
        "xi" => Ok(real(xi_seq, 1)),
        other => Err(Error::UnknownSequence(other.into())),
    }
}
