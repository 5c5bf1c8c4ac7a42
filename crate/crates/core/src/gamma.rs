//! Log-gamma for positive arguments.
//!
//! Stirling's series with eight Bernoulli correction terms for x >= 8,
//! upward recursion below. Double precision only; that is all the
//! gamma-ratio bound checks need.

use crate::error::{Error, Result};
use crate::scalar::Real;

// B_{2k} / (2k (2k-1)) for k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// ln Gamma(x) for x > 0.
pub fn ln_gamma<R: Real>(x: R) -> Result<R> {
    if !(x > R::zero()) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma: x = {x} must be > 0")));
    }
    let threshold = R::of(8.0);
    let mut shift = R::zero();
    let mut y = x;
    while y < threshold {
        // ln Gamma(y) = ln Gamma(y+1) - ln y
        shift = shift - y.ln();
        y = y + R::one();
    }
    let half = R::of(0.5);
    let ln_two_pi = R::of((2.0 * std::f64::consts::PI).ln());
    let mut series = R::zero();
    let y2 = y * y;
    let mut pow = y;
    for c in STIRLING {
        series = series + R::of(c) / pow;
        pow = pow * y2;
    }
    Ok(shift + (y - half) * y.ln() - y + half * ln_two_pi + series)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_values() {
        // Gamma(n) = (n-1)!
        let mut fact = 1.0f64;
        for n in 1..15u32 {
            if n > 1 {
                fact *= f64::from(n - 1);
            }
            let v = ln_gamma(f64::from(n)).unwrap();
            assert!((v - fact.ln()).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn half_integer() {
        // Gamma(1/2) = sqrt(pi), Gamma(3/2) = sqrt(pi)/2
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((ln_gamma(0.5f64).unwrap() - sqrt_pi.ln()).abs() < 1e-13);
        assert!((ln_gamma(1.5f64).unwrap() - (sqrt_pi / 2.0).ln()).abs() < 1e-13);
    }

    #[test]
    fn large_argument() {
        // ln Gamma(171) = ln(170!)
        let mut acc = 0.0f64;
        for k in 2..=170u32 {
            acc += f64::from(k).ln();
        }
        assert!((ln_gamma(171.0f64).unwrap() - acc).abs() / acc < 1e-14);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(ln_gamma(0.0f64).is_err());
        assert!(ln_gamma(-3.0f64).is_err());
    }
}
