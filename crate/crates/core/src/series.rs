//! Formal power series in x = t^2 over an exact coefficient field.
//!
//! Every hyperbolic-form quantity in this crate is an even entire function
//! of t, so it has a series in x = t^2. Working with those series in exact
//! arithmetic is what makes small-t inequality margins trustworthy: two
//! sides that agree to O(t^8) cannot be separated by subtracting their
//! `f64` values near t = 1e-6, but the difference of their exact
//! coefficient lists has a bitwise-zero prefix and a correctly signed
//! leading entry.
//!
//! The engine is generic over the coefficient type: `BigRational` for the
//! rational-parameter forms, [`QSqrt2`] for the cos(pi/8) family, and
//! `f64` for forms carrying irrational constants whose leading difference
//! coefficients are large enough for floating arithmetic.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Coefficient field for [`PowerSeries`].
pub trait Coeff:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Coeff for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).expect("rational fits f64 range")
    }
}

impl Coeff for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Element of Q(sqrt 2): `r + s*sqrt(2)` with exact rational parts.
#[derive(Debug, Clone, PartialEq)]
pub struct QSqrt2 {
    pub r: BigRational,
    pub s: BigRational,
}

impl QSqrt2 {
    pub fn new(r: BigRational, s: BigRational) -> Self {
        QSqrt2 { r, s }
    }

    pub fn rational(r: BigRational) -> Self {
        QSqrt2 {
            r,
            s: Zero::zero(),
        }
    }
}

impl Add for QSqrt2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QSqrt2::new(self.r + o.r, self.s + o.s)
    }
}

impl Sub for QSqrt2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QSqrt2::new(self.r - o.r, self.s - o.s)
    }
}

impl Neg for QSqrt2 {
    type Output = Self;
    fn neg(self) -> Self {
        QSqrt2::new(-self.r, -self.s)
    }
}

impl Mul for QSqrt2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let two: BigRational = Coeff::from_ratio(2, 1);
        QSqrt2::new(
            self.r.clone() * o.r.clone() + two * self.s.clone() * o.s.clone(),
            self.r * o.s + self.s * o.r,
        )
    }
}

impl Div for QSqrt2 {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        // multiply by the conjugate; the norm r^2 - 2 s^2 is nonzero for o != 0
        let two: BigRational = Coeff::from_ratio(2, 1);
        let norm = o.r.clone() * o.r.clone() - two * o.s.clone() * o.s.clone();
        let conj = QSqrt2::new(o.r / norm.clone(), -(o.s / norm));
        self * conj
    }
}

impl Zero for QSqrt2 {
    fn zero() -> Self {
        QSqrt2::rational(Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.r) && Zero::is_zero(&self.s)
    }
}

impl One for QSqrt2 {
    fn one() -> Self {
        QSqrt2::rational(One::one())
    }
}

impl Coeff for QSqrt2 {
    fn from_ratio(num: i64, den: i64) -> Self {
        QSqrt2::rational(<BigRational as Coeff>::from_ratio(num, den))
    }
    fn to_f64(&self) -> f64 {
        Coeff::to_f64(&self.r) + Coeff::to_f64(&self.s) * std::f64::consts::SQRT_2
    }
}

/// Truncated power series: `c[n]` is the coefficient of x^n.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<C> {
    pub c: Vec<C>,
}

impl<C: Coeff> PowerSeries<C> {
    pub fn from_coeffs(c: Vec<C>) -> Self {
        PowerSeries { c }
    }

    pub fn constant(value: C, len: usize) -> Self {
        let mut c = vec![C::zero(); len];
        if len > 0 {
            c[0] = value;
        }
        PowerSeries { c }
    }

    pub fn one(len: usize) -> Self {
        Self::constant(C::one(), len)
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// cosh(c t) as a series in x = t^2, given c^2.
    pub fn cosh(c_squared: C, len: usize) -> Self {
        // a_n = c^{2n} / (2n)!
        let mut c = Vec::with_capacity(len);
        let mut a = C::one();
        c.push(a.clone());
        for n in 1..len {
            let d = C::from_ratio(((2 * n - 1) * (2 * n)) as i64, 1);
            a = a * c_squared.clone() / d;
            c.push(a.clone());
        }
        PowerSeries { c }
    }

    /// sinh(c t) / (c t) as a series in x = t^2, given c^2.
    pub fn sinhc(c_squared: C, len: usize) -> Self {
        // a_n = c^{2n} / (2n+1)!
        let mut c = Vec::with_capacity(len);
        let mut a = C::one();
        c.push(a.clone());
        for n in 1..len {
            let d = C::from_ratio(((2 * n) * (2 * n + 1)) as i64, 1);
            a = a * c_squared.clone() / d;
            c.push(a.clone());
        }
        PowerSeries { c }
    }

    /// I0(t) as a series in x = t^2: a_n = 1 / (4^n n!^2).
    pub fn i0(len: usize) -> Self {
        let mut c = Vec::with_capacity(len);
        let mut a = C::one();
        c.push(a.clone());
        for n in 1..len {
            a = a / C::from_ratio((4 * n * n) as i64, 1);
            c.push(a.clone());
        }
        PowerSeries { c }
    }

    /// e^{k x} (used for the e^{t^2/4} cap in the cosh-power chain).
    pub fn exp_kx(k: C, len: usize) -> Self {
        let mut c = Vec::with_capacity(len);
        let mut a = C::one();
        c.push(a.clone());
        for n in 1..len {
            a = a * k.clone() / C::from_ratio(n as i64, 1);
            c.push(a.clone());
        }
        PowerSeries { c }
    }

    pub fn add(&self, o: &Self) -> Self {
        let len = self.len().min(o.len());
        let c = (0..len)
            .map(|n| self.c[n].clone() + o.c[n].clone())
            .collect();
        PowerSeries { c }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let len = self.len().min(o.len());
        let c = (0..len)
            .map(|n| self.c[n].clone() - o.c[n].clone())
            .collect();
        PowerSeries { c }
    }

    pub fn scale(&self, k: C) -> Self {
        let c = self.c.iter().map(|a| a.clone() * k.clone()).collect();
        PowerSeries { c }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let len = self.len().min(o.len());
        let mut c = vec![C::zero(); len];
        for (i, a) in self.c.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().take(len - i).enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        PowerSeries { c }
    }

    /// self / o, requiring o[0] != 0.
    pub fn div(&self, o: &Self) -> Self {
        let len = self.len().min(o.len());
        assert!(!o.c[0].is_zero(), "series division needs a unit constant term");
        let mut c = vec![C::zero(); len];
        for n in 0..len {
            let mut acc = self.c[n].clone();
            for k in 1..=n {
                acc = acc - o.c[k].clone() * c[n - k].clone();
            }
            c[n] = acc / o.c[0].clone();
        }
        PowerSeries { c }
    }

    /// sqrt(self), requiring self[0] == 1.
    pub fn sqrt(&self) -> Self {
        assert!(
            self.c[0] == C::one(),
            "series sqrt implemented for unit constant term"
        );
        let len = self.len();
        let mut c = vec![C::zero(); len];
        c[0] = C::one();
        let two = C::from_ratio(2, 1);
        for n in 1..len {
            let mut acc = self.c[n].clone();
            for k in 1..n {
                acc = acc - c[k].clone() * c[n - k].clone();
            }
            c[n] = acc / two.clone();
        }
        PowerSeries { c }
    }

    /// exp(self), requiring self[0] == 0.
    pub fn exp(&self) -> Self {
        assert!(
            self.c[0].is_zero(),
            "series exp implemented for zero constant term"
        );
        let len = self.len();
        let mut c = vec![C::zero(); len];
        c[0] = C::one();
        for n in 1..len {
            // n e_n = sum_{k=1}^{n} k a_k e_{n-k}
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc + C::from_ratio(k as i64, 1) * self.c[k].clone() * c[n - k].clone();
            }
            c[n] = acc / C::from_ratio(n as i64, 1);
        }
        PowerSeries { c }
    }

    /// log(self), requiring self[0] == 1.
    pub fn log(&self) -> Self {
        assert!(
            self.c[0] == C::one(),
            "series log implemented for unit constant term"
        );
        let len = self.len();
        let mut c = vec![C::zero(); len];
        for n in 1..len {
            // n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
            let mut acc = C::from_ratio(n as i64, 1) * self.c[n].clone();
            for k in 1..n {
                acc = acc - C::from_ratio(k as i64, 1) * c[k].clone() * self.c[n - k].clone();
            }
            c[n] = acc / C::from_ratio(n as i64, 1);
        }
        PowerSeries { c }
    }

    /// self^q = exp(q log self), requiring self[0] == 1.
    pub fn pow(&self, q: C) -> Self {
        self.log().scale(q).exp()
    }

    /// x * self (index shift by one).
    pub fn mul_x(&self) -> Self {
        let mut c = Vec::with_capacity(self.len());
        c.push(C::zero());
        c.extend(self.c.iter().take(self.len().saturating_sub(1)).cloned());
        PowerSeries { c }
    }

    /// Substitutes x -> k x (scales coefficient n by k^n).
    pub fn scale_x(&self, k: C) -> Self {
        let mut pow = C::one();
        let c = self
            .c
            .iter()
            .map(|a| {
                let out = a.clone() * pow.clone();
                pow = pow.clone() * k.clone();
                out
            })
            .collect();
        PowerSeries { c }
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.c.iter().map(Coeff::to_f64).collect()
    }

    /// Horner evaluation at x, in f64.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + a.to_f64();
        }
        acc
    }
}

/// Evaluates an f64 coefficient list at x by Horner's rule.
pub fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for a in coeffs.iter().rev() {
        acc = acc * x + a;
    }
    acc
}
