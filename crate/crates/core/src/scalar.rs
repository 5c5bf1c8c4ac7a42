//! Scalar abstraction for the evaluation core.
//!
//! All floating-point numerics in this crate are written against [`Real`],
//! so the same code runs in `f32` or `f64`. The crate root exports `f64`
//! aliases for the common instantiation; the verification layer is pinned
//! to `f64` because its tolerances assume double precision.

use num_traits::float::FloatConst;
use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + std::fmt::Debug + std::fmt::Display + 'static
{
    /// Converts a finite `f64` constant into this scalar type.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant")
    }

    /// Converts a small integer index into this scalar type.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("small usize constant")
    }

    /// 2/pi, the limit constant shared by several ratio functions.
    fn two_over_pi() -> Self {
        Self::of(std::f64::consts::FRAC_2_PI)
    }
}

impl Real for f32 {}
impl Real for f64 {}
