//! Scalar abstraction so band kernels work for real and complex entries.
//!
//! Symmetric here always means plain transpose symmetry (M^T = M), never
//! conjugate symmetry, which is what the complex shifted systems require.

use num_complex::Complex64;
use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub trait Scalar:
    Copy
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    /// Modulus (absolute value).
    fn abs(self) -> f64;
    fn from_re(x: f64) -> Self;
    fn scale(self, x: f64) -> Self;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    fn from_re(x: f64) -> Self {
        x
    }
    fn scale(self, x: f64) -> Self {
        self * x
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    fn from_re(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn scale(self, x: f64) -> Self {
        self * x
    }
}
