//! The element-scalar abstraction that lets dual numbers nest.
//!
//! Every quantity flowing through a target function implements [`Scalar`]:
//! the base floats (`f32`, `f64`) and any [`Dual`](crate::Dual) whose
//! element type is itself a `Scalar`. A function written once against
//! `S: Scalar` can therefore be evaluated on plain floats, first-order duals,
//! or duals of duals without modification.

use core::fmt::{self, Debug};
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{Float, One, Zero};

/// Arithmetic and elementary functions shared by base floats and duals.
///
/// Comparisons (`PartialEq`, `PartialOrd`) look at values only; for duals
/// the partials are ignored.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Send
    + Sync
    + 'static
{
    /// The innermost float type.
    type Real: Real;

    /// Number of dual layers wrapped around `Real` (0 for a float).
    const DEPTH: usize;

    /// Lifts a float to a constant (all partials zero at every level).
    fn from_real(r: Self::Real) -> Self;

    /// The innermost value.
    fn real(&self) -> Self::Real;

    fn zero() -> Self {
        Self::from_real(<Self::Real as Scalar>::zero_real())
    }

    fn one() -> Self {
        Self::from_real(<Self::Real as One>::one())
    }

    /// Converts an `f64` literal to a constant of this type.
    fn from_f64(v: f64) -> Self {
        Self::from_real(<Self::Real as Real>::from_f64_lossy(v))
    }

    /// Multiplies by a float constant.
    fn mul_real(self, r: Self::Real) -> Self;

    /// Adds a float constant.
    fn add_real(self, r: Self::Real) -> Self;

    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn tan(self) -> Self;
    fn exp(self) -> Self;
    /// Natural logarithm.
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    /// Absolute value. The derivative at exactly zero is taken to be zero.
    fn abs(self) -> Self;
    fn square(self) -> Self;
    fn powi(self, n: i32) -> Self;
    fn powf(self, p: Self::Real) -> Self;

    /// True when the value and every nested partial are exactly zero.
    fn is_exact_zero(&self) -> bool;

    #[doc(hidden)]
    fn zero_real() -> Self::Real {
        <Self::Real as Zero>::zero()
    }

    /// Writes this scalar as one term of a dual's textual form.
    ///
    /// `leading` is true for the value slot and false for an ε coefficient.
    #[doc(hidden)]
    fn fmt_term(&self, f: &mut fmt::Formatter<'_>, leading: bool) -> fmt::Result;
}

/// Base floating-point types at the bottom of a nesting chain.
pub trait Real: Scalar<Real = Self> + Float {
    fn from_f64_lossy(v: f64) -> Self;
    fn to_f64_lossy(self) -> f64;
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Scalar for $t {
            type Real = $t;
            const DEPTH: usize = 0;

            #[inline]
            fn from_real(r: $t) -> Self {
                r
            }
            #[inline]
            fn real(&self) -> $t {
                *self
            }
            #[inline]
            fn is_exact_zero(&self) -> bool {
                *self == 0.0
            }
            #[inline]
            fn mul_real(self, r: $t) -> Self {
                self * r
            }
            #[inline]
            fn add_real(self, r: $t) -> Self {
                self + r
            }
            #[inline]
            fn sin(self) -> Self {
                <$t as Float>::sin(self)
            }
            #[inline]
            fn cos(self) -> Self {
                <$t as Float>::cos(self)
            }
            #[inline]
            fn tan(self) -> Self {
                <$t as Float>::tan(self)
            }
            #[inline]
            fn exp(self) -> Self {
                <$t as Float>::exp(self)
            }
            #[inline]
            fn ln(self) -> Self {
                <$t as Float>::ln(self)
            }
            #[inline]
            fn sqrt(self) -> Self {
                <$t as Float>::sqrt(self)
            }
            #[inline]
            fn abs(self) -> Self {
                <$t as Float>::abs(self)
            }
            #[inline]
            fn square(self) -> Self {
                self * self
            }
            #[inline]
            fn powi(self, n: i32) -> Self {
                <$t as Float>::powi(self, n)
            }
            #[inline]
            fn powf(self, p: $t) -> Self {
                <$t as Float>::powf(self, p)
            }

            fn fmt_term(&self, f: &mut fmt::Formatter<'_>, leading: bool) -> fmt::Result {
                let (sep, shown) = if leading {
                    ("", *self)
                } else if self.is_sign_negative() && !self.is_nan() {
                    (" - ", -*self)
                } else {
                    (" + ", *self)
                };
                f.write_str(sep)?;
                match f.precision() {
                    Some(p) => write!(f, "{:.*}", p, shown),
                    None => write!(f, "{:?}", shown),
                }
            }
        }

        impl Real for $t {
            #[inline]
            fn from_f64_lossy(v: f64) -> Self {
                v as $t
            }
            #[inline]
            fn to_f64_lossy(self) -> f64 {
                self as f64
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);
