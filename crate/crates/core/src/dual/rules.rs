//! Elementary-function propagation: `f(x + Σ yᵢεᵢ) = f(x) + f'(x)·Σ yᵢεᵢ`.
//!
//! Every rule computes `f(value)` and `f'(value)` on the element scalar and
//! scales the partials by `f'(value)`. Because the element scalar may itself
//! be a dual, the same rules propagate higher-order terms when nested.

use core::fmt;

use num_traits::{Float, One};

use super::{Dual, Partials};
use crate::scalar::{Real, Scalar};

impl<T: Scalar, const N: usize> Scalar for Dual<T, N> {
    type Real = T::Real;
    const DEPTH: usize = T::DEPTH + 1;

    #[inline]
    fn from_real(r: T::Real) -> Self {
        Dual::constant(T::from_real(r))
    }

    #[inline]
    fn real(&self) -> T::Real {
        self.value.real()
    }

    #[inline]
    fn is_exact_zero(&self) -> bool {
        self.value.is_exact_zero() && self.partials.is_zero()
    }

    #[inline]
    fn mul_real(self, r: T::Real) -> Self {
        Dual::new(self.value.mul_real(r), self.partials.scale_real(r))
    }

    #[inline]
    fn add_real(self, r: T::Real) -> Self {
        Dual::new(self.value.add_real(r), self.partials)
    }

    #[inline]
    fn sin(self) -> Self {
        let v = self.value;
        self.chain(v.sin(), v.cos())
    }

    #[inline]
    fn cos(self) -> Self {
        let v = self.value;
        self.chain(v.cos(), -v.sin())
    }

    #[inline]
    fn tan(self) -> Self {
        let t = self.value.tan();
        self.chain(t, T::one() + t * t)
    }

    #[inline]
    fn exp(self) -> Self {
        let e = self.value.exp();
        self.chain(e, e)
    }

    #[inline]
    fn ln(self) -> Self {
        let v = self.value;
        // 1/v would stay finite for v < 0; keep the partials visibly invalid
        let deriv = if v.real() < T::Real::zero_real() {
            T::from_real(<T::Real as Float>::nan())
        } else {
            T::one() / v
        };
        self.chain(v.ln(), deriv)
    }

    #[inline]
    fn sqrt(self) -> Self {
        let s = self.value.sqrt();
        self.chain(s, T::one() / s.mul_real(two::<T::Real>()))
    }

    fn abs(self) -> Self {
        let v = self.value;
        let r = v.real();
        let sign = if r > T::Real::zero_real() {
            T::one()
        } else if r < T::Real::zero_real() {
            -T::one()
        } else if r == T::Real::zero_real() {
            // subgradient convention at the kink
            return Dual::new(v.abs(), Partials::zero());
        } else {
            T::from_real(<T::Real as Float>::nan())
        };
        self.chain(v.abs(), sign)
    }

    #[inline]
    fn square(self) -> Self {
        let v = self.value;
        self.chain(v.square(), v.mul_real(two::<T::Real>()))
    }

    fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Dual::new(self.value.powi(0), Partials::zero());
        }
        let v = self.value;
        let n_real = <T::Real as Real>::from_f64_lossy(f64::from(n));
        self.chain(v.powi(n), v.powi(n - 1).mul_real(n_real))
    }

    fn powf(self, p: T::Real) -> Self {
        if p == T::Real::zero_real() {
            return Dual::new(self.value.powf(p), Partials::zero());
        }
        let v = self.value;
        self.chain(v.powf(p), v.powf(p - <T::Real as One>::one()).mul_real(p))
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>, leading: bool) -> fmt::Result {
        if !leading {
            f.write_str(" + ")?;
        }
        f.write_str("(")?;
        self.value.fmt_term(f, true)?;
        for (i, p) in self.partials.iter().enumerate() {
            p.fmt_term(f, false)?;
            write!(f, "*ε[{},{}]", Self::DEPTH, i + 1)?;
        }
        f.write_str(")")
    }
}

#[inline]
fn two<R: Real>() -> R {
    <R as One>::one() + <R as One>::one()
}
