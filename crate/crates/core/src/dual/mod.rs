//! Multidimensional dual numbers.
//!
//! A `Dual<T, N>` is `value + Σ partials[i]·εᵢ` with `εᵢεⱼ = 0` for all
//! `i, j`. Evaluating `f` on it yields `f(value) + f'(value)·Σ partials[i]·εᵢ`,
//! so each ε lane carries one directional derivative. The element type `T`
//! is any [`Scalar`], including another `Dual`; a chain of `d` nested duals
//! carries exact `d`-th order derivatives.
//!
//! Lanes never interact: every propagation rule scales or combines lanes
//! one at a time using factors computed from values alone. Chunked and
//! single-pass gradients are therefore bitwise identical.

mod ops;
mod partials;
mod rules;

use core::fmt;

pub use partials::Partials;

use crate::error::Error;
use crate::scalar::Scalar;

/// A value together with `N` ε coefficients.
///
/// `PartialEq` and `PartialOrd` compare `value` only. Use
/// [`Dual::into_parts`] or the public fields to compare partials.
#[derive(Clone, Copy, Debug)]
pub struct Dual<T, const N: usize> {
    pub value: T,
    pub partials: Partials<T, N>,
}

impl<T: Scalar, const N: usize> Dual<T, N> {
    #[inline]
    pub fn new(value: T, partials: Partials<T, N>) -> Self {
        Dual { value, partials }
    }

    /// Builds a dual from a value and a slice of exactly `N` partials.
    pub fn from_slice(value: T, partials: &[T]) -> Result<Self, Error> {
        Ok(Dual {
            value,
            partials: Partials::from_slice(partials)?,
        })
    }

    /// A constant: all partials zero.
    #[inline]
    pub fn constant(value: T) -> Self {
        Dual {
            value,
            partials: Partials::zero(),
        }
    }

    /// An input seeded along ε lane `lane`.
    pub fn seed(value: T, lane: usize) -> Result<Self, Error> {
        Ok(Dual {
            value,
            partials: Partials::unit(lane)?,
        })
    }

    #[inline]
    pub fn value(&self) -> T {
        self.value
    }

    #[inline]
    pub fn partials(&self) -> &Partials<T, N> {
        &self.partials
    }

    /// The coefficient of ε lane `lane`.
    pub fn partial(&self, lane: usize) -> Result<T, Error> {
        self.partials.get(lane)
    }

    #[inline]
    pub fn into_parts(self) -> (T, [T; N]) {
        (self.value, self.partials.0)
    }

    /// Applies `f` to the value, scaling the partials by `deriv`, the
    /// derivative of `f` at the value.
    #[inline]
    pub fn chain(self, value: T, deriv: T) -> Self {
        Dual {
            value,
            partials: self.partials.scale(deriv),
        }
    }
}

/// Builds a dual from a value and exactly `N` partials.
pub fn make_dual<T: Scalar, const N: usize>(value: T, partials: &[T]) -> Result<Dual<T, N>, Error> {
    Dual::from_slice(value, partials)
}

/// A dual with value `value` and a one in ε lane `lane`.
pub fn seed_unit<T: Scalar, const N: usize>(value: T, lane: usize) -> Result<Dual<T, N>, Error> {
    Dual::seed(value, lane)
}

impl<T: Scalar, const N: usize> From<T> for Dual<T, N> {
    fn from(value: T) -> Self {
        Dual::constant(value)
    }
}

impl<T: Scalar, const N: usize> Default for Dual<T, N> {
    fn default() -> Self {
        Dual::constant(T::zero())
    }
}

/// Renders as `(value + p₁*ε[d,1] + …)` where `d` is the nesting level,
/// counted from 1 at the innermost dual. Floats use the shortest
/// round-trip form unless a precision is given.
impl<T: Scalar, const N: usize> fmt::Display for Dual<T, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_term(f, true)
    }
}
