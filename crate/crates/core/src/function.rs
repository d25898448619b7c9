//! Target-function traits.
//!
//! The chunk size is chosen at run time but partial vectors are inline
//! arrays, so the drivers need to evaluate the same function at several
//! dual types. Target functions are therefore written once, generically
//! over the element scalar, by implementing these traits.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering};

use crate::scalar::{Real, Scalar};

/// `f: Rᵏ → R`, evaluable on any scalar whose innermost float is `R`.
///
/// Implementations must be pure: the same inputs give the same outputs.
pub trait ScalarFunction<R: Real> {
    fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> S;
}

/// `f: Rᵏ → Rᵐ`, evaluable on any scalar whose innermost float is `R`.
pub trait VectorFunction<R: Real> {
    fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> Vec<S>;
}

impl<R: Real, F: ScalarFunction<R> + ?Sized> ScalarFunction<R> for &F {
    fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> S {
        (**self).eval(x)
    }
}

impl<R: Real, F: VectorFunction<R> + ?Sized> VectorFunction<R> for &F {
    fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> Vec<S> {
        (**self).eval(x)
    }
}

/// Wraps a target function and counts its evaluations.
///
/// The counter is atomic, so a `Counting` wrapper may be shared with the
/// threaded driver.
#[derive(Debug, Default)]
pub struct Counting<F> {
    inner: F,
    calls: AtomicUsize,
}

impl<F> Counting<F> {
    pub fn new(inner: F) -> Self {
        Counting {
            inner,
            calls: AtomicUsize::new(0),
        }
    }

    pub fn count(&self) -> usize {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.calls.store(0, Ordering::Relaxed);
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }

    pub fn into_inner(self) -> F {
        self.inner
    }
}

impl<R: Real, F: ScalarFunction<R>> ScalarFunction<R> for Counting<F> {
    fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> S {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.inner.eval(x)
    }
}

impl<R: Real, F: VectorFunction<R>> VectorFunction<R> for Counting<F> {
    fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> Vec<S> {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.inner.eval(x)
    }
}
