//! Differentiation drivers.
//!
//! Gradients and Jacobians are computed in chunk mode: with chunk size `N`
//! and input length `k`, pass `p` seeds inputs `p·N .. min(p·N + N, k)` with
//! unit ε lanes `0..N` and leaves every other input as a constant. The
//! target function runs exactly `⌈k/N⌉` times.
//!
//! `N` is a run-time value, while partial vectors are inline arrays whose
//! length is a type parameter. The drivers bridge the two by evaluating on
//! the smallest supported inline width `C ≥ N` and seeding only the first
//! `N` lanes. Unused lanes stay zero and never influence used ones, so the
//! results are identical to a width-`N` evaluation.

mod gradient;
mod hessian;
mod jacobian;
mod third;
#[cfg(feature = "std")]
mod threaded;

use alloc::vec::Vec;

use num_traits::Float;

use crate::dual::{Dual, Partials};
use crate::error::Error;
use crate::scalar::{Real, Scalar};

pub use gradient::{gradient, gradient_fixed};
pub use hessian::hessian;
pub use jacobian::jacobian;
pub use third::third_order_tensor;
#[cfg(feature = "std")]
pub use threaded::gradient_threaded;

/// Largest chunk size accepted by [`gradient`] and [`jacobian`].
pub const MAX_CHUNK: usize = 128;

/// Largest per-level chunk size accepted by [`hessian`].
pub const MAX_HESSIAN_CHUNK: usize = 16;

/// Largest input dimension accepted by [`third_order_tensor`].
pub const MAX_THIRD_ORDER_DIM: usize = 8;

/// Chunk size used when the caller has no preference.
pub const DEFAULT_CHUNK: usize = 8;

/// Run-time tuning for the chunked drivers.
///
/// `chunk_size` larger than the input length is clamped to it. `threads`
/// is only consulted by [`gradient_threaded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChunkConfig {
    pub chunk_size: usize,
    pub threads: usize,
}

impl ChunkConfig {
    pub fn new(chunk_size: usize) -> Self {
        ChunkConfig {
            chunk_size,
            threads: 1,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    /// `min(k, 8)` lanes, serial.
    pub fn default_for(k: usize) -> Self {
        ChunkConfig::new(k.clamp(1, DEFAULT_CHUNK))
    }

    /// Validates the config against input length `k` and returns the
    /// effective chunk size.
    pub fn effective_chunk(&self, k: usize) -> Result<usize, Error> {
        if k == 0 {
            return Err(Error::EmptyInput);
        }
        if self.chunk_size == 0 {
            return Err(Error::ZeroChunk);
        }
        if self.threads == 0 {
            return Err(Error::ZeroThreads);
        }
        Ok(self.chunk_size.min(k))
    }
}

impl Default for ChunkConfig {
    fn default() -> Self {
        ChunkConfig::new(DEFAULT_CHUNK)
    }
}

/// Number of passes needed to cover `k` inputs with chunks of `n`.
#[inline]
pub fn pass_count(k: usize, n: usize) -> usize {
    k.div_ceil(n)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradientResult<R> {
    pub values: Vec<R>,
    /// `f(x)`, read from the value channel of the first pass.
    pub f_value: R,
}

/// Dense `rows × cols` Jacobian, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobianResult<R> {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<R>,
    /// `f(x)`.
    pub values: Vec<R>,
}

impl<R: Copy> JacobianResult<R> {
    /// `∂fᵢ/∂xⱼ`.
    pub fn get(&self, i: usize, j: usize) -> R {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }
}

/// Dense `k × k` Hessian, row-major, with the gradient and value read from
/// the same evaluations.
#[derive(Debug, Clone, PartialEq)]
pub struct HessianResult<R> {
    pub k: usize,
    pub entries: Vec<R>,
    pub gradient: Vec<R>,
    pub f_value: R,
}

impl<R: Real> HessianResult<R> {
    /// `∂²f/∂xᵢ∂xⱼ`.
    pub fn get(&self, i: usize, j: usize) -> R {
        self.entries[i * self.k + j]
    }

    /// `‖H − Hᵀ‖∞ / ‖H‖∞` using the max-row-sum norm. Zero for a zero matrix.
    pub fn asymmetry(&self) -> R {
        let k = self.k;
        let zero = <R as Scalar>::zero();
        let mut diff = zero;
        let mut norm = zero;
        for i in 0..k {
            let mut d_row = zero;
            let mut n_row = zero;
            for j in 0..k {
                d_row += Float::abs(self.get(i, j) - self.get(j, i));
                n_row += Float::abs(self.get(i, j));
            }
            diff = Float::max(diff, d_row);
            norm = Float::max(norm, n_row);
        }
        if norm == zero {
            zero
        } else {
            diff / norm
        }
    }
}

/// Dense `k × k × k` third-derivative tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct ThirdOrderResult<R> {
    pub k: usize,
    pub entries: Vec<R>,
}

impl<R: Copy> ThirdOrderResult<R> {
    /// `∂³f/∂xᵢ∂xⱼ∂xₗ`.
    pub fn get(&self, i: usize, j: usize, l: usize) -> R {
        self.entries[(i * self.k + j) * self.k + l]
    }
}

/// `f'(x)` for a univariate `f`.
pub fn derivative<R, F>(f: F, x: R) -> R
where
    R: Real,
    F: FnOnce(Dual<R, 1>) -> Dual<R, 1>,
{
    f(Dual::new(x, Partials::new([<R as Scalar>::one()]))).partials[0]
}

/// `f''(x)` using one level of nesting, seeded as
/// `Dual(Dual(x, 1), Dual(1, 0))`.
pub fn second_derivative<R, F>(f: F, x: R) -> R
where
    R: Real,
    F: FnOnce(Dual<Dual<R, 1>, 1>) -> Dual<Dual<R, 1>, 1>,
{
    let one = <R as Scalar>::one();
    let zero = <R as Scalar>::zero();
    let d = Dual::new(
        Dual::new(x, Partials::new([one])),
        Partials::new([Dual::new(one, Partials::new([zero]))]),
    );
    f(d).partials[0].partials[0]
}

/// `f'''(x)` using two levels of nesting.
pub fn third_derivative<R, F>(f: F, x: R) -> R
where
    R: Real,
    F: FnOnce(Dual<Dual<Dual<R, 1>, 1>, 1>) -> Dual<Dual<Dual<R, 1>, 1>, 1>,
{
    let one = <R as Scalar>::one();
    let zero = <R as Scalar>::zero();
    let inner = |v: R, p: R| Dual::new(v, Partials::new([p]));
    let d = Dual::new(
        Dual::new(inner(x, one), Partials::new([inner(one, zero)])),
        Partials::new([Dual::new(
            inner(one, zero),
            Partials::new([inner(zero, zero)]),
        )]),
    );
    f(d).partials[0].partials[0].partials[0]
}

/// Values equal, or both NaN.
#[inline]
pub(crate) fn same_value<R: Real>(a: R, b: R) -> bool {
    a == b || (Float::is_nan(a) && Float::is_nan(b))
}

/// Runs `$body` with `$c` bound to the smallest inline width that can hold
/// `$n` lanes, or evaluates to `Err(ChunkTooLarge)`.
macro_rules! with_chunk_width {
    ($n:expr, $c:ident => $body:expr) => {{
        match $n {
            1 => { const $c: usize = 1; $body }
            2 => { const $c: usize = 2; $body }
            3 => { const $c: usize = 3; $body }
            4 => { const $c: usize = 4; $body }
            5 => { const $c: usize = 5; $body }
            6 => { const $c: usize = 6; $body }
            7 => { const $c: usize = 7; $body }
            8 => { const $c: usize = 8; $body }
            9 => { const $c: usize = 9; $body }
            10 => { const $c: usize = 10; $body }
            11 => { const $c: usize = 11; $body }
            12 => { const $c: usize = 12; $body }
            13 => { const $c: usize = 13; $body }
            14 => { const $c: usize = 14; $body }
            15 => { const $c: usize = 15; $body }
            16 => { const $c: usize = 16; $body }
            17..=20 => { const $c: usize = 20; $body }
            21..=24 => { const $c: usize = 24; $body }
            25..=32 => { const $c: usize = 32; $body }
            33..=48 => { const $c: usize = 48; $body }
            49..=64 => { const $c: usize = 64; $body }
            65..=96 => { const $c: usize = 96; $body }
            97..=128 => { const $c: usize = 128; $body }
            requested => Err($crate::error::Error::ChunkTooLarge {
                requested,
                max: $crate::drivers::MAX_CHUNK,
            }),
        }
    }};
}

/// Coarser width buckets for the nested drivers, which instantiate one
/// dual type per combination of levels.
macro_rules! with_nested_width {
    ($n:expr, $max:expr, $c:ident => $body:expr) => {{
        match $n {
            1 => { const $c: usize = 1; $body }
            2 => { const $c: usize = 2; $body }
            3..=4 => { const $c: usize = 4; $body }
            5..=8 => { const $c: usize = 8; $body }
            9..=16 if $max >= 16 => { const $c: usize = 16; $body }
            requested => Err($crate::error::Error::ChunkTooLarge { requested, max: $max }),
        }
    }};
}

pub(crate) use with_chunk_width;
pub(crate) use with_nested_width;
