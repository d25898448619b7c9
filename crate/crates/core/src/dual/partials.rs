use core::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::error::Error;
use crate::scalar::Scalar;

/// A fixed-length vector of ε coefficients stored inline.
///
/// The length `N` is part of the type, so two `Partials` of different
/// lengths can never be combined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Partials<T, const N: usize>(pub(crate) [T; N]);

impl<T: Scalar, const N: usize> Partials<T, N> {
    #[inline]
    pub fn new(entries: [T; N]) -> Self {
        Partials(entries)
    }

    #[inline]
    pub fn zero() -> Self {
        Partials([T::zero(); N])
    }

    /// Unit vector with a one at `lane`.
    pub fn unit(lane: usize) -> Result<Self, Error> {
        if lane >= N {
            return Err(Error::LaneOutOfRange { lane, len: N });
        }
        let mut p = Self::zero();
        p.0[lane] = T::one();
        Ok(p)
    }

    pub fn from_slice(entries: &[T]) -> Result<Self, Error> {
        let arr: [T; N] = entries.try_into().map_err(|_| Error::LengthMismatch {
            expected: N,
            found: entries.len(),
        })?;
        Ok(Partials(arr))
    }

    #[inline]
    pub const fn len(&self) -> usize {
        N
    }

    #[inline]
    pub const fn is_empty(&self) -> bool {
        N == 0
    }

    #[inline]
    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    #[inline]
    pub fn into_array(self) -> [T; N] {
        self.0
    }

    pub fn get(&self, lane: usize) -> Result<T, Error> {
        self.0
            .get(lane)
            .copied()
            .ok_or(Error::LaneOutOfRange { lane, len: N })
    }

    pub fn iter(&self) -> core::slice::Iter<'_, T> {
        self.0.iter()
    }

    /// Multiplies every lane by `s`.
    #[inline]
    pub fn scale(self, s: T) -> Self {
        Partials(self.0.map(|p| p * s))
    }

    #[inline]
    pub fn scale_real(self, r: T::Real) -> Self {
        Partials(self.0.map(|p| p.mul_real(r)))
    }

    #[inline]
    pub fn div_by(self, s: T) -> Self {
        Partials(self.0.map(|p| p / s))
    }

    /// Lane-wise `a * self + b * other`.
    #[inline]
    pub(crate) fn lin_comb(self, a: T, other: Self, b: T) -> Self {
        let mut out = self.0;
        for (o, q) in out.iter_mut().zip(other.0) {
            *o = a * *o + b * q;
        }
        Partials(out)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_exact_zero)
    }
}

impl<T: Scalar, const N: usize> Default for Partials<T, N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T, const N: usize> Index<usize> for Partials<T, N> {
    type Output = T;
    #[inline]
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T, const N: usize> IndexMut<usize> for Partials<T, N> {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.0[i]
    }
}

impl<T: Scalar, const N: usize> Add for Partials<T, N> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o += r;
        }
        Partials(out)
    }
}

impl<T: Scalar, const N: usize> Sub for Partials<T, N> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o -= r;
        }
        Partials(out)
    }
}

impl<T: Scalar, const N: usize> Neg for Partials<T, N> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Partials(self.0.map(|p| -p))
    }
}
