use core::cmp::Ordering;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::{Dual, Partials};
use crate::scalar::Scalar;

impl<T: Scalar, const N: usize> Add for Dual<T, N> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Dual::new(self.value + rhs.value, self.partials + rhs.partials)
    }
}

impl<T: Scalar, const N: usize> Sub for Dual<T, N> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Dual::new(self.value - rhs.value, self.partials - rhs.partials)
    }
}

impl<T: Scalar, const N: usize> Mul for Dual<T, N> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Dual::new(
            self.value * rhs.value,
            rhs.partials.lin_comb(self.value, self.partials, rhs.value),
        )
    }
}

impl<T: Scalar, const N: usize> Div for Dual<T, N> {
    type Output = Self;
    #[inline]
    fn div(self, rhs: Self) -> Self {
        // (a'·b − a·b') / b²
        let num = self.partials.lin_comb(rhs.value, rhs.partials, -self.value);
        Dual::new(self.value / rhs.value, num.div_by(rhs.value * rhs.value))
    }
}

impl<T: Scalar, const N: usize> Neg for Dual<T, N> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Dual::new(-self.value, -self.partials)
    }
}

// Dual op element-scalar: the scalar is a constant.

impl<T: Scalar, const N: usize> Add<T> for Dual<T, N> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: T) -> Self {
        Dual::new(self.value + rhs, self.partials)
    }
}

impl<T: Scalar, const N: usize> Sub<T> for Dual<T, N> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: T) -> Self {
        Dual::new(self.value - rhs, self.partials)
    }
}

impl<T: Scalar, const N: usize> Mul<T> for Dual<T, N> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: T) -> Self {
        Dual::new(self.value * rhs, self.partials.scale(rhs))
    }
}

impl<T: Scalar, const N: usize> Div<T> for Dual<T, N> {
    type Output = Self;
    #[inline]
    fn div(self, rhs: T) -> Self {
        Dual::new(self.value / rhs, self.partials.div_by(rhs))
    }
}

macro_rules! impl_float_lhs {
    ($t:ty) => {
        impl<const N: usize> Add<Dual<$t, N>> for $t {
            type Output = Dual<$t, N>;
            #[inline]
            fn add(self, rhs: Dual<$t, N>) -> Dual<$t, N> {
                Dual::new(self + rhs.value, rhs.partials)
            }
        }

        impl<const N: usize> Sub<Dual<$t, N>> for $t {
            type Output = Dual<$t, N>;
            #[inline]
            fn sub(self, rhs: Dual<$t, N>) -> Dual<$t, N> {
                Dual::new(self - rhs.value, -rhs.partials)
            }
        }

        impl<const N: usize> Mul<Dual<$t, N>> for $t {
            type Output = Dual<$t, N>;
            #[inline]
            fn mul(self, rhs: Dual<$t, N>) -> Dual<$t, N> {
                rhs * self
            }
        }

        impl<const N: usize> Div<Dual<$t, N>> for $t {
            type Output = Dual<$t, N>;
            #[inline]
            fn div(self, rhs: Dual<$t, N>) -> Dual<$t, N> {
                Dual::constant(self) / rhs
            }
        }
    };
}

impl_float_lhs!(f32);
impl_float_lhs!(f64);

macro_rules! impl_assign {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<T: Scalar, const N: usize> $tr for Dual<T, N> {
            #[inline]
            fn $m(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        }

        impl<T: Scalar, const N: usize> $tr<T> for Dual<T, N> {
            #[inline]
            fn $m(&mut self, rhs: T) {
                *self = *self $op rhs;
            }
        }
    };
}

impl_assign!(AddAssign, add_assign, +);
impl_assign!(SubAssign, sub_assign, -);
impl_assign!(MulAssign, mul_assign, *);
impl_assign!(DivAssign, div_assign, /);

impl<T: Scalar, const N: usize> Sum for Dual<T, N> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Dual::new(T::zero(), Partials::zero()), |acc, d| acc + d)
    }
}

impl<T: Scalar, const N: usize> PartialEq for Dual<T, N> {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<T: Scalar, const N: usize> PartialOrd for Dual<T, N> {
    #[inline]
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

impl<T: Scalar, const N: usize> PartialEq<T> for Dual<T, N> {
    #[inline]
    fn eq(&self, other: &T) -> bool {
        self.value == *other
    }
}

impl<T: Scalar, const N: usize> PartialOrd<T> for Dual<T, N> {
    #[inline]
    fn partial_cmp(&self, other: &T) -> Option<Ordering> {
        self.value.partial_cmp(other)
    }
}
