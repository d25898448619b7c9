//! Benchmark target functions with closed-form gradients and a
//! finite-difference oracle.
//!
//! The functions are generic over [`Scalar`], so the same code evaluates on
//! floats and on duals of any nesting depth.

mod ackley;
mod rosenbrock;

use alloc::vec::Vec;

use num_traits::{Float, Zero};

pub use ackley::{ackley, ackley_grad_analytic, Ackley, AckleyParams};
pub use rosenbrock::{rosenbrock, rosenbrock_grad_analytic, Rosenbrock};

use crate::error::Error;
use crate::scalar::Real;

/// Central-difference gradient `(f(x + h·eᵢ) − f(x − h·eᵢ)) / 2h`.
///
/// The divisor is the realised step `(xᵢ + h) − (xᵢ − h)` rather than `2h`,
/// which removes the representation error of `xᵢ ± h`.
pub fn fd_gradient<R, F>(f: F, x: &[R], step: R) -> Result<Vec<R>, Error>
where
    R: Real,
    F: Fn(&[R]) -> R,
{
    if !(step > <R as Zero>::zero()) || !Float::is_finite(step) {
        return Err(Error::InvalidStep);
    }
    let mut probe = x.to_vec();
    let mut out = Vec::with_capacity(x.len());
    for i in 0..x.len() {
        let xi = x[i];
        let hi = xi + step;
        let lo = xi - step;
        probe[i] = hi;
        let f_hi = f(&probe);
        probe[i] = lo;
        let f_lo = f(&probe);
        probe[i] = xi;
        out.push((f_hi - f_lo) / (hi - lo));
    }
    Ok(out)
}
