use alloc::vec::Vec;
use core::f64::consts::{E, TAU};

use crate::error::Error;
use crate::function::ScalarFunction;
use crate::scalar::{Real, Scalar};

/// Constants of the Ackley function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AckleyParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Default for AckleyParams {
    /// `a = 20`, `b = 0.2`, `c = 2π`.
    fn default() -> Self {
        AckleyParams { a: 20.0, b: 0.2, c: TAU }
    }
}

/// `−a·exp(−b·√(mean xᵢ²)) − exp(mean cos(c·xᵢ)) + a + e`.
///
/// At `x = 0` the square root has no derivative; dual inputs there produce
/// NaN partials.
pub fn ackley<S: Scalar>(x: &[S], params: &AckleyParams) -> Result<S, Error> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(ackley_sum(x, params))
}

#[inline]
fn ackley_sum<S: Scalar>(x: &[S], p: &AckleyParams) -> S {
    let r = |v: f64| <S::Real as Real>::from_f64_lossy(v);
    let inv_k = r(1.0 / x.len() as f64);
    let c = r(p.c);
    let mut sum_sq = S::zero();
    let mut sum_cos = S::zero();
    for &xi in x {
        sum_sq += xi.square();
        sum_cos += xi.mul_real(c).cos();
    }
    let first = sum_sq.mul_real(inv_k).sqrt().mul_real(r(-p.b)).exp().mul_real(r(-p.a));
    let second = sum_cos.mul_real(inv_k).exp();
    (first - second).add_real(r(p.a + E))
}

/// The Ackley function as a driver target.
#[derive(Debug, Clone, Copy, Default)]
pub struct Ackley {
    pub params: AckleyParams,
}

impl Ackley {
    pub fn new(params: AckleyParams) -> Self {
        Ackley { params }
    }
}

impl<R: Real> ScalarFunction<R> for Ackley {
    fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> S {
        ackley_sum(x, &self.params)
    }
}

/// Closed-form gradient. With `ρ = √(Σxⱼ²/k)` and `C = Σcos(c·xⱼ)/k`:
/// `∂f/∂xᵢ = a·b·exp(−b·ρ)·xᵢ/(k·ρ) + (c/k)·sin(c·xᵢ)·exp(C)`.
///
/// Fails at `x = 0`, where `ρ` is not differentiable.
pub fn ackley_grad_analytic(x: &[f64], params: &AckleyParams) -> Result<Vec<f64>, Error> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let k = x.len() as f64;
    let rho = (x.iter().map(|v| v * v).sum::<f64>() / k).sqrt();
    if rho == 0.0 {
        return Err(Error::NonDifferentiablePoint);
    }
    let mean_cos = x.iter().map(|v| (params.c * v).cos()).sum::<f64>() / k;
    let radial = params.a * params.b * (-params.b * rho).exp() / (k * rho);
    let angular = params.c / k * mean_cos.exp();
    Ok(x.iter()
        .map(|&v| radial * v + angular * (params.c * v).sin())
        .collect())
}
