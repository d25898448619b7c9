use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::function::ScalarFunction;
use crate::scalar::{Real, Scalar};

/// `Σ_{i<k−1} 100·(x_{i+1} − x_i²)² + (1 − x_i)²`.
pub fn rosenbrock<S: Scalar>(x: &[S]) -> Result<S, Error> {
    if x.len() < 2 {
        return Err(Error::TooFewInputs {
            needed: 2,
            found: x.len(),
        });
    }
    Ok(rosenbrock_sum(x))
}

#[inline]
fn rosenbrock_sum<S: Scalar>(x: &[S]) -> S {
    let hundred = <S::Real as Real>::from_f64_lossy(100.0);
    let one = <S::Real as Real>::from_f64_lossy(1.0);
    let mut acc = S::zero();
    for w in x.windows(2) {
        let (xi, xn) = (w[0], w[1]);
        acc += (xn - xi.square()).square().mul_real(hundred) + (-xi).add_real(one).square();
    }
    acc
}

/// The Rosenbrock function as a driver target.
///
/// Inputs shorter than two components evaluate to zero (an empty sum); use
/// [`rosenbrock`] for a checked evaluation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rosenbrock;

impl<R: Real> ScalarFunction<R> for Rosenbrock {
    fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> S {
        rosenbrock_sum(x)
    }
}

/// Closed-form gradient:
/// `∂f/∂x_i = −400·x_i·(x_{i+1} − x_i²) − 2·(1 − x_i) + 200·(x_i − x_{i−1}²)`,
/// dropping the terms that fall off either end.
pub fn rosenbrock_grad_analytic<R: Real>(x: &[R]) -> Result<Vec<R>, Error> {
    let k = x.len();
    if k < 2 {
        return Err(Error::TooFewInputs { needed: 2, found: k });
    }
    let c = |v: f64| R::from_f64_lossy(v);
    let mut g = vec![<R as Scalar>::zero(); k];
    for i in 0..k {
        if i + 1 < k {
            g[i] = g[i] + c(-400.0) * x[i] * (x[i + 1] - x[i] * x[i]) - c(2.0) * (c(1.0) - x[i]);
        }
        if i > 0 {
            g[i] = g[i] + c(200.0) * (x[i] - x[i - 1] * x[i - 1]);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::Dual;

    #[test]
    fn minimum_is_zero() {
        for k in 2..10 {
            assert_eq!(rosenbrock(&vec![1.0; k]).unwrap(), 0.0);
            assert!(rosenbrock_grad_analytic(&vec![1.0; k]).unwrap().iter().all(|&g| g == 0.0));
        }
    }

    #[test]
    fn classic_start_point() {
        // 100·(1 − 1.44)² + (1 + 1.2)² = 19.36 + 4.84
        let v = rosenbrock(&[-1.2, 1.0]).unwrap();
        assert!((v - 24.2).abs() < 1e-12);
        let g = rosenbrock_grad_analytic(&[-1.2, 1.0]).unwrap();
        assert!((g[0] + 215.6).abs() < 1e-12);
        assert!((g[1] + 88.0).abs() < 1e-12);
    }

    #[test]
    fn needs_two_inputs() {
        assert_eq!(
            rosenbrock(&[1.0]),
            Err(Error::TooFewInputs { needed: 2, found: 1 })
        );
        assert!(rosenbrock_grad_analytic::<f64>(&[]).is_err());
    }

    #[test]
    fn dual_value_channel_matches_float() {
        let x = [0.3, -1.7, 2.2, 0.01];
        let d: Vec<Dual<f64, 3>> = x.iter().map(|&v| Dual::constant(v)).collect();
        let plain = rosenbrock(&x).unwrap();
        let dual = rosenbrock(&d).unwrap();
        assert_eq!(plain.to_bits(), dual.value.to_bits());
        assert!(dual.partials.is_zero());
    }
}
