//! Forward-mode automatic differentiation on multidimensional dual numbers.
//!
//! [`Dual<T, N>`] carries a value and `N` ε coefficients in an inline array,
//! so no dual arithmetic touches the heap. Gradients and Jacobians are
//! computed in *chunks*: each pass through the target function seeds `N`
//! inputs, and `⌈k/N⌉` passes cover an input of length `k`. The chunk size
//! is picked at run time through [`ChunkConfig`].
//!
//! Duals nest: `Dual<Dual<f64, N>, M>` yields exact second derivatives and
//! `Dual<Dual<Dual<f64, L>, N>, M>` third derivatives.
//!
//! ```
//! use chunkdiff::prelude::*;
//!
//! let d2 = second_derivative(|x| x.sin(), 1.0);
//! assert_eq!(d2, -0.8414709848078965);
//!
//! let x = [-1.2, 1.0];
//! let g = gradient(&Rosenbrock, &x, &ChunkConfig::new(1)).unwrap();
//! assert!((g.values[0] + 215.6).abs() < 1e-12);
//! ```
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled; elementary functions then come from `libm`. The threaded
//! gradient driver requires `std`.
//!
//! Mixing duals of different chunk widths does not type-check:
//!
//! ```compile_fail
//! use chunkdiff::{Dual, Partials};
//! let a: Dual<f64, 2> = Dual::new(1.0, Partials::new([1.0, 0.0]));
//! let b: Dual<f64, 3> = Dual::new(1.0, Partials::new([1.0, 0.0, 0.0]));
//! let _ = a + b;
//! ```

#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod drivers;
pub mod dual;
mod error;
pub mod function;
pub mod scalar;
pub mod testfns;

pub use drivers::{
    derivative, gradient, gradient_fixed, hessian, jacobian, second_derivative, third_derivative,
    third_order_tensor, ChunkConfig, GradientResult, HessianResult, JacobianResult, ThirdOrderResult,
};
#[cfg(feature = "std")]
pub use drivers::gradient_threaded;
pub use dual::{make_dual, seed_unit, Dual, Partials};
pub use error::Error;
pub use function::{Counting, ScalarFunction, VectorFunction};
pub use scalar::{Real, Scalar};

pub mod prelude {
    pub use crate::drivers::*;
    pub use crate::dual::{make_dual, seed_unit, Dual, Partials};
    pub use crate::function::{Counting, ScalarFunction, VectorFunction};
    pub use crate::scalar::{Real, Scalar};
    pub use crate::testfns::{Ackley, AckleyParams, Rosenbrock};
    pub use crate::Error;
}
