use alloc::vec;
use alloc::vec::Vec;

use super::{pass_count, same_value, with_nested_width, HessianResult, MAX_HESSIAN_CHUNK};
use crate::dual::Dual;
use crate::error::Error;
use crate::function::ScalarFunction;
use crate::scalar::{Real, Scalar};

/// Dense Hessian of `f` at `x` by forward-over-forward nesting.
///
/// Inputs are duals of shape `Dual<Dual<R, N>, M>`. Each pass seeds an
/// outer block of `outer_chunk` inputs on the outer ε lanes and an inner
/// block of `inner_chunk` inputs on the inner ε lanes; cross-level
/// coefficients start at zero. `⌈k/M⌉·⌈k/N⌉` passes fill the matrix. The
/// gradient and `f(x)` come from the value channels of the same passes.
///
/// Both chunk sizes are clamped to `k` and may not exceed
/// [`MAX_HESSIAN_CHUNK`].
pub fn hessian<R, F>(
    f: &F,
    x: &[R],
    outer_chunk: usize,
    inner_chunk: usize,
) -> Result<HessianResult<R>, Error>
where
    R: Real,
    F: ScalarFunction<R> + ?Sized,
{
    let k = x.len();
    if k == 0 {
        return Err(Error::EmptyInput);
    }
    if outer_chunk == 0 || inner_chunk == 0 {
        return Err(Error::ZeroChunk);
    }
    let m = outer_chunk.min(k);
    let n = inner_chunk.min(k);
    with_nested_width!(m, MAX_HESSIAN_CHUNK, CM => {
        with_nested_width!(n, MAX_HESSIAN_CHUNK, CN => {
            Ok(hessian_lanes::<R, F, CM, CN>(f, x, m, n))
        })
    })
}

fn hessian_lanes<R, F, const CM: usize, const CN: usize>(
    f: &F,
    x: &[R],
    m: usize,
    n: usize,
) -> HessianResult<R>
where
    R: Real,
    F: ScalarFunction<R> + ?Sized,
{
    let k = x.len();
    let one = <R as Scalar>::one();
    let zero = <R as Scalar>::zero();
    let mut buf: Vec<Dual<Dual<R, CN>, CM>> =
        x.iter().map(|&v| Dual::constant(Dual::constant(v))).collect();
    let mut entries = vec![zero; k * k];
    let mut gradient = vec![zero; k];
    let mut f_value: Option<R> = None;

    for p in 0..pass_count(k, m) {
        let outer = p * m..((p + 1) * m).min(k);
        for (b, i) in outer.clone().enumerate() {
            buf[i].partials[b].value = one;
        }
        for q in 0..pass_count(k, n) {
            let inner = q * n..((q + 1) * n).min(k);
            for (a, j) in inner.clone().enumerate() {
                buf[j].value.partials[a] = one;
            }
            let y = f.eval(&buf);
            for (b, i) in outer.clone().enumerate() {
                for (a, j) in inner.clone().enumerate() {
                    entries[i * k + j] = y.partials[b].partials[a];
                }
            }
            if p == 0 {
                for (a, j) in inner.clone().enumerate() {
                    gradient[j] = y.value.partials[a];
                }
            }
            match f_value {
                None => f_value = Some(y.value.value),
                Some(v) => debug_assert!(
                    same_value(v, y.value.value),
                    "target function is not pure"
                ),
            }
            for (a, j) in inner.enumerate() {
                buf[j].value.partials[a] = zero;
            }
        }
        for (b, i) in outer.enumerate() {
            buf[i].partials[b].value = zero;
        }
    }

    HessianResult {
        k,
        entries,
        gradient,
        f_value: f_value.unwrap_or(zero),
    }
}
