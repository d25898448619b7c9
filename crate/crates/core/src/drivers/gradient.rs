use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::{pass_count, same_value, with_chunk_width, ChunkConfig, GradientResult};
use crate::dual::Dual;
use crate::error::Error;
use crate::function::ScalarFunction;
use crate::scalar::{Real, Scalar};

/// `∇f(x)` in `⌈k/N⌉` passes, `N` taken from `cfg.chunk_size` (clamped to
/// `k`). Runs serially regardless of `cfg.threads`.
///
/// When `N` does not divide `k` the final pass seeds only `k mod N` lanes.
pub fn gradient<R, F>(f: &F, x: &[R], cfg: &ChunkConfig) -> Result<GradientResult<R>, Error>
where
    R: Real,
    F: ScalarFunction<R> + ?Sized,
{
    let n = cfg.effective_chunk(x.len())?;
    with_chunk_width!(n, C => Ok(gradient_lanes::<R, F, C>(f, x, n)))
}

/// `∇f(x)` with a compile-time chunk size `N`.
pub fn gradient_fixed<R, F, const N: usize>(f: &F, x: &[R]) -> Result<GradientResult<R>, Error>
where
    R: Real,
    F: ScalarFunction<R> + ?Sized,
{
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    if N == 0 {
        return Err(Error::ZeroChunk);
    }
    Ok(gradient_lanes::<R, F, N>(f, x, N.min(x.len())))
}

/// Serial gradient on width-`C` duals using the first `n` lanes.
pub(crate) fn gradient_lanes<R, F, const C: usize>(f: &F, x: &[R], n: usize) -> GradientResult<R>
where
    R: Real,
    F: ScalarFunction<R> + ?Sized,
{
    let k = x.len();
    let mut values = vec![<R as Scalar>::zero(); k];
    let mut buf = constants::<R, C>(x);
    let f_value = run_passes(f, n, 0..pass_count(k, n), &mut buf, &mut values);
    GradientResult { values, f_value }
}

pub(crate) fn constants<R: Real, const C: usize>(x: &[R]) -> Vec<Dual<R, C>> {
    x.iter().map(|&v| Dual::constant(v)).collect()
}

/// Runs passes `passes` with chunk size `n`, writing the partials of each
/// pass into `out`. `out` covers inputs `passes.start·n ..` and must be long
/// enough for every seeded input. `buf` holds the inputs as constants and
/// is returned in that state.
///
/// Returns the value channel of the first pass.
pub(crate) fn run_passes<R, F, const C: usize>(
    f: &F,
    n: usize,
    passes: Range<usize>,
    buf: &mut [Dual<R, C>],
    out: &mut [R],
) -> R
where
    R: Real,
    F: ScalarFunction<R> + ?Sized,
{
    debug_assert!(n >= 1 && n <= C);
    let k = buf.len();
    let offset = passes.start * n;
    let one = <R as Scalar>::one();
    let zero = <R as Scalar>::zero();
    let mut first: Option<R> = None;

    for p in passes {
        let seeded = p * n..((p + 1) * n).min(k);
        for (lane, i) in seeded.clone().enumerate() {
            buf[i].partials[lane] = one;
        }
        let y = f.eval(buf);
        for (lane, i) in seeded.enumerate() {
            out[i - offset] = y.partials[lane];
            buf[i].partials[lane] = zero;
        }
        match first {
            None => first = Some(y.value),
            Some(v) => debug_assert!(
                same_value(v, y.value),
                "target function is not pure: pass {p} returned a different value"
            ),
        }
    }
    first.unwrap_or(zero)
}
