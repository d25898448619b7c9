use alloc::vec;
use alloc::vec::Vec;
use std::thread;

use super::gradient::{constants, gradient_lanes, run_passes};
use super::{pass_count, same_value, with_chunk_width, ChunkConfig, GradientResult};
use crate::error::Error;
use crate::function::ScalarFunction;
use crate::scalar::{Real, Scalar};

/// [`gradient`](super::gradient) with the `⌈k/N⌉` passes split across
/// `cfg.threads` workers.
///
/// Passes are assigned in contiguous blocks and every worker writes a
/// disjoint slice of the output, so the result is bitwise identical to the
/// serial driver. `f` is called from several threads at once and must be
/// safe to do so.
pub fn gradient_threaded<R, F>(f: &F, x: &[R], cfg: &ChunkConfig) -> Result<GradientResult<R>, Error>
where
    R: Real,
    F: ScalarFunction<R> + Sync + ?Sized,
{
    let n = cfg.effective_chunk(x.len())?;
    with_chunk_width!(n, C => Ok(threaded_lanes::<R, F, C>(f, x, n, cfg.threads)))
}

fn threaded_lanes<R, F, const C: usize>(f: &F, x: &[R], n: usize, threads: usize) -> GradientResult<R>
where
    R: Real,
    F: ScalarFunction<R> + Sync + ?Sized,
{
    let k = x.len();
    let passes = pass_count(k, n);
    let workers = threads.min(passes);
    if workers <= 1 {
        return gradient_lanes::<R, F, C>(f, x, n);
    }

    let mut values = vec![<R as Scalar>::zero(); k];
    let f_values: Vec<R> = thread::scope(|s| {
        let mut rest = values.as_mut_slice();
        let mut handles = Vec::with_capacity(workers);
        for w in 0..workers {
            let first = w * passes / workers;
            let last = (w + 1) * passes / workers;
            let len = (last * n).min(k) - first * n;
            let (mine, tail) = rest.split_at_mut(len);
            rest = tail;
            handles.push(s.spawn(move || {
                let mut buf = constants::<R, C>(x);
                run_passes(f, n, first..last, &mut buf, mine)
            }));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("gradient worker panicked"))
            .collect()
    });

    debug_assert!(
        f_values.iter().all(|&v| same_value(v, f_values[0])),
        "target function is not pure across workers"
    );
    GradientResult {
        values,
        f_value: f_values[0],
    }
}
