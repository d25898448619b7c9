use alloc::vec;
use alloc::vec::Vec;

use super::{pass_count, with_chunk_width, ChunkConfig, JacobianResult};
use crate::error::Error;
use crate::function::VectorFunction;
use crate::scalar::{Real, Scalar};

/// Dense Jacobian of `f` at `x`, one column block per chunk pass.
///
/// The output length `m` is fixed by the first pass; a later pass returning
/// a different length is an error.
pub fn jacobian<R, F>(f: &F, x: &[R], cfg: &ChunkConfig) -> Result<JacobianResult<R>, Error>
where
    R: Real,
    F: VectorFunction<R> + ?Sized,
{
    let n = cfg.effective_chunk(x.len())?;
    with_chunk_width!(n, C => jacobian_lanes::<R, F, C>(f, x, n))
}

fn jacobian_lanes<R, F, const C: usize>(f: &F, x: &[R], n: usize) -> Result<JacobianResult<R>, Error>
where
    R: Real,
    F: VectorFunction<R> + ?Sized,
{
    let k = x.len();
    let one = <R as Scalar>::one();
    let zero = <R as Scalar>::zero();
    let mut buf = super::gradient::constants::<R, C>(x);
    let mut entries: Vec<R> = Vec::new();
    let mut values: Vec<R> = Vec::new();
    let mut rows = 0;

    for p in 0..pass_count(k, n) {
        let seeded = p * n..((p + 1) * n).min(k);
        for (lane, i) in seeded.clone().enumerate() {
            buf[i].partials[lane] = one;
        }
        let y = f.eval(&buf);
        if p == 0 {
            rows = y.len();
            entries = vec![zero; rows * k];
            values = y.iter().map(|d| d.value).collect();
        } else if y.len() != rows {
            return Err(Error::InconsistentOutput {
                expected: rows,
                found: y.len(),
            });
        }
        for (lane, j) in seeded.enumerate() {
            for (i, yi) in y.iter().enumerate() {
                entries[i * k + j] = yi.partials[lane];
            }
            buf[j].partials[lane] = zero;
        }
    }

    Ok(JacobianResult {
        rows,
        cols: k,
        entries,
        values,
    })
}
