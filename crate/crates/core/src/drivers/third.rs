use alloc::vec;
use alloc::vec::Vec;

use super::{pass_count, with_nested_width, ThirdOrderResult, MAX_THIRD_ORDER_DIM};
use crate::dual::Dual;
use crate::error::Error;
use crate::function::ScalarFunction;
use crate::scalar::{Real, Scalar};

type Triple<R, const CM: usize, const CN: usize, const CL: usize> = Dual<Dual<Dual<R, CL>, CN>, CM>;

/// All third partial derivatives of `f` at `x` using duals nested three
/// deep, in `⌈k/M⌉·⌈k/N⌉·⌈k/L⌉` passes.
///
/// Only for small inputs: `k` may not exceed [`MAX_THIRD_ORDER_DIM`].
pub fn third_order_tensor<R, F>(
    f: &F,
    x: &[R],
    outer_chunk: usize,
    middle_chunk: usize,
    inner_chunk: usize,
) -> Result<ThirdOrderResult<R>, Error>
where
    R: Real,
    F: ScalarFunction<R> + ?Sized,
{
    let k = x.len();
    if k == 0 {
        return Err(Error::EmptyInput);
    }
    if k > MAX_THIRD_ORDER_DIM {
        return Err(Error::DimensionTooLarge {
            k,
            max: MAX_THIRD_ORDER_DIM,
        });
    }
    if outer_chunk == 0 || middle_chunk == 0 || inner_chunk == 0 {
        return Err(Error::ZeroChunk);
    }
    let (m, n, l) = (outer_chunk.min(k), middle_chunk.min(k), inner_chunk.min(k));
    with_nested_width!(m, MAX_THIRD_ORDER_DIM, CM => {
        with_nested_width!(n, MAX_THIRD_ORDER_DIM, CN => {
            with_nested_width!(l, MAX_THIRD_ORDER_DIM, CL => {
                Ok(third_lanes::<R, F, CM, CN, CL>(f, x, m, n, l))
            })
        })
    })
}

fn third_lanes<R, F, const CM: usize, const CN: usize, const CL: usize>(
    f: &F,
    x: &[R],
    m: usize,
    n: usize,
    l: usize,
) -> ThirdOrderResult<R>
where
    R: Real,
    F: ScalarFunction<R> + ?Sized,
{
    let k = x.len();
    let one = <R as Scalar>::one();
    let zero = <R as Scalar>::zero();
    let mut buf: Vec<Triple<R, CM, CN, CL>> = x
        .iter()
        .map(|&v| Dual::constant(Dual::constant(Dual::constant(v))))
        .collect();
    let mut entries = vec![zero; k * k * k];
    let block = |b: usize, size: usize| b * size..((b + 1) * size).min(k);

    for po in 0..pass_count(k, m) {
        let outer = block(po, m);
        for (c, h) in outer.clone().enumerate() {
            buf[h].partials[c].value.value = one;
        }
        for pm in 0..pass_count(k, n) {
            let middle = block(pm, n);
            for (b, i) in middle.clone().enumerate() {
                buf[i].value.partials[b].value = one;
            }
            for pi in 0..pass_count(k, l) {
                let inner = block(pi, l);
                for (a, j) in inner.clone().enumerate() {
                    buf[j].value.value.partials[a] = one;
                }
                let y = f.eval(&buf);
                for (c, h) in outer.clone().enumerate() {
                    for (b, i) in middle.clone().enumerate() {
                        for (a, j) in inner.clone().enumerate() {
                            entries[(h * k + i) * k + j] = y.partials[c].partials[b].partials[a];
                        }
                    }
                }
                for (a, j) in inner.enumerate() {
                    buf[j].value.value.partials[a] = zero;
                }
            }
            for (b, i) in middle.enumerate() {
                buf[i].value.partials[b].value = zero;
            }
        }
        for (c, h) in outer.enumerate() {
            buf[h].partials[c].value.value = zero;
        }
    }

    ThirdOrderResult { k, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Cube;

    impl<R: Real> ScalarFunction<R> for Cube {
        fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> S {
            x[0] * x[0] * x[0]
        }
    }

    struct Sin;

    impl<R: Real> ScalarFunction<R> for Sin {
        fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> S {
            x[0].sin()
        }
    }

    #[test]
    fn single_variable() {
        let t = third_order_tensor(&Cube, &[0.37], 1, 1, 1).unwrap();
        assert_eq!(t.entries, vec![6.0]);
        let t = third_order_tensor(&Sin, &[1.0], 1, 1, 1).unwrap();
        assert_eq!(t.entries, vec![-0.5403023058681398]);
    }

    #[test]
    fn dimension_bound() {
        assert_eq!(
            third_order_tensor(&Cube, &[0.0; 9], 1, 1, 1),
            Err(Error::DimensionTooLarge { k: 9, max: 8 })
        );
        assert_eq!(
            third_order_tensor(&Cube, &[] as &[f64], 1, 1, 1),
            Err(Error::EmptyInput)
        );
    }
}
