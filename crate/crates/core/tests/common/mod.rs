//! Invariant checks shared by the property suite and the acceptance run.
//!
//! Each check returns `Err(description)` on violation so it can be driven
//! either by proptest or by a seeded sampler.

#![allow(dead_code)]

use chunkdiff::prelude::*;
use chunkdiff::testfns::{ackley, ackley_grad_analytic, fd_gradient, rosenbrock, rosenbrock_grad_analytic};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

/// `|a − b| / max(|a|, |b|, 1)`: relative for large magnitudes, absolute
/// near zero.
pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

pub fn ulps(a: f64, b: f64) -> u64 {
    if a == b {
        return 0;
    }
    if a.is_nan() || b.is_nan() || a.signum() != b.signum() {
        return u64::MAX;
    }
    a.to_bits().abs_diff(b.to_bits())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_vec(rng: &mut ChaCha8Rng, k: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..k).map(|_| rng.random_range(lo..hi)).collect()
}

/// An elementary rule with its independently written derivative and a
/// domain on which both are finite.
#[derive(Clone, Copy)]
pub struct Rule {
    pub name: &'static str,
    pub apply: fn(Dual<f64, 3>) -> Dual<f64, 3>,
    pub plain: fn(f64) -> f64,
    pub deriv: fn(f64) -> f64,
    pub domain: (f64, f64),
}

pub fn rules() -> Vec<Rule> {
    vec![
        Rule { name: "neg", apply: |d| -d, plain: |x| -x, deriv: |_| -1.0, domain: (-10.0, 10.0) },
        Rule { name: "sin", apply: |d| d.sin(), plain: f64::sin, deriv: f64::cos, domain: (-10.0, 10.0) },
        Rule { name: "cos", apply: |d| d.cos(), plain: f64::cos, deriv: |x| -x.sin(), domain: (-10.0, 10.0) },
        Rule {
            name: "tan",
            apply: |d| d.tan(),
            plain: f64::tan,
            deriv: |x| 1.0 + x.tan() * x.tan(),
            domain: (-1.2, 1.2),
        },
        Rule { name: "exp", apply: |d| d.exp(), plain: f64::exp, deriv: f64::exp, domain: (-5.0, 5.0) },
        Rule { name: "log", apply: |d| d.ln(), plain: f64::ln, deriv: |x| 1.0 / x, domain: (0.1, 10.0) },
        Rule {
            name: "sqrt",
            apply: |d| d.sqrt(),
            plain: f64::sqrt,
            deriv: |x| 1.0 / (2.0 * x.sqrt()),
            domain: (0.1, 10.0),
        },
        Rule {
            name: "abs",
            apply: |d| d.abs(),
            plain: f64::abs,
            deriv: |x| if x > 0.0 { 1.0 } else if x < 0.0 { -1.0 } else { 0.0 },
            domain: (-10.0, 10.0),
        },
        Rule { name: "square", apply: |d| d.square(), plain: |x| x * x, deriv: |x| 2.0 * x, domain: (-10.0, 10.0) },
        Rule {
            name: "powi3",
            apply: |d| d.powi(3),
            plain: |x| x.powi(3),
            deriv: |x| 3.0 * x.powi(2),
            domain: (-5.0, 5.0),
        },
        Rule {
            name: "powf1.7",
            apply: |d| d.powf(1.7),
            plain: |x| x.powf(1.7),
            deriv: |x| 1.7 * x.powf(1.7 - 1.0),
            domain: (0.1, 5.0),
        },
    ]
}

fn dual3(v: f64, p: [f64; 3]) -> Dual<f64, 3> {
    Dual::new(v, Partials::new(p))
}

/// Constants stay constant and the value channel equals the plain rule.
pub fn check_constants_stay_constant(rule: &Rule, x: f64) -> Check {
    let (v, p) = (rule.apply)(Dual::constant(x)).into_parts();
    let plain = (rule.plain)(x);
    if v.to_bits() != plain.to_bits() && !(v.is_nan() && plain.is_nan()) {
        return Err(format!("{}: value {v} != plain {plain} at {x}", rule.name));
    }
    if p.iter().any(|&q| q != 0.0) {
        return Err(format!("{}: constant produced partials {p:?} at {x}", rule.name));
    }
    Ok(())
}

/// Partials equal `f'(x)·p` exactly, lane by lane.
pub fn check_linearity(rule: &Rule, x: f64, p: [f64; 3]) -> Check {
    let (_, got) = (rule.apply)(dual3(x, p)).into_parts();
    let d = (rule.deriv)(x);
    for lane in 0..3 {
        let want = p[lane] * d;
        if got[lane].to_bits() != want.to_bits() && !(got[lane] == 0.0 && want == 0.0) {
            return Err(format!(
                "{}: lane {lane} = {} but f'(x)·p = {want} at x={x}",
                rule.name, got[lane]
            ));
        }
    }
    Ok(())
}

/// `f(g(d))` partials within 4 ulps of `f'(g(x))·g'(x)·p`.
pub fn check_chain_rule(f: &Rule, g: &Rule, x: f64, p: [f64; 3]) -> Check {
    let (_, got) = (f.apply)((g.apply)(dual3(x, p))).into_parts();
    let gx = (g.plain)(x);
    let factor = (f.deriv)(gx) * (g.deriv)(x);
    for lane in 0..3 {
        let want = factor * p[lane];
        if !(got[lane] == want || ulps(got[lane], want) <= 4) {
            return Err(format!(
                "{}∘{}: lane {lane} {} vs {want} ({} ulps) at x={x}",
                f.name,
                g.name,
                got[lane],
                ulps(got[lane], want)
            ));
        }
    }
    Ok(())
}

/// `div(mul(a, b), b)` reproduces `a`.
///
/// The tolerance is relative to the magnitude of the terms that cancel in
/// the quotient rule, `max(|a'|, |a·b'/b|)`.
pub fn check_mul_div_roundtrip(a: Dual<f64, 3>, b: Dual<f64, 3>) -> Check {
    if b.value.abs() <= 1e-6 {
        return Ok(());
    }
    let (v, p) = ((a * b) / b).into_parts();
    let vscale = a.value.abs().max(f64::MIN_POSITIVE);
    if (v - a.value).abs() > 1e-12 * vscale {
        return Err(format!("value {v} vs {}", a.value));
    }
    for lane in 0..3 {
        let scale = a.partials[lane]
            .abs()
            .max((a.value * b.partials[lane] / b.value).abs())
            .max(f64::MIN_POSITIVE);
        if (p[lane] - a.partials[lane]).abs() > 1e-12 * scale {
            return Err(format!("lane {lane}: {} vs {}", p[lane], a.partials[lane]));
        }
    }
    Ok(())
}

/// Nested second derivative of sin equals `−sin(x)` within 2 ulps.
pub fn check_sin_second_derivative(x: f64) -> Check {
    let got = second_derivative(|d| d.sin(), x);
    let want = -x.sin();
    if ulps(got, want) > 2 {
        return Err(format!("f''({x}) = {got}, −sin = {want}"));
    }
    Ok(())
}

/// Dual derivative within 1e-5 of a central difference with step 1e-6.
pub fn check_fd_agreement(rule: &Rule, x: f64) -> Check {
    let h = 1e-6;
    let fd = ((rule.plain)(x + h) - (rule.plain)(x - h)) / ((x + h) - (x - h));
    let ad = (rule.apply)(dual3(x, [1.0, 0.0, 0.0])).partials[0];
    if rel_err(ad, fd) > 1e-5 {
        return Err(format!("{}: AD {ad} vs FD {fd} at {x}", rule.name));
    }
    Ok(())
}

/// A composite expression exercising every rule on in-domain values.
pub fn composite<S: Scalar<Real = f64>>(x: S) -> S {
    let a = x.sin() * x.cos() + x.square().mul_real(0.5);
    let b = (x.square().add_real(1.0)).ln() + (x.square().add_real(0.25)).sqrt();
    let c = (x.mul_real(0.3)).tan() - x.abs() / (a.abs().add_real(2.0));
    let d = x.mul_real(0.2).exp().powf(1.3) + x.powi(2);
    (a * b - c) / d.add_real(1.0)
}

/// Lane 0 is unaffected by the contents of lanes 1..4.
pub fn check_lane_independence(x: f64, others: [f64; 3]) -> Check {
    let wide = composite(Dual::<f64, 4>::new(x, Partials::new([1.0, others[0], others[1], others[2]])));
    let narrow = composite(Dual::<f64, 1>::new(x, Partials::new([1.0])));
    if wide.partials[0].to_bits() != narrow.partials[0].to_bits() {
        return Err(format!(
            "lane 0 {} vs isolated {} at {x}",
            wide.partials[0], narrow.partials[0]
        ));
    }
    if wide.value.to_bits() != narrow.value.to_bits() {
        return Err("value channel depends on lanes".into());
    }
    Ok(())
}

/// Mixed target over every elementary rule, for driver tests.
pub struct Mixed;

impl<R: Real> ScalarFunction<R> for Mixed {
    fn eval<S: Scalar<Real = R>>(&self, x: &[S]) -> S {
        let mut acc = S::zero();
        for (i, w) in x.windows(2).enumerate() {
            let t = w[0] * w[1].sin() + (w[0].square().add_real(R::from_f64_lossy(1.0))).ln();
            let u = (w[1].square().add_real(R::from_f64_lossy(0.5))).sqrt() / w[0].cos().add_real(R::from_f64_lossy(2.0));
            acc += t - u + w[0].mul_real(R::from_f64_lossy(0.1 * i as f64)).exp();
        }
        if x.len() == 1 {
            acc = x[0].sin() * x[0].exp();
        }
        acc
    }
}

/// Gradients for all `n` in `chunks` are bitwise equal to the single-pass
/// gradient.
pub fn check_chunk_invariance<F: ScalarFunction<f64>>(f: &F, x: &[f64], chunks: &[usize]) -> Check {
    let k = x.len();
    let reference = gradient(f, x, &ChunkConfig::new(k)).map_err(|e| e.to_string())?;
    for &n in chunks {
        let g = gradient(f, x, &ChunkConfig::new(n)).map_err(|e| e.to_string())?;
        let same = g
            .values
            .iter()
            .zip(&reference.values)
            .all(|(a, b)| a.to_bits() == b.to_bits());
        if !same || g.f_value.to_bits() != reference.f_value.to_bits() {
            return Err(format!("k={k} N={n} differs from N={k}"));
        }
    }
    Ok(())
}

/// Exactly `⌈k/N⌉` evaluations per gradient call.
pub fn check_pass_count(k: usize, n: usize) -> Check {
    let f = Counting::new(Mixed);
    let x: Vec<f64> = (0..k).map(|i| 0.1 * i as f64 - 0.4).collect();
    gradient(&f, &x, &ChunkConfig::new(n)).map_err(|e| e.to_string())?;
    let want = k.div_ceil(n);
    if f.count() != want {
        return Err(format!("k={k} N={n}: {} passes, expected {want}", f.count()));
    }
    Ok(())
}

pub struct OracleErrors {
    pub ad_vs_analytic: f64,
    pub ad_vs_fd: f64,
    pub analytic_vs_fd: f64,
}

fn max_rel(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| rel_err(*x, *y)).fold(0.0, f64::max)
}

/// Three-way gradient comparison for one test function at `x`.
pub fn oracle_errors(function: &str, x: &[f64], chunk: usize) -> OracleErrors {
    let cfg = ChunkConfig::new(chunk);
    let (ad, analytic, fd) = match function {
        "rosenbrock" => (
            gradient(&Rosenbrock, x, &cfg).unwrap().values,
            rosenbrock_grad_analytic(x).unwrap(),
            fd_gradient(|v: &[f64]| rosenbrock(v).unwrap(), x, 1e-6).unwrap(),
        ),
        "ackley" => {
            let p = AckleyParams::default();
            (
                gradient(&Ackley::new(p), x, &cfg).unwrap().values,
                ackley_grad_analytic(x, &p).unwrap(),
                fd_gradient(|v: &[f64]| ackley(v, &p).unwrap(), x, 1e-6).unwrap(),
            )
        }
        other => panic!("unknown function {other}"),
    };
    OracleErrors {
        ad_vs_analytic: max_rel(&ad, &analytic),
        ad_vs_fd: max_rel(&ad, &fd),
        analytic_vs_fd: max_rel(&analytic, &fd),
    }
}

pub fn rosenbrock_hessian_analytic(x: &[f64]) -> Vec<f64> {
    let k = x.len();
    let mut h = vec![0.0; k * k];
    for i in 0..k {
        if i + 1 < k {
            h[i * k + i] += 1200.0 * x[i] * x[i] - 400.0 * x[i + 1] + 2.0;
            h[i * k + i + 1] = -400.0 * x[i];
            h[(i + 1) * k + i] = -400.0 * x[i];
        }
        if i > 0 {
            h[i * k + i] += 200.0;
        }
    }
    h
}

/// Hessian columns against central differences of the AD gradient.
pub fn check_hessian_vs_fd<F: ScalarFunction<f64>>(f: &F, x: &[f64]) -> Check {
    let k = x.len();
    let h = hessian(f, x, 3, 2).map_err(|e| e.to_string())?;
    let step = 1e-6;
    for j in 0..k {
        let mut hi = x.to_vec();
        let mut lo = x.to_vec();
        hi[j] += step;
        lo[j] -= step;
        let gh = gradient(f, &hi, &ChunkConfig::new(k)).unwrap().values;
        let gl = gradient(f, &lo, &ChunkConfig::new(k)).unwrap().values;
        for i in 0..k {
            let fd = (gh[i] - gl[i]) / (hi[j] - lo[j]);
            if rel_err(h.get(i, j), fd) > 1e-4 {
                return Err(format!("H[{i}][{j}] = {} vs FD {fd}", h.get(i, j)));
            }
        }
    }
    Ok(())
}

pub fn check_hessian_symmetry<F: ScalarFunction<f64>>(f: &F, x: &[f64]) -> Check {
    let h = hessian(f, x, 2, 3).map_err(|e| e.to_string())?;
    let a = h.asymmetry();
    if a > 1e-8 {
        return Err(format!("asymmetry {a:e} at k={}", x.len()));
    }
    Ok(())
}

/// Serial and threaded gradients are bitwise identical for 1, 2 and 4 threads.
pub fn check_thread_determinism<F: ScalarFunction<f64> + Sync>(f: &F, x: &[f64], n: usize) -> Check {
    let serial = gradient(f, x, &ChunkConfig::new(n)).unwrap();
    for t in [1, 2, 4] {
        let par = gradient_threaded(f, x, &ChunkConfig::new(n).with_threads(t)).unwrap();
        let same = par
            .values
            .iter()
            .zip(&serial.values)
            .all(|(a, b)| a.to_bits() == b.to_bits());
        if !same {
            return Err(format!("threads={t} differs from serial"));
        }
    }
    Ok(())
}
