use std::fmt;

use chunkdiff::testfns::{
    ackley, ackley_grad_analytic, fd_gradient, rosenbrock, rosenbrock_grad_analytic, Ackley, AckleyParams,
    Rosenbrock,
};
use chunkdiff::{gradient, ChunkConfig, Counting, ScalarFunction};

use crate::error::BenchError;
use crate::inputs::{sample_input, Function};

pub const FD_STEP: f64 = 1e-6;
/// AD and the closed form differ only by rounding.
pub const AD_ANALYTIC_TOL: f64 = 1e-10;

/// `|a − b| / max(|a|, |b|, 1)`.
pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentError {
    pub index: usize,
    pub ad: f64,
    pub analytic: f64,
    pub fd: f64,
    pub ad_vs_analytic: f64,
    pub ad_vs_fd: f64,
    pub analytic_vs_fd: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub function: Function,
    pub k: usize,
    pub chunk: usize,
    pub tol: f64,
    pub f_value: f64,
    pub max_abs_gradient: f64,
    pub max_ad_vs_analytic: f64,
    pub max_ad_vs_fd: f64,
    pub max_analytic_vs_fd: f64,
    /// Lanes whose value differs bitwise from the `N = 1` gradient.
    pub chunk_mismatches: Vec<usize>,
    pub evaluations: usize,
    pub expected_evaluations: usize,
    /// Components exceeding `tol`, or [`AD_ANALYTIC_TOL`] for AD vs analytic.
    pub offending: Vec<ComponentError>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.offending.is_empty() && self.chunk_mismatches.is_empty() && self.evaluations == self.expected_evaluations
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "function:           {}", self.function)?;
        writeln!(f, "k:                  {}", self.k)?;
        writeln!(f, "chunk:              {}", self.chunk)?;
        writeln!(f, "f(x):               {:?}", self.f_value)?;
        writeln!(f, "max |grad|:         {:?}", self.max_abs_gradient)?;
        writeln!(f, "max rel ad/analytic: {:e}", self.max_ad_vs_analytic)?;
        writeln!(f, "max rel ad/fd:       {:e}", self.max_ad_vs_fd)?;
        writeln!(f, "max rel analytic/fd: {:e}", self.max_analytic_vs_fd)?;
        writeln!(f, "chunk invariance:   {} mismatched lanes", self.chunk_mismatches.len())?;
        writeln!(f, "evaluations:        {} (expected {})", self.evaluations, self.expected_evaluations)?;
        for c in &self.offending {
            writeln!(
                f,
                "  component {}: ad={:?} analytic={:?} fd={:?} (ad/analytic {:e}, ad/fd {:e}, analytic/fd {:e})",
                c.index, c.ad, c.analytic, c.fd, c.ad_vs_analytic, c.ad_vs_fd, c.analytic_vs_fd
            )?;
        }
        write!(f, "result:             {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Verifies at a seeded random input of length `k`.
pub fn verify(function: Function, k: usize, chunk: usize, seed: u64, tol: f64) -> Result<VerifyReport, BenchError> {
    function.check_size(k)?;
    verify_at(function, &sample_input(function, k, seed), chunk, tol)
}

/// Compares AD, closed-form and central-difference gradients at `x`, checks
/// that the result does not depend on the chunk size and that the driver made
/// exactly `⌈k/N⌉` passes.
pub fn verify_at(function: Function, x: &[f64], chunk: usize, tol: f64) -> Result<VerifyReport, BenchError> {
    function.check_size(x.len())?;
    if !(tol > 0.0) {
        return Err(BenchError::Usage(format!("tolerance must be positive, got {tol}")));
    }
    match function {
        Function::Rosenbrock => run(
            function,
            &Rosenbrock,
            x,
            chunk,
            tol,
            rosenbrock_grad_analytic(x)?,
            |v: &[f64]| rosenbrock(v).expect("length checked"),
        ),
        Function::Ackley => {
            let p = AckleyParams::default();
            run(
                function,
                &Ackley::new(p),
                x,
                chunk,
                tol,
                ackley_grad_analytic(x, &p)?,
                |v: &[f64]| ackley(v, &p).expect("length checked"),
            )
        }
    }
}

fn run<F, P>(
    function: Function,
    f: &F,
    x: &[f64],
    chunk: usize,
    tol: f64,
    analytic: Vec<f64>,
    plain: P,
) -> Result<VerifyReport, BenchError>
where
    F: ScalarFunction<f64>,
    P: Fn(&[f64]) -> f64,
{
    let k = x.len();
    let cfg = ChunkConfig::new(chunk);
    let n = cfg.effective_chunk(k)?;
    let counted = Counting::new(f);
    let ad = gradient(&counted, x, &cfg)?;
    let reference = gradient(f, x, &ChunkConfig::new(1))?;
    let fd = fd_gradient(plain, x, FD_STEP)?;

    let chunk_mismatches = (0..k)
        .filter(|&i| ad.values[i].to_bits() != reference.values[i].to_bits())
        .collect();

    let mut report = VerifyReport {
        function,
        k,
        chunk,
        tol,
        f_value: ad.f_value,
        max_abs_gradient: ad.values.iter().fold(0.0, |m, v| m.max(v.abs())),
        max_ad_vs_analytic: 0.0,
        max_ad_vs_fd: 0.0,
        max_analytic_vs_fd: 0.0,
        chunk_mismatches,
        evaluations: counted.count(),
        expected_evaluations: k.div_ceil(n),
        offending: Vec::new(),
    };
    for i in 0..k {
        let c = ComponentError {
            index: i,
            ad: ad.values[i],
            analytic: analytic[i],
            fd: fd[i],
            ad_vs_analytic: rel_err(ad.values[i], analytic[i]),
            ad_vs_fd: rel_err(ad.values[i], fd[i]),
            analytic_vs_fd: rel_err(analytic[i], fd[i]),
        };
        report.max_ad_vs_analytic = report.max_ad_vs_analytic.max(c.ad_vs_analytic);
        report.max_ad_vs_fd = report.max_ad_vs_fd.max(c.ad_vs_fd);
        report.max_analytic_vs_fd = report.max_analytic_vs_fd.max(c.analytic_vs_fd);
        // negated comparisons so NaN counts as a failure
        let bad = !(c.ad_vs_analytic <= AD_ANALYTIC_TOL && c.ad_vs_fd <= tol && c.analytic_vs_fd <= tol);
        if bad {
            report.offending.push(c);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock_at_ones_is_exactly_zero() {
        let r = verify_at(Function::Rosenbrock, &[1.0; 10], 3, 1e-5).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.max_abs_gradient, 0.0);
        assert_eq!(r.f_value, 0.0);
        assert_eq!(r.evaluations, 4);
    }

    #[test]
    fn ackley_origin_is_rejected() {
        let e = verify_at(Function::Ackley, &[0.0; 3], 1, 1e-5).unwrap_err();
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn tiny_tolerance_lists_components() {
        let r = verify(Function::Ackley, 20, 4, 1, 1e-30).unwrap();
        assert!(!r.passed());
        assert!(!r.offending.is_empty());
        assert!(r.to_string().contains("component"));
    }
}
