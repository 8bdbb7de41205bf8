#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use num_complex::Complex64;

use super::grid::SampledSignal;
use super::quadrature::build_measure_matched_rule;
use crate::alpha::AlphaContext;
use crate::error::{Error, Result};
use crate::formal::{definite_integral, FormalExpr};
use crate::special::MlEvaluator;

/// Ratio between the two steps of the scaling probe.
pub const PROBE_RATIO: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeEstimate {
    /// `Γ(1+α)(f(x₀+h) − f(x₀))/h^α`.
    pub value: Complex64,
    /// Slope of `log|quotient|` against `log h` between `h` and
    /// `h/PROBE_RATIO`; `None` when either quotient vanishes.
    pub scaling_exponent: Option<f64>,
}

/// Finite-`h` local fractional difference quotient.
pub fn lf_derivative_numeric(
    ctx: &AlphaContext,
    mut f: impl FnMut(f64) -> Complex64,
    x0: f64,
    h: f64,
) -> Result<DerivativeEstimate> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParameter("step must be positive"));
    }
    let f0 = f(x0);
    let mut quotient = |h: f64| (f(x0 + h) - f0) * (ctx.gamma_1p() / ctx.pow(h));
    let q1 = quotient(h);
    let h2 = h / PROBE_RATIO;
    let q2 = quotient(h2);
    let scaling_exponent = (q1.norm() > 0.0 && q2.norm() > 0.0)
        .then(|| (q1.norm() / q2.norm()).ln() / PROBE_RATIO.ln());
    Ok(DerivativeEstimate {
        value: q1,
        scaling_exponent,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolderEstimate {
    pub alpha_hat: f64,
    /// R² of the log-log fit.
    pub confidence: f64,
}

/// Slope of `log max_{|i−j|=s}|f_i − f_j|` against `log s` over dyadic
/// scales, clipped to `(0, 1]`.
pub fn estimate_holder_exponent(f: &SampledSignal) -> Result<HolderEstimate> {
    let n = f.grid().len();
    if n < 64 {
        return Err(Error::GridTooSmall(n));
    }
    let h = f.grid().step().ok_or(Error::InvalidParameter(
        "Hölder estimate needs a uniform grid",
    ))?;
    let v = f.values();
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let mut s = 1;
    while s <= n / 4 {
        let osc = (0..n - s)
            .map(|i| (v[i + s] - v[i]).norm())
            .fold(0.0, f64::max);
        if osc > 0.0 {
            pts.push(((s as f64 * h).ln(), osc.ln()));
        }
        s *= 2;
    }
    if pts.len() < 2 {
        return Err(Error::DegenerateSignal);
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let confidence = if syy > 0.0 {
        (sxy * sxy / (sxx * syy)).min(1.0)
    } else {
        1.0
    };
    Ok(HolderEstimate {
        alpha_hat: slope.clamp(f64::MIN_POSITIVE, 1.0),
        confidence,
    })
}

/// Settings for [`reconciliation_report`].
#[derive(Debug, Clone, PartialEq)]
pub struct ReconcileOptions {
    /// Rates of the exponential-law probe `E(a x^α)E(b x^α)` vs `E((a+b)x^α)`.
    pub a: Complex64,
    pub b: Complex64,
    /// Points (offsets from the anchor) at which the law is probed.
    pub probe: Vec<f64>,
    /// Integration length from the anchor for the quadrature gap.
    pub span: f64,
    /// Gauss rule size.
    pub nodes: usize,
}

impl Default for ReconcileOptions {
    fn default() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(1.0, 0.0),
            probe: (0..=64).map(|i| i as f64 / 16.0).collect(),
            span: 8.0,
            nodes: 32,
        }
    }
}

/// Where pointwise numerics and the formal layer part ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscrepancyReport {
    /// `max |E(a x^α)E(b x^α) − E((a+b)x^α)|` over the probe points.
    pub exponential_law_gap: f64,
    /// Probe point attaining the maximum.
    pub exponential_law_at: f64,
    /// `|matched quadrature − definite_integral|` over `[x₀, x₀+span]`.
    pub quadrature_gap: f64,
    pub quadrature_value: Complex64,
    pub formal_value: Complex64,
}

pub fn reconciliation_report(
    ctx: &AlphaContext,
    e: &FormalExpr,
    opts: &ReconcileOptions,
) -> Result<DiscrepancyReport> {
    let ml = MlEvaluator::new(ctx);
    let mut gap: f64 = 0.0;
    let mut at = 0.0;
    for &x in &opts.probe {
        let u = ctx.pow(x);
        let d =
            (ml.eval(opts.a * u)? * ml.eval(opts.b * u)? - ml.eval((opts.a + opts.b) * u)?).norm();
        if d > gap || (gap == 0.0 && at == 0.0) {
            gap = d;
            at = x;
        }
    }
    let lo = e.anchor();
    let hi = lo + opts.span;
    let rule = build_measure_matched_rule(ctx, lo, hi, opts.nodes)?;
    let quadrature_value = rule.try_integrate(|x| e.eval(ctx, x))?;
    let formal_value = definite_integral(ctx, e, lo, hi)?;
    Ok(DiscrepancyReport {
        exponential_law_gap: gap,
        exponential_law_at: at,
        quadrature_gap: (quadrature_value - formal_value).norm(),
        quadrature_value,
        formal_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Grid, SupportHint};

    fn ctx(a: f64) -> AlphaContext {
        AlphaContext::new(a).unwrap()
    }

    #[test]
    fn classical_quotient() {
        let d =
            lf_derivative_numeric(&ctx(1.0), |x| Complex64::new(x * x, 0.0), 1.0, 1e-6).unwrap();
        assert!((d.value.re - 2.000001).abs() < 1e-6);
    }

    #[test]
    fn quotient_vanishes_like_h_to_one_minus_alpha() {
        let d = lf_derivative_numeric(&ctx(0.5), |x| Complex64::new(x, 0.0), 1.0, 1e-2).unwrap();
        assert!((d.scaling_exponent.unwrap() - 0.5).abs() < 1e-9);
        let d = lf_derivative_numeric(&ctx(0.3), |_| Complex64::new(4.0, 0.0), 1.0, 1e-2).unwrap();
        assert_eq!(d.value, Complex64::new(0.0, 0.0));
        assert!(d.scaling_exponent.is_none());
    }

    fn sampled(f: impl Fn(f64) -> f64) -> SampledSignal {
        let g = Grid::uniform(0.0, 1.0, 1024).unwrap();
        SampledSignal::from_fn(g, SupportHint::Interval, |x| Complex64::new(f(x), 0.0)).unwrap()
    }

    #[test]
    fn holder_examples() {
        let lin = estimate_holder_exponent(&sampled(|x| x)).unwrap();
        assert!((0.95..=1.0).contains(&lin.alpha_hat));
        let root = estimate_holder_exponent(&sampled(f64::sqrt)).unwrap();
        assert!((0.45..=0.55).contains(&root.alpha_hat), "{root:?}");
        assert!(matches!(
            estimate_holder_exponent(&sampled(|_| 2.0)),
            Err(Error::DegenerateSignal)
        ));
    }

    #[test]
    fn exponential_law_gap() {
        let e = FormalExpr::causal(alloc::vec![crate::formal::FormalTerm::new(
            Complex64::new(1.0, 0.0),
            0,
            Complex64::new(-1.0, 0.0)
        )]);
        let opts = ReconcileOptions {
            probe: alloc::vec![1.0],
            ..ReconcileOptions::default()
        };
        let r1 = reconciliation_report(&ctx(1.0), &e, &opts).unwrap();
        assert!(r1.exponential_law_gap <= 1e-10);
        assert!(r1.quadrature_gap <= 1e-8);
        let r = reconciliation_report(&ctx(0.5), &e, &opts).unwrap();
        assert!(r.exponential_law_gap > 1.0);
        assert!(r.quadrature_gap <= 1e-8, "{r:?}");
    }
}
