#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use num_complex::Complex64;

use super::grid::SampledSignal;
use super::quadrature::{QuadratureRule, PANEL_NODES};
use crate::alpha::AlphaContext;
use crate::error::{Error, Result};

/// Literal left-endpoint sum `(1/Γ(1+α)) Σ f(t_j)(t_{j+1}−t_j)^α` over the
/// signal's own grid. No limit is taken; for α < 1 the value grows with the
/// number of cells.
pub fn lf_integral_riemann(ctx: &AlphaContext, f: &SampledSignal) -> Complex64 {
    let grid = f.grid();
    let p = grid.points();
    let v = f.values();
    let sum: Complex64 = match grid.step() {
        Some(h) => v[..v.len() - 1].iter().sum::<Complex64>() * ctx.pow(h),
        None => p
            .windows(2)
            .zip(v)
            .map(|(w, &fj)| fj * ctx.pow(w[1] - w[0]))
            .sum(),
    };
    sum / ctx.gamma_1p()
}

/// `Σ w_i f(x_i)` over a rule.
pub fn lf_integral_matched(
    rule: &QuadratureRule,
    f: impl FnMut(f64) -> Result<Complex64>,
) -> Result<Complex64> {
    rule.try_integrate(f)
}

/// Matched integral of a sampled signal through its cubic interpolant.
pub fn lf_integral_matched_sampled(rule: &QuadratureRule, f: &SampledSignal) -> Result<Complex64> {
    rule.try_integrate(|x| f.interpolate(x))
}

/// Options for whole-line integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineOptions {
    /// Approximate node count per half-line.
    pub nodes: usize,
    /// Bound on `∫|f|(dx)^α` above which the result carries a warning.
    pub bound: f64,
}

impl Default for LineOptions {
    fn default() -> Self {
        Self {
            nodes: 4096,
            bound: 1e3,
        }
    }
}

/// A whole-line integral with its integrability diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineIntegral {
    pub value: Complex64,
    /// `∫|f|(dx)^α` with the same rule.
    pub abs_integral: f64,
    /// `abs_integral` exceeded the configured bound.
    pub warning: bool,
}

/// Composite matched rule for `∫_lo^hi`, split at 0 when `lo < 0 < hi`:
/// each side is a half-line rule anchored at 0, the negative side evaluated
/// at reflected nodes. Intervals on one side of 0 are anchored at the end
/// nearer to 0. Points and weights are flattened into one list.
#[derive(Debug, Clone, PartialEq)]
pub struct LineRule {
    points: Vec<f64>,
    weights: Vec<f64>,
}

impl LineRule {
    pub fn new(ctx: &AlphaContext, lo: f64, hi: f64, nodes: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::NonFinite(0));
        }
        if lo > hi {
            return Err(Error::InvalidParameter("line rule needs lo ≤ hi"));
        }
        let mut points = Vec::new();
        let mut weights = Vec::new();
        let mut add = |rule: QuadratureRule, reflect: bool| {
            for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
                points.push(if reflect { -x } else { x });
                weights.push(w);
            }
        };
        if lo >= 0.0 {
            add(
                QuadratureRule::composite_matched(ctx, lo, hi, nodes)?,
                false,
            );
        } else if hi <= 0.0 {
            add(
                QuadratureRule::composite_matched(ctx, -hi, -lo, nodes)?,
                true,
            );
        } else {
            add(
                QuadratureRule::composite_matched(ctx, 0.0, hi, nodes)?,
                false,
            );
            add(
                QuadratureRule::composite_matched(ctx, 0.0, -lo, nodes)?,
                true,
            );
        }
        Ok(Self { points, weights })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Integrate precomputed values at [`Self::points`].
    pub fn sum(&self, values: &[Complex64]) -> Complex64 {
        values.iter().zip(&self.weights).map(|(v, w)| v * w).sum()
    }

    pub fn abs_sum(&self, values: &[Complex64]) -> f64 {
        values
            .iter()
            .zip(&self.weights)
            .map(|(v, w)| v.norm() * w)
            .sum()
    }
}

/// Node count for a composite rule over a length `x_max` that keeps each
/// panel within a few radians of the kernel `E_α(i^α c x^α ω^α)`.
pub fn nodes_for_oscillation(ctx: &AlphaContext, scale: f64, omega_max: f64, x_max: f64) -> usize {
    const RADIANS_PER_PANEL: f64 = 16.0;
    let phase = scale.powf(1.0 / ctx.alpha()) * omega_max.abs() * x_max.abs();
    let panels = (phase / RADIANS_PER_PANEL).ceil();
    if panels.is_finite() && panels < 1e7 {
        panels as usize * PANEL_NODES
    } else {
        usize::MAX / 2
    }
}

/// `∫_{−X}^{X} f (dx)^α` as `∫_0^X f(x) + ∫_0^X f(−x)`, each half a
/// matched integral anchored at 0.
pub fn lf_integral_line(
    ctx: &AlphaContext,
    f: impl FnMut(f64) -> Result<Complex64>,
    truncation: f64,
    opts: &LineOptions,
) -> Result<LineIntegral> {
    if !(truncation > 0.0) {
        return Err(Error::InvalidParameter("truncation must be positive"));
    }
    lf_integral_span(ctx, f, -truncation, truncation, opts)
}

/// [`lf_integral_line`] over an arbitrary `[lo, hi]`.
pub fn lf_integral_span(
    ctx: &AlphaContext,
    mut f: impl FnMut(f64) -> Result<Complex64>,
    lo: f64,
    hi: f64,
    opts: &LineOptions,
) -> Result<LineIntegral> {
    let rule = LineRule::new(ctx, lo, hi, opts.nodes)?;
    let values = rule
        .points()
        .iter()
        .map(|&x| f(x))
        .collect::<Result<Vec<_>>>()?;
    let abs_integral = rule.abs_sum(&values);
    Ok(LineIntegral {
        value: rule.sum(&values),
        abs_integral,
        warning: abs_integral > opts.bound,
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
    fn riemann_examples() {
        let c = ctx(0.5);
        let g = Grid::uniform(0.0, 1.0, 101).unwrap();
        let one =
            SampledSignal::from_fn(g, SupportHint::Interval, |_| Complex64::new(1.0, 0.0)).unwrap();
        let v = lf_integral_riemann(&c, &one);
        assert!((v.re - 11.283_791_670_955_125).abs() < 1e-12);
        let c1 = ctx(1.0);
        assert!((lf_integral_riemann(&c1, &one).re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn odd_integrand_vanishes() {
        for a in [0.5, 1.0] {
            let r = lf_integral_line(
                &ctx(a),
                |x| Ok(Complex64::new(x * (-x * x).exp(), 0.0)),
                5.0,
                &LineOptions::default(),
            )
            .unwrap();
            assert!(r.value.norm() < 1e-15);
        }
    }

    #[test]
    fn classical_two_sided_exponential() {
        let r = lf_integral_line(
            &ctx(1.0),
            |x: f64| Ok(Complex64::new((-x.abs()).exp(), 0.0)),
            40.0,
            &LineOptions::default(),
        )
        .unwrap();
        assert!((r.value.re - 2.0 * (1.0 - (-40f64).exp())).abs() < 1e-12);
        assert!(!r.warning);
    }

    #[test]
    fn warning_on_large_mass() {
        let opts = LineOptions {
            nodes: 256,
            bound: 10.0,
        };
        let r = lf_integral_line(&ctx(0.7), |_| Ok(Complex64::new(5.0, 0.0)), 40.0, &opts).unwrap();
        assert!(r.warning);
    }
}
