#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::alpha::AlphaContext;
use crate::error::{Error, Result};
use crate::numeric::{nodes_for_oscillation, QuadratureRule};
use crate::special::MlEvaluator;

/// Coefficients `C_n`, `n = −N..=N`, of a fractal Fourier series on
/// `[−l, l]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    l: f64,
    n_max: usize,
    alpha: f64,
    gamma_1p: f64,
    coeffs: Vec<Complex64>,
}

impl SeriesCoefficients {
    pub fn half_period(&self) -> f64 {
        self.l
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// All `2N+1` coefficients, from `n = −N` upward.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn get(&self, n: i64) -> Option<Complex64> {
        let idx = n + self.n_max as i64;
        (idx >= 0)
            .then(|| self.coeffs.get(idx as usize).copied())
            .flatten()
    }

    /// `C_n^t = (2l)^α C_n / Γ(1+α)`.
    pub fn get_t(&self, n: i64) -> Option<Complex64> {
        let m = crate::alpha::pow_alpha(self.alpha, 2.0 * self.l) / self.gamma_1p;
        self.get(n).map(|c| c * m)
    }

    /// Keep only `|n| ≤ n_max`.
    pub fn truncated(&self, n_max: usize) -> Self {
        let n_max = n_max.min(self.n_max);
        let start = self.n_max - n_max;
        Self {
            n_max,
            coeffs: self.coeffs[start..start + 2 * n_max + 1].to_vec(),
            ..self.clone()
        }
    }
}

/// Settings for [`series_coefficients`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    /// Minimum node count over `[−l, l]`.
    pub nodes: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        Self { nodes: 2048 }
    }
}

/// `C_n = (1/(2l)^α) ∫_{−l}^{l} f(x) E_α(−π^α i^α (nx)^α / l^α) (dx)^α`.
///
/// The integral is one matched rule over `[−l, l]` anchored at `−l`, so that
/// `∫_{−l}^{l}(dx)^α = (2l)^α` and `f ≡ 1` gives `C_0 = 1`; `x = 0` is a
/// panel breakpoint. Negative `nx` uses the odd extension.
pub fn series_coefficients(
    ctx: &AlphaContext,
    mut f: impl FnMut(f64) -> Result<Complex64>,
    l: f64,
    n_max: usize,
    opts: &SeriesOptions,
) -> Result<SeriesCoefficients> {
    if !(l > 0.0 && l.is_finite()) {
        return Err(Error::InvalidParameter("half-period must be positive"));
    }
    let scale = ctx.pow(PI / l);
    let nodes = opts
        .nodes
        .max(nodes_for_oscillation(ctx, scale, n_max as f64, 2.0 * l))
        .min(1 << 20);
    let rule = QuadratureRule::composite_matched_with_kinks(ctx, -l, l, nodes, &[0.0])?;
    let norm = ctx.gamma_1p() / ctx.pow(2.0 * l);
    let fw: Vec<Complex64> = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .map(|(&x, &w)| f(x).map(|v| v * (w * norm)))
        .collect::<Result<_>>()?;
    let px: Vec<f64> = rule.nodes().iter().map(|&x| ctx.pow(x)).collect();
    let ml = MlEvaluator::new(ctx);
    let rot = -ctx.i_pow_alpha() * scale;
    let mut coeffs = Vec::with_capacity(2 * n_max + 1);
    for n in -(n_max as i64)..=(n_max as i64) {
        let pn = ctx.pow(n as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        for (&p, &v) in px.iter().zip(&fw) {
            acc += v * ml.eval(rot * (pn * p))?;
        }
        coeffs.push(acc);
    }
    Ok(SeriesCoefficients {
        l,
        n_max,
        alpha: ctx.alpha(),
        gamma_1p: ctx.gamma_1p(),
        coeffs,
    })
}

/// `Σ_{n=−N}^{N} C_n E_α(π^α i^α (nx)^α / l^α)`.
pub fn series_partial_sum(ctx: &AlphaContext, c: &SeriesCoefficients, x: f64) -> Result<Complex64> {
    let ml = MlEvaluator::new(ctx);
    partial_sum_with(ctx, &ml, c, x)
}

/// [`series_partial_sum`] at many points.
pub fn series_partial_sums(
    ctx: &AlphaContext,
    c: &SeriesCoefficients,
    xs: &[f64],
) -> Result<Vec<Complex64>> {
    let ml = MlEvaluator::new(ctx);
    xs.iter()
        .map(|&x| partial_sum_with(ctx, &ml, c, x))
        .collect()
}

fn partial_sum_with(
    ctx: &AlphaContext,
    ml: &MlEvaluator,
    c: &SeriesCoefficients,
    x: f64,
) -> Result<Complex64> {
    if ctx.alpha() != c.alpha {
        return Err(Error::InvalidParameter(
            "series was computed at a different alpha",
        ));
    }
    let rot = ctx.i_pow_alpha() * ctx.pow(PI / c.l) * ctx.pow(x);
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, &cn) in c.coeffs.iter().enumerate() {
        let n = i as i64 - c.n_max as i64;
        acc += cn * ml.eval(rot * ctx.pow(n as f64))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(_: f64) -> Result<Complex64> {
        Ok(Complex64::new(1.0, 0.0))
    }

    #[test]
    fn constant_has_unit_c0() {
        for alpha in [0.3, 0.5, 0.8, 1.0] {
            let ctx = AlphaContext::new(alpha).unwrap();
            let c = series_coefficients(&ctx, one, 1.5, 0, &SeriesOptions::default()).unwrap();
            assert!((c.get(0).unwrap() - 1.0).norm() < 1e-12, "alpha {alpha}");
            let s = series_partial_sum(&ctx, &c, 0.7).unwrap();
            assert!((s - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn cosine_classical() {
        let ctx = AlphaContext::new(1.0).unwrap();
        let l = 2.0;
        let c = series_coefficients(
            &ctx,
            |x| Ok(Complex64::new((PI * x / l).cos(), 0.0)),
            l,
            4,
            &SeriesOptions::default(),
        )
        .unwrap();
        for n in -4..=4i64 {
            let want = if n.abs() == 1 { 0.5 } else { 0.0 };
            assert!((c.get(n).unwrap() - want).norm() < 1e-12, "n={n}");
        }
        let x = 0.3;
        let s = series_partial_sum(&ctx, &c, x).unwrap();
        assert!((s.re - (PI * x / l).cos()).abs() < 1e-12);
        assert!((c.get_t(1).unwrap().re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn zero_signal() {
        let ctx = AlphaContext::new(0.6).unwrap();
        let c = series_coefficients(
            &ctx,
            |_| Ok(Complex64::new(0.0, 0.0)),
            1.0,
            3,
            &SeriesOptions::default(),
        )
        .unwrap();
        assert_eq!(c.coeffs().len(), 7);
        assert!(c.coeffs().iter().all(|v| v.norm() == 0.0));
        assert!(c.get(4).is_none());
        assert!(c.get(-4).is_none());
    }

    #[test]
    fn truncation_keeps_center() {
        let ctx = AlphaContext::new(1.0).unwrap();
        let c = series_coefficients(
            &ctx,
            |x| Ok(Complex64::new(x, 0.0)),
            1.0,
            5,
            &SeriesOptions::default(),
        )
        .unwrap();
        let t = c.truncated(2);
        assert_eq!(t.n_max(), 2);
        for n in -2..=2 {
            assert_eq!(t.get(n), c.get(n));
        }
        let zero = c.truncated(0);
        let s = series_partial_sum(&ctx, &zero, 0.4).unwrap();
        assert_eq!(s, c.get(0).unwrap());
    }

    #[test]
    fn rejects_bad_half_period() {
        let ctx = AlphaContext::new(1.0).unwrap();
        assert!(series_coefficients(&ctx, one, 0.0, 1, &SeriesOptions::default()).is_err());
        let c = series_coefficients(&ctx, one, 1.0, 1, &SeriesOptions::default()).unwrap();
        let other = AlphaContext::new(0.5).unwrap();
        assert!(series_partial_sum(&other, &c, 0.0).is_err());
    }
}
