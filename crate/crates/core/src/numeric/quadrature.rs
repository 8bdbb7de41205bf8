//! Quadrature realizations of `∫(dx)^α`.
//!
//! Measure-matched rules live in the variable `t = ((x−a)/L)^α`, where the
//! α-monomials `(x−a)^{kα}` become polynomials and the weight
//! `(b−x)^{α−1}/Γ(α)` becomes
//! `W(t) = t^{1/α−1} (1 − t^{1/α})^{α−1} / Γ(1+α)` on `[0, 1]`,
//! with moments `Γ(1+kα)/Γ(1+(k+1)α)`.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use num_complex::Complex64;

use super::gauss::{gauss_jacobi, gauss_legendre, golub_welsch};
use crate::alpha::AlphaContext;
use crate::error::{Error, Result};
use crate::special::{gamma, ln_gamma};

/// Relative tolerance for the moment check of [`build_measure_matched_rule`].
pub const MOMENT_TOLERANCE: f64 = 1e-10;

/// Nodes per panel of the composite rules.
pub const PANEL_NODES: usize = 16;

/// Smallest graded panel next to a singular point, relative to its parent.
const GRADING_DEPTH: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureMode {
    /// Left-endpoint sum `Σ f(t_j)(Δt_j)^α / Γ(1+α)` of the literal definition.
    LiteralRiemann,
    /// Weighted rule exact on the α-monomials.
    MeasureMatched,
}

impl QuadratureMode {
    pub fn name(self) -> &'static str {
        match self {
            Self::LiteralRiemann => "literal-riemann",
            Self::MeasureMatched => "measure-matched",
        }
    }
}

/// Nodes and positive weights for `∫_a^b f (dx)^α`, normalized so that
/// `Σ w_i f(x_i)` includes the `1/Γ(1+α)` factor. When `a > b` the nodes and
/// weights describe `[b, a]` and [`Self::integrate`] negates the sum.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    mode: QuadratureMode,
    a: f64,
    b: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Uniform partition of `[a, b]` into `cells` cells, left endpoints.
    pub fn literal_riemann(ctx: &AlphaContext, a: f64, b: f64, cells: usize) -> Result<Self> {
        check_interval(a, b)?;
        if cells == 0 {
            return Err(Error::GridTooSmall(0));
        }
        let (lo, hi) = ordered(a, b);
        if lo == hi {
            return Ok(Self::empty(QuadratureMode::LiteralRiemann, a, b));
        }
        let h = (hi - lo) / cells as f64;
        let w = ctx.pow(h) / ctx.gamma_1p();
        let nodes = (0..cells).map(|j| lo + h * j as f64).collect();
        Ok(Self {
            mode: QuadratureMode::LiteralRiemann,
            a,
            b,
            nodes,
            weights: alloc::vec![w; cells],
        })
    }

    /// Dense composite measure-matched rule with about `nodes` nodes,
    /// anchored at the left end of the interval. Exact on the α-monomials
    /// up to the per-panel degree and suited to oscillatory integrands;
    /// at α = 1 it is composite Gauss-Legendre.
    pub fn composite_matched(ctx: &AlphaContext, a: f64, b: f64, nodes: usize) -> Result<Self> {
        Self::composite_matched_with_kinks(ctx, a, b, nodes, &[])
    }

    /// As [`Self::composite_matched`], with extra panel breakpoints (and, for
    /// α < 1, grading) at the given interior `x` positions.
    pub fn composite_matched_with_kinks(
        ctx: &AlphaContext,
        a: f64,
        b: f64,
        nodes: usize,
        kinks: &[f64],
    ) -> Result<Self> {
        check_interval(a, b)?;
        let (lo, hi) = ordered(a, b);
        if lo == hi {
            return Ok(Self::empty(QuadratureMode::MeasureMatched, a, b));
        }
        let len = hi - lo;
        let panels = nodes.div_ceil(PANEL_NODES).max(1);
        let t_kinks: Vec<f64> = kinks
            .iter()
            .filter(|&&x| x > lo && x < hi)
            .map(|&x| ctx.pow((x - lo) / len))
            .collect();
        let m = discretize_measure(ctx.alpha(), panels, PANEL_NODES, &t_kinks)?;
        Ok(m.into_rule(ctx, a, b))
    }

    pub fn mode(&self) -> QuadratureMode {
        self.mode
    }

    /// The interval as given, possibly reversed.
    pub fn interval(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `+1`, or `−1` for a reversed interval.
    pub fn orientation(&self) -> f64 {
        if self.a > self.b {
            -1.0
        } else {
            1.0
        }
    }

    pub fn integrate(&self, mut f: impl FnMut(f64) -> Complex64) -> Complex64 {
        let s: Complex64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| f(x) * w)
            .sum();
        s * self.orientation()
    }

    pub fn try_integrate(&self, mut f: impl FnMut(f64) -> Result<Complex64>) -> Result<Complex64> {
        let mut s = Complex64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            s += f(x)? * w;
        }
        Ok(s * self.orientation())
    }

    fn empty(mode: QuadratureMode, a: f64, b: f64) -> Self {
        Self {
            mode,
            a,
            b,
            nodes: Vec::new(),
            weights: Vec::new(),
        }
    }
}

/// `n`-point Gauss rule for `∫_a^b f (dx)^α` exact on `(x−a)^{kα}`,
/// `k ≤ 2n−1`. Built by discretized Stieltjes on the measure `W(t)` and
/// Golub-Welsch; errors with [`Error::IllConditioned`] if the moments are not
/// reproduced to [`MOMENT_TOLERANCE`].
pub fn build_measure_matched_rule(
    ctx: &AlphaContext,
    a: f64,
    b: f64,
    n: usize,
) -> Result<QuadratureRule> {
    check_interval(a, b)?;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "quadrature needs at least one node",
        ));
    }
    let (lo, hi) = ordered(a, b);
    if lo == hi {
        return Ok(QuadratureRule::empty(QuadratureMode::MeasureMatched, a, b));
    }
    let alpha = ctx.alpha();
    let (t, w) = if ctx.is_classical() {
        let (x, w) = gauss_legendre(n)?;
        (
            x.iter().map(|x| 0.5 * (1.0 + x)).collect::<Vec<_>>(),
            w.iter().map(|w| 0.5 * w).collect::<Vec<_>>(),
        )
    } else {
        let disc = discretize_measure(alpha, 8, n + 24, &[])?;
        let (ra, rb) = stieltjes(&disc.t, &disc.w, n);
        let mu0: f64 = disc.w.iter().sum();
        golub_welsch(&ra, &rb, mu0)?
    };
    let err = moment_error(alpha, &t, &w, 2 * n)?;
    if !(err <= MOMENT_TOLERANCE) {
        return Err(Error::IllConditioned(err));
    }
    let s: Vec<f64> = t.iter().map(|t| 1.0 - t).collect();
    Ok(Measure { t, s, w }.into_rule(ctx, a, b))
}

/// Exact moments `μ_k = Γ(1+kα)/Γ(1+(k+1)α)` of `W`.
pub fn measure_moment(alpha: f64, k: usize) -> Result<f64> {
    let x = 1.0 + k as f64 * alpha;
    let y = x + alpha;
    if y < 170.0 {
        Ok(gamma(x)? / gamma(y)?)
    } else {
        Ok((ln_gamma(x)? - ln_gamma(y)?).exp())
    }
}

/// Largest relative error of `Σ w t^k` against `μ_k` for `k < count`.
fn moment_error(alpha: f64, t: &[f64], w: &[f64], count: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    let mut pow: Vec<f64> = alloc::vec![1.0; t.len()];
    for k in 0..count {
        let q: f64 = pow.iter().zip(w).map(|(p, w)| p * w).sum();
        let exact = measure_moment(alpha, k)?;
        worst = worst.max(((q - exact) / exact).abs());
        pow.iter_mut().zip(t).for_each(|(p, t)| *p *= t);
    }
    Ok(worst)
}

/// Recurrence coefficients of the monic orthogonal polynomials of a discrete
/// measure, `(a_k, β_k)` for `k < n`.
fn stieltjes(t: &[f64], w: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut a = alloc::vec![0.0; n];
    let mut b = alloc::vec![0.0; n];
    let mut p_prev = alloc::vec![0.0; t.len()];
    let mut p = alloc::vec![1.0; t.len()];
    let mut norm_prev = 1.0;
    for k in 0..n {
        let norm: f64 = p.iter().zip(w).map(|(p, w)| w * p * p).sum();
        let tn: f64 = p
            .iter()
            .zip(w)
            .zip(t)
            .map(|((p, w), t)| w * t * p * p)
            .sum();
        a[k] = tn / norm;
        b[k] = if k == 0 { norm } else { norm / norm_prev };
        for i in 0..t.len() {
            let next = (t[i] - a[k]) * p[i] - b[k] * p_prev[i];
            p_prev[i] = p[i];
            p[i] = if k == 0 {
                (t[i] - a[k]) * p_prev[i]
            } else {
                next
            };
        }
        norm_prev = norm;
    }
    (a, b)
}

/// A discrete measure on `[0, 1]` in the `t` variable; `s = 1 − t` is kept
/// separately for accuracy near `t = 1`.
struct Measure {
    t: Vec<f64>,
    s: Vec<f64>,
    w: Vec<f64>,
}

impl Measure {
    fn into_rule(self, ctx: &AlphaContext, a: f64, b: f64) -> QuadratureRule {
        let (lo, hi) = ordered(a, b);
        let len = hi - lo;
        let inv = 1.0 / ctx.alpha();
        let scale = ctx.pow(len);
        let classical = ctx.is_classical();
        let nodes = self
            .t
            .iter()
            .zip(&self.s)
            .map(|(&t, &s)| {
                let u = if classical {
                    t
                } else if t > 0.5 {
                    (libm_log1p(-s) * inv).exp()
                } else {
                    t.powf(inv)
                };
                (lo + len * u).clamp(lo, hi)
            })
            .collect();
        let weights = self.w.iter().map(|w| w * scale).collect();
        QuadratureRule {
            mode: QuadratureMode::MeasureMatched,
            a,
            b,
            nodes,
            weights,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum PanelKind {
    Legendre,
    /// Touches `t = 0`; Jacobi weight `t^{1/α−1}`.
    JacobiZero,
    /// Touches `t = 1`; Jacobi weight `(1−t)^{α−1}`.
    JacobiOne,
}

/// Composite discretization of `W(t) dt` with `panels` uniform panels of `m`
/// nodes, extra breakpoints at `kinks`, and (for α < 1) geometric grading
/// towards `t = 0` and every kink.
fn discretize_measure(alpha: f64, panels: usize, m: usize, kinks: &[f64]) -> Result<Measure> {
    let classical = alpha == 1.0;
    let mut breaks: Vec<f64> = (0..=panels).map(|j| j as f64 / panels as f64).collect();
    breaks.extend(kinks.iter().copied().filter(|&k| k > 0.0 && k < 1.0));
    breaks.sort_by(f64::total_cmp);
    breaks.dedup_by(|x, y| (*x - *y).abs() <= 1e-14);

    let is_singular =
        |t: f64| !classical && (t == 0.0 || kinks.iter().any(|&k| (k - t).abs() <= 1e-14));
    let mut spans: Vec<(f64, f64)> = Vec::new();
    for w in breaks.windows(2) {
        let (u, v) = (w[0], w[1]);
        match (is_singular(u), is_singular(v)) {
            (false, false) => spans.push((u, v)),
            (true, false) => grade(u, v, true, &mut spans),
            (false, true) => grade(u, v, false, &mut spans),
            (true, true) => {
                let mid = 0.5 * (u + v);
                grade(u, mid, true, &mut spans);
                grade(mid, v, false, &mut spans);
            }
        }
    }

    let beta = 1.0 / alpha - 1.0;
    let gamma_1p = gamma(1.0 + alpha)?;
    let (gl_x, gl_w) = gauss_legendre(m)?;
    let (jz_x, jz_w) = if classical {
        (gl_x.clone(), gl_w.clone())
    } else {
        gauss_jacobi(m, 0.0, beta)?
    };
    let (jo_x, jo_w) = if classical {
        (gl_x.clone(), gl_w.clone())
    } else {
        gauss_jacobi(m, alpha - 1.0, 0.0)?
    };

    let mut out = Measure {
        t: Vec::with_capacity(spans.len() * m),
        s: Vec::with_capacity(spans.len() * m),
        w: Vec::with_capacity(spans.len() * m),
    };
    for &(u, v) in &spans {
        let kind = if classical {
            PanelKind::Legendre
        } else if u == 0.0 {
            PanelKind::JacobiZero
        } else if v == 1.0 {
            PanelKind::JacobiOne
        } else {
            PanelKind::Legendre
        };
        let h = v - u;
        match kind {
            PanelKind::Legendre => {
                for (x, w) in gl_x.iter().zip(&gl_w) {
                    let (t, s) = if x.is_sign_negative() {
                        let t = u + 0.5 * h * (1.0 + x);
                        (t, 1.0 - t)
                    } else {
                        let s = (1.0 - v) + 0.5 * h * (1.0 - x);
                        (1.0 - s, s)
                    };
                    out.push(t, s, 0.5 * h * w * density(alpha, beta, gamma_1p, t, s));
                }
            }
            PanelKind::JacobiZero => {
                // t^β dt = (h/2)^{β+1} (1+x)^β dx
                let f = (0.5 * h).powf(beta + 1.0);
                for (x, w) in jz_x.iter().zip(&jz_w) {
                    let t = 0.5 * h * (1.0 + x);
                    let s = 1.0 - t;
                    let g = one_minus_root(alpha, t, s).powf(alpha - 1.0) / gamma_1p;
                    out.push(t, s, f * w * g);
                }
            }
            PanelKind::JacobiOne => {
                // s^{α−1} dt = (h/2)^α (1−x)^{α−1} dx, s = 1 − t
                let f = (0.5 * h).powf(alpha);
                for (x, w) in jo_x.iter().zip(&jo_w) {
                    let s = 0.5 * h * (1.0 - x);
                    let t = 1.0 - s;
                    // (1 − t^{1/α}) = s·φ(s) with φ smooth
                    let phi = one_minus_root(alpha, t, s) / s;
                    let g = t.powf(beta) * phi.powf(alpha - 1.0) / gamma_1p;
                    out.push(t, s, f * w * g);
                }
            }
        }
    }
    Ok(out)
}

impl Measure {
    fn push(&mut self, t: f64, s: f64, w: f64) {
        self.t.push(t);
        self.s.push(s);
        self.w.push(w);
    }
}

/// Split `[u, v]` geometrically towards `u` (or `v`).
fn grade(u: f64, v: f64, toward_u: bool, spans: &mut Vec<(f64, f64)>) {
    let d = v - u;
    let levels = ((1.0 / GRADING_DEPTH).log2().ceil() as usize).max(1);
    let mut cuts: Vec<f64> = (0..levels).map(|j| d * 0.5f64.powi(j as i32 + 1)).collect();
    cuts.reverse();
    let mut edges: Vec<f64> = Vec::with_capacity(levels + 2);
    if toward_u {
        edges.push(u);
        edges.extend(cuts.iter().map(|c| u + c));
        edges.push(v);
    } else {
        edges.push(u);
        edges.extend(cuts.iter().rev().map(|c| v - c));
        edges.push(v);
    }
    for e in edges.windows(2) {
        spans.push((e[0], e[1]));
    }
}

/// `W(t)` away from the endpoints.
fn density(alpha: f64, beta: f64, gamma_1p: f64, t: f64, s: f64) -> f64 {
    if alpha == 1.0 {
        return 1.0;
    }
    t.powf(beta) * one_minus_root(alpha, t, s).powf(alpha - 1.0) / gamma_1p
}

/// `1 − t^{1/α}` without cancellation.
fn one_minus_root(alpha: f64, t: f64, s: f64) -> f64 {
    let ln_t = if t > 0.5 { libm_log1p(-s) } else { t.ln() };
    -(ln_t / alpha).exp_m1()
}

fn libm_log1p(x: f64) -> f64 {
    x.ln_1p()
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if !a.is_finite() {
        return Err(Error::NonFinite(0));
    }
    if !b.is_finite() {
        return Err(Error::NonFinite(1));
    }
    Ok(())
}

fn ordered(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(a: f64) -> AlphaContext {
        AlphaContext::new(a).unwrap()
    }

    #[test]
    fn discretization_reproduces_moments() {
        for a in [0.2, 0.5, 0.75, 0.95] {
            let m = discretize_measure(a, 8, 40, &[]).unwrap();
            let err = moment_error(a, &m.t, &m.w, 70).unwrap();
            assert!(err < 1e-13, "alpha={a}: {err}");
        }
    }

    #[test]
    fn kinks_do_not_disturb_moments() {
        let a = 0.6;
        let m = discretize_measure(a, 4, 16, &[0.5f64.powf(a)]).unwrap();
        assert!(moment_error(a, &m.t, &m.w, 20).unwrap() < 1e-13);
    }

    #[test]
    fn gauss_rule_moments() {
        for a in [0.3, 0.5, 0.9] {
            let r = build_measure_matched_rule(&ctx(a), 0.0, 1.0, 32).unwrap();
            assert!(r.weights().iter().all(|&w| w > 0.0));
            assert!(r.nodes().iter().all(|&x| (0.0..=1.0).contains(&x)));
        }
    }

    #[test]
    fn classical_rule_is_legendre() {
        let r = build_measure_matched_rule(&ctx(1.0), 0.0, 1.0, 5).unwrap();
        let v = r.integrate(|x| Complex64::new(x, 0.0));
        assert!((v.re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn riemann_literal_sum() {
        let c = ctx(0.5);
        let r = QuadratureRule::literal_riemann(&c, 0.0, 1.0, 100).unwrap();
        let v = r.integrate(|_| Complex64::new(1.0, 0.0));
        assert!((v.re - 10.0 / c.gamma_1p()).abs() < 1e-12);
        let r = QuadratureRule::literal_riemann(&c, 1.0, 0.0, 100).unwrap();
        assert!((r.integrate(|_| Complex64::new(1.0, 0.0)).re + 10.0 / c.gamma_1p()).abs() < 1e-12);
        let r = QuadratureRule::literal_riemann(&c, 0.3, 0.3, 7).unwrap();
        assert_eq!(
            r.integrate(|_| Complex64::new(1.0, 0.0)),
            Complex64::new(0.0, 0.0)
        );
    }

    #[test]
    fn composite_total_mass() {
        for a in [0.4, 1.0] {
            let c = ctx(a);
            let r = QuadratureRule::composite_matched(&c, -1.0, 2.0, 256).unwrap();
            let v = r.integrate(|_| Complex64::new(1.0, 0.0)).re;
            let exact = 3f64.powf(a) / c.gamma_1p();
            assert!((v - exact).abs() < 1e-13 * exact, "{a}: {v} vs {exact}");
        }
    }
}
