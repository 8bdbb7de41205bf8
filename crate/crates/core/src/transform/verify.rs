//! Checks of the transform identities with the sampled machinery.
//!
//! At α = 1 the classical-consistent variants are asserted. For α < 1 only
//! the identities that follow from linearity of quadrature are asserted; the
//! rest are recorded as reported-only, because the pointwise realization does
//! not satisfy the fractal exponential law.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use super::convolution::{convolve_numeric, ConvolveOptions};
use super::fourier::{
    forward_on, forward_sampled, inverse, relative_l2, InverseOptions, Spectrum, TransformOptions,
};
use crate::alpha::AlphaContext;
use crate::error::{Error, Result};
use crate::formal::{lf_derivative, FormalExpr, FormalTerm, Support};
use crate::numeric::{Grid, LineRule, SampledSignal, SupportHint};
use crate::report::{IdentityTag, VariantResult, VerificationReport};
use crate::special::{KernelConvention, MlEvaluator};

type SignalFn = dyn Fn(f64) -> Result<Complex64> + Send + Sync;

/// A test signal: a pointwise function with a known span outside which it
/// vanishes, optionally backed by a formal expression.
#[derive(Clone)]
pub struct NumericSignal {
    name: String,
    lo: f64,
    hi: f64,
    f: Arc<SignalFn>,
    formal: Option<FormalExpr>,
}

impl fmt::Debug for NumericSignal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericSignal")
            .field("name", &self.name)
            .field("lo", &self.lo)
            .field("hi", &self.hi)
            .field("formal", &self.formal)
            .finish()
    }
}

impl NumericSignal {
    pub fn new(
        name: impl Into<String>,
        lo: f64,
        hi: f64,
        f: impl Fn(f64) -> Result<Complex64> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            lo,
            hi,
            f: Arc::new(f),
            formal: None,
        }
    }

    /// Pointwise evaluation of `e`, zero outside its support.
    pub fn from_formal(ctx: &AlphaContext, name: impl Into<String>, e: FormalExpr) -> Self {
        let ml = MlEvaluator::new(ctx);
        let (lo, hi) = e.span();
        let inner = e.clone();
        Self {
            name: name.into(),
            lo,
            hi,
            f: Arc::new(move |x| inner.eval_extended(&ml, x)),
            formal: Some(e),
        }
    }

    /// `exp(−(x/width)²)`.
    pub fn gaussian(width: f64) -> Self {
        Self::new(
            format!("gaussian(width={width})"),
            f64::NEG_INFINITY,
            f64::INFINITY,
            move |x| Ok(Complex64::new((-(x / width) * (x / width)).exp(), 0.0)),
        )
    }

    /// `E_α(λx^α)·1_{x≥0}`.
    pub fn causal_ml(ctx: &AlphaContext, lambda: f64) -> Self {
        let e = FormalExpr::causal(vec![FormalTerm::new(
            Complex64::new(1.0, 0.0),
            0,
            Complex64::new(lambda, 0.0),
        )]);
        Self::from_formal(ctx, format!("E(({lambda})x^a)1[x>=0]"), e)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn span(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn formal(&self) -> Option<&FormalExpr> {
        self.formal.as_ref()
    }

    pub fn eval(&self, x: f64) -> Result<Complex64> {
        if x < self.lo || x > self.hi {
            return Ok(Complex64::new(0.0, 0.0));
        }
        (self.f)(x)
    }

    /// `f(x − c)`.
    pub fn shifted(&self, c: f64) -> Self {
        let g = self.clone();
        Self {
            name: format!("{}(x-{c})", self.name),
            lo: self.lo + c,
            hi: self.hi + c,
            f: Arc::new(move |x| g.eval(x - c)),
            formal: self.formal.as_ref().map(|e| e.shift(c)),
        }
    }

    /// `f(a x)`, `a > 0`.
    pub fn dilated(&self, a: f64) -> Self {
        let g = self.clone();
        Self {
            name: format!("{}({a}x)", self.name),
            lo: self.lo / a,
            hi: self.hi / a,
            f: Arc::new(move |x| g.eval(a * x)),
            formal: None,
        }
    }

    /// `f(x) · E_α(−i^α · scale · c^α x^α)` (odd extension for `x < 0`).
    pub fn modulated(&self, ctx: &AlphaContext, scale: f64, c: f64) -> Self {
        let g = self.clone();
        let ml = MlEvaluator::new(ctx);
        let rate = -ctx.i_pow_alpha() * (scale * ctx.pow(c));
        let cx = *ctx;
        Self {
            name: format!("{}*mod({c})", self.name),
            lo: self.lo,
            hi: self.hi,
            f: Arc::new(move |x| Ok(g.eval(x)? * ml.eval(rate * cx.pow(x))?)),
            formal: None,
        }
    }

    /// `a f + b g`.
    pub fn combine(a: Complex64, f: &Self, b: Complex64, g: &Self) -> Self {
        let (f2, g2) = (f.clone(), g.clone());
        Self {
            name: format!("({a})*{}+({b})*{}", f.name, g.name),
            lo: f.lo.min(g.lo),
            hi: f.hi.max(g.hi),
            f: Arc::new(move |x| Ok(f2.eval(x)? * a + g2.eval(x)? * b)),
            formal: None,
        }
    }

    pub fn sample(&self, grid: &Grid, support: SupportHint) -> Result<SampledSignal> {
        SampledSignal::try_from_fn(grid.clone(), support, |x| self.eval(x))
    }
}

/// Tolerances for [`verify_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericTolerance {
    /// Identities that need the classical limit.
    pub identity: f64,
    /// Identities that follow from linearity of quadrature.
    pub linear: f64,
}

impl Default for NumericTolerance {
    fn default() -> Self {
        Self {
            identity: 1e-3,
            linear: 1e-12,
        }
    }
}

/// Grids for the round trip and Parseval checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralWindow {
    /// ω-range `[−W, W]`.
    pub half_width: f64,
    pub count: usize,
}

/// Everything [`verify_numeric`] needs besides the identity.
#[derive(Debug, Clone)]
pub struct NumericInputs {
    /// Test signals, used in order. Convolution identities need causal ones.
    pub signals: Vec<NumericSignal>,
    pub a: Complex64,
    pub b: Complex64,
    pub shift: f64,
    pub dilation: f64,
    pub modulation: f64,
    /// Frequencies at which spectra are compared.
    pub omegas: Vec<f64>,
    pub transform: TransformOptions,
    pub inverse: InverseOptions,
    pub roundtrip: SpectralWindow,
    /// Where the round trip is compared: `[lo, hi]` with `count` points.
    pub roundtrip_x: (f64, f64, usize),
    pub parseval: SpectralWindow,
    /// Sampling of convolution factors: `[0, x_max]` with `count` points.
    pub convolution_grid: (f64, usize),
    pub convolution: ConvolveOptions,
}

impl NumericInputs {
    /// The standard family: `E_α(−x^α)`, `E_α(−2x^α)`, `E_α(−3x^α)`
    /// (all causal). Grids are sized for the 1e-3 classical checks at α = 1
    /// and kept small for α < 1.
    pub fn standard(ctx: &AlphaContext) -> Self {
        let signals = vec![
            NumericSignal::causal_ml(ctx, -1.0),
            NumericSignal::causal_ml(ctx, -2.0),
            NumericSignal::causal_ml(ctx, -3.0),
        ];
        let omegas = vec![-3.0, -1.0, -0.25, 0.0, 0.3, 1.0, 2.5];
        if ctx.is_classical() {
            Self {
                signals,
                a: Complex64::new(1.5, -0.5),
                b: Complex64::new(-2.0, 0.0),
                shift: 0.5,
                dilation: 2.0,
                modulation: 0.75,
                omegas,
                transform: TransformOptions::default(),
                inverse: InverseOptions::default(),
                roundtrip: SpectralWindow {
                    half_width: 256.0,
                    count: 16385,
                },
                roundtrip_x: (0.1, 5.0, 99),
                parseval: SpectralWindow {
                    half_width: 128.0,
                    count: 8193,
                },
                convolution_grid: (40.0, 4097),
                convolution: ConvolveOptions::default(),
            }
        } else {
            Self {
                signals,
                a: Complex64::new(1.5, -0.5),
                b: Complex64::new(-2.0, 0.0),
                shift: 0.5,
                dilation: 2.0,
                modulation: 0.75,
                omegas,
                transform: TransformOptions {
                    truncation: 40.0,
                    nodes: 1024,
                    bound: 1e3,
                    max_nodes: 8192,
                },
                inverse: InverseOptions {
                    nodes: 1024,
                    bound: 1e3,
                    max_nodes: 8192,
                },
                roundtrip: SpectralWindow {
                    half_width: 8.0,
                    count: 257,
                },
                roundtrip_x: (0.1, 5.0, 50),
                parseval: SpectralWindow {
                    half_width: 8.0,
                    count: 257,
                },
                convolution_grid: (8.0, 257),
                convolution: ConvolveOptions::default(),
            }
        }
    }

    fn signal(&self, i: usize) -> Result<&NumericSignal> {
        self.signals
            .get(i)
            .ok_or(Error::NotApplicable("identity needs more input signals"))
    }
}

fn is_linear(id: IdentityTag) -> bool {
    matches!(
        id,
        IdentityTag::Linearity | IdentityTag::InverseLinearity | IdentityTag::Distributivity
    )
}

fn max_abs(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn sup(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

fn variant(name: &str, d: f64) -> VariantResult {
    VariantResult {
        name: String::from(name),
        discrepancy: d,
    }
}

fn test_grid(points: &[f64]) -> Result<Grid> {
    let mut p = points.to_vec();
    p.sort_by(f64::total_cmp);
    p.dedup();
    Grid::new(p)
}

/// Evaluate both sides of `id` with the sampled machinery and report.
pub fn verify_numeric(
    ctx: &AlphaContext,
    convention: KernelConvention,
    id: IdentityTag,
    inputs: &NumericInputs,
    tol: &NumericTolerance,
) -> Result<VerificationReport> {
    let opts = &inputs.transform;
    let omegas = test_grid(&inputs.omegas)?;
    let fwd = |s: &NumericSignal, grid: &Grid| -> Result<Spectrum> {
        let (lo, hi) = s.span();
        forward_on(ctx, convention, |x| s.eval(x), lo, hi, grid, opts)
    };
    let tolerance = if is_linear(id) {
        tol.linear
    } else {
        tol.identity
    };
    let scale = convention.scale(ctx);

    let report = match id {
        IdentityTag::Linearity => {
            let (f1, f2) = (inputs.signal(0)?, inputs.signal(1)?);
            let combo = NumericSignal::combine(inputs.a, f1, inputs.b, f2);
            // one domain for all three so the rules coincide
            let (lo, hi) = combo.span();
            let on = |s: &NumericSignal| {
                forward_on(ctx, convention, |x| s.eval(x), lo, hi, &omegas, opts)
            };
            let lhs = on(&combo)?;
            let (s1, s2) = (on(f1)?, on(f2)?);
            let rhs: Vec<Complex64> = s1
                .values()
                .iter()
                .zip(s2.values())
                .map(|(x, y)| inputs.a * x + inputs.b * y)
                .collect();
            VerificationReport::new(
                id,
                sup(lhs.values()),
                sup(&rhs),
                max_abs(lhs.values(), &rhs),
                tolerance,
            )
        }
        IdentityTag::InverseLinearity => {
            let (f1, f2) = (inputs.signal(0)?, inputs.signal(1)?);
            let s1 = fwd(f1, &omegas)?;
            let s2 = fwd(f2, &omegas)?;
            let combo: Vec<Complex64> = s1
                .values()
                .iter()
                .zip(s2.values())
                .map(|(x, y)| inputs.a * x + inputs.b * y)
                .collect();
            let s12 = Spectrum::from_values(
                omegas.clone(),
                combo,
                convention,
                ctx.alpha(),
                opts.truncation,
            )?;
            let (lo, hi, n) = inputs.roundtrip_x;
            let xs = Grid::uniform(lo, hi, n)?;
            let lhs = inverse(&s12, &xs, &inputs.inverse)?.signal;
            let i1 = inverse(&s1, &xs, &inputs.inverse)?.signal;
            let i2 = inverse(&s2, &xs, &inputs.inverse)?.signal;
            let rhs: Vec<Complex64> = i1
                .values()
                .iter()
                .zip(i2.values())
                .map(|(x, y)| inputs.a * x + inputs.b * y)
                .collect();
            VerificationReport::new(
                id,
                sup(lhs.values()),
                sup(&rhs),
                max_abs(lhs.values(), &rhs),
                tolerance,
            )
        }
        IdentityTag::Shift => {
            let f = inputs.signal(0)?;
            let c = inputs.shift;
            let lhs = fwd(&f.shifted(c), &omegas)?;
            let base = fwd(f, &omegas)?;
            let ml = MlEvaluator::new(ctx);
            let mut rhs: [Vec<Complex64>; 3] = [Vec::new(), Vec::new(), Vec::new()];
            for (&w, &fw) in omegas.points().iter().zip(base.values()) {
                let phase = ctx.i_pow_alpha() * (ctx.pow(c) * ctx.pow(w));
                rhs[0].push(ml.eval(-phase * scale)? * fw);
                rhs[1].push(ml.eval(phase * scale)? * fw);
                rhs[2].push(ml.eval(phase)? * fw);
            }
            let variants = vec![
                variant("minus", max_abs(lhs.values(), &rhs[0])),
                variant("plus", max_abs(lhs.values(), &rhs[1])),
                variant("printed_plus_without_scale", max_abs(lhs.values(), &rhs[2])),
            ];
            VerificationReport::from_variants(
                id,
                sup(lhs.values()),
                sup(&rhs[0]),
                variants,
                "minus",
                tolerance,
            )
        }
        IdentityTag::Scaling => {
            let f = inputs.signal(0)?;
            let a = inputs.dilation;
            if !(a > 0.0) {
                return Err(Error::InvalidParameter("dilation must be positive"));
            }
            let lhs = fwd(&f.dilated(a), &omegas)?;
            let scaled = Grid::new(omegas.points().iter().map(|w| w / a).collect())?;
            let inv = 1.0 / ctx.pow(a);
            let rhs: Vec<Complex64> = fwd(f, &scaled)?.values().iter().map(|v| v * inv).collect();
            VerificationReport::new(
                id,
                sup(lhs.values()),
                sup(&rhs),
                max_abs(lhs.values(), &rhs),
                tolerance,
            )
        }
        IdentityTag::Modulation => {
            let f = inputs.signal(0)?;
            let c = inputs.modulation;
            // F(s + s_c): the frequency ω' with ω'^α = ω^α + c^α
            let shifted = Grid::new(
                omegas
                    .points()
                    .iter()
                    .map(|&w| inverse_pow(ctx.alpha(), ctx.pow(w) + ctx.pow(c)))
                    .collect(),
            )?;
            let rhs = fwd(f, &shifted)?;
            let with_scale = fwd(&f.modulated(ctx, scale, c), &omegas)?;
            let printed = fwd(&f.modulated(ctx, 1.0, c), &omegas)?;
            let variants = vec![
                variant("with_scale", max_abs(with_scale.values(), rhs.values())),
                variant(
                    "printed_without_scale",
                    max_abs(printed.values(), rhs.values()),
                ),
            ];
            VerificationReport::from_variants(
                id,
                sup(with_scale.values()),
                sup(rhs.values()),
                variants,
                "with_scale",
                tolerance,
            )
        }
        IdentityTag::Derivative => {
            let f = inputs.signal(0)?;
            let e = f
                .formal()
                .filter(|e| e.anchor() == 0.0 && e.support() == Support::HalfLine)
                .ok_or(Error::NotApplicable(
                    "derivative check needs a causal formal signal anchored at 0",
                ))?;
            let d = NumericSignal::from_formal(ctx, "derivative", lf_derivative(ctx, e)?);
            let f0: Complex64 = e.terms().iter().filter(|t| t.k == 0).map(|t| t.coeff).sum();
            let lhs: Vec<Complex64> = fwd(&d, &omegas)?.values().iter().map(|v| v + f0).collect();
            let base = fwd(f, &omegas)?;
            let s: Vec<Complex64> = omegas
                .points()
                .iter()
                .zip(base.values())
                .map(|(&w, v)| ctx.i_pow_alpha() * (scale * ctx.pow(w)) * v)
                .collect();
            let minus: Vec<Complex64> = s.iter().map(|v| -v).collect();
            let variants = vec![
                variant("plus", max_abs(&lhs, &s)),
                variant("printed_minus", max_abs(&lhs, &minus)),
            ];
            VerificationReport::from_variants(id, sup(&lhs), sup(&s), variants, "plus", tolerance)
        }
        IdentityTag::Convolution => {
            let (f1, f2) = (inputs.signal(0)?, inputs.signal(1)?);
            let (grid, s1, s2) = sampled_pair(inputs, f1, f2)?;
            let h = convolve_numeric(ctx, &s1, &s2, &inputs.convolution)?;
            let lhs = forward_sampled(ctx, convention, &h, &omegas, opts)?;
            let a = fwd(f1, &omegas)?;
            let b = fwd(f2, &omegas)?;
            let rhs: Vec<Complex64> = a
                .values()
                .iter()
                .zip(b.values())
                .map(|(x, y)| x * y)
                .collect();
            let _ = grid;
            VerificationReport::new(
                id,
                sup(lhs.values()),
                sup(&rhs),
                max_abs(lhs.values(), &rhs),
                tolerance,
            )
        }
        IdentityTag::Commutativity => {
            let (f1, f2) = (inputs.signal(0)?, inputs.signal(1)?);
            let (_, s1, s2) = sampled_pair(inputs, f1, f2)?;
            let lhs = convolve_numeric(ctx, &s1, &s2, &inputs.convolution)?;
            let rhs = convolve_numeric(ctx, &s2, &s1, &inputs.convolution)?;
            VerificationReport::new(
                id,
                sup(lhs.values()),
                sup(rhs.values()),
                max_abs(lhs.values(), rhs.values()),
                tolerance,
            )
        }
        IdentityTag::Distributivity => {
            let (f1, f2, f3) = (inputs.signal(0)?, inputs.signal(1)?, inputs.signal(2)?);
            let (grid, s1, s2) = sampled_pair(inputs, f1, f2)?;
            let s3 = f3.sample(&grid, SupportHint::HalfLine)?;
            let sum: Vec<Complex64> = s2
                .values()
                .iter()
                .zip(s3.values())
                .map(|(x, y)| x + y)
                .collect();
            let s23 = SampledSignal::new(grid.clone(), sum, SupportHint::HalfLine)?;
            let lhs = convolve_numeric(ctx, &s1, &s23, &inputs.convolution)?;
            let c12 = convolve_numeric(ctx, &s1, &s2, &inputs.convolution)?;
            let c13 = convolve_numeric(ctx, &s1, &s3, &inputs.convolution)?;
            let rhs: Vec<Complex64> = c12
                .values()
                .iter()
                .zip(c13.values())
                .map(|(x, y)| x + y)
                .collect();
            let mut r = VerificationReport::new(
                id,
                sup(lhs.values()),
                sup(&rhs),
                max_abs(lhs.values(), &rhs),
                tolerance,
            );
            r.variant = String::from("f1*(f2+f3) = f1*f2 + f1*f3");
            r
        }
        IdentityTag::Uniqueness => {
            let f = inputs.signal(0)?;
            let w = inputs.roundtrip;
            let grid = Grid::uniform(-w.half_width, w.half_width, w.count)?;
            let spectrum = fwd(f, &grid)?;
            let (lo, hi, n) = inputs.roundtrip_x;
            let xs = Grid::uniform(lo, hi, n)?;
            let back = inverse(&spectrum, &xs, &inputs.inverse)?.signal;
            let exact: Vec<Complex64> = xs
                .points()
                .iter()
                .map(|&x| f.eval(x))
                .collect::<Result<_>>()?;
            let mut r = VerificationReport::new(
                id,
                sup(back.values()),
                sup(&exact),
                relative_l2(back.values(), &exact)?,
                tolerance,
            );
            r.variant = String::from("relative_l2");
            r
        }
        IdentityTag::Parseval => {
            let f = inputs.signal(0)?;
            let (lo, hi) = f.span();
            let x = opts.truncation;
            let rule = LineRule::new(ctx, lo.max(-x), hi.min(x), opts.nodes)?;
            let sq: Vec<Complex64> = rule
                .points()
                .iter()
                .map(|&t| f.eval(t).map(|v| Complex64::new(v.norm_sqr(), 0.0)))
                .collect::<Result<_>>()?;
            let lhs = rule.sum(&sq).re;
            let w = inputs.parseval;
            let grid = Grid::uniform(-w.half_width, w.half_width, w.count)?;
            let spectrum = fwd(f, &grid)?;
            let wrule = LineRule::new(ctx, -w.half_width, w.half_width, opts.nodes)?;
            let ssq: Vec<Complex64> = wrule
                .points()
                .iter()
                .map(|&o| Complex64::new(spectrum.interpolate(o).norm_sqr(), 0.0))
                .collect();
            let rhs = wrule.sum(&ssq).re;
            VerificationReport::new(id, lhs, rhs, (lhs - rhs).abs(), tolerance)
        }
    };
    Ok(if ctx.is_classical() || is_linear(id) {
        report
    } else {
        report.reported_only()
    })
}

fn sampled_pair(
    inputs: &NumericInputs,
    f1: &NumericSignal,
    f2: &NumericSignal,
) -> Result<(Grid, SampledSignal, SampledSignal)> {
    if f1.span().0 < 0.0 || f2.span().0 < 0.0 {
        return Err(Error::NotApplicable(
            "convolution checks need causal signals",
        ));
    }
    let (x_max, count) = inputs.convolution_grid;
    let grid = Grid::uniform(0.0, x_max, count)?;
    let s1 = f1.sample(&grid, SupportHint::HalfLine)?;
    let s2 = f2.sample(&grid, SupportHint::HalfLine)?;
    Ok((grid, s1, s2))
}

/// Inverse of the odd power `x ↦ sign(x)|x|^α`.
fn inverse_pow(alpha: f64, y: f64) -> f64 {
    if alpha == 1.0 {
        y
    } else {
        y.signum() * y.abs().powf(1.0 / alpha)
    }
}

/// All numeric identity checks on [`NumericInputs::standard`], with a
/// Gaussian as the scaling test signal.
pub fn numeric_suite(
    ctx: &AlphaContext,
    convention: KernelConvention,
    tol: &NumericTolerance,
) -> Result<Vec<VerificationReport>> {
    let standard = NumericInputs::standard(ctx);
    let mut out = Vec::new();
    for id in IdentityTag::ALL {
        let report = if id == IdentityTag::Scaling {
            let mut inputs = standard.clone();
            inputs.signals = vec![NumericSignal::gaussian(1.0)];
            verify_numeric(ctx, convention, id, &inputs, tol)?
        } else {
            verify_numeric(ctx, convention, id, &standard, tol)?
        };
        out.push(report);
    }
    Ok(out)
}

#[allow(dead_code)]
fn _assert_send_sync() {
    fn check<T: Send + Sync>() {}
    check::<NumericSignal>();
    let _: Option<Box<SignalFn>> = None;
}
