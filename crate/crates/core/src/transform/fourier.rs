#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::alpha::AlphaContext;
use crate::error::{Error, Result};
use crate::formal::FormalExpr;
use crate::numeric::{
    cubic_interpolate, nodes_for_oscillation, Grid, LineRule, SampledSignal, SupportHint,
};
use crate::special::{KernelConvention, MlEvaluator};

/// Quadrature settings for the forward transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformOptions {
    /// Truncation `X`: the signal is integrated over `[−X, X]`.
    pub truncation: f64,
    /// Minimum node count per half-line; raised automatically to resolve
    /// the kernel's oscillation at the largest frequency.
    pub nodes: usize,
    /// Integrability bound `K` on `∫|f|(dx)^α`.
    pub bound: f64,
    /// Hard cap on the automatically raised node count.
    pub max_nodes: usize,
}

impl Default for TransformOptions {
    fn default() -> Self {
        Self {
            truncation: 40.0,
            nodes: 4096,
            bound: 1e3,
            max_nodes: 1 << 20,
        }
    }
}

/// Sampled local fractional Fourier spectrum with the settings that produced
/// it.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    omegas: Grid,
    values: Vec<Complex64>,
    convention: KernelConvention,
    alpha: f64,
    truncation: f64,
    nodes: usize,
    abs_integral: f64,
    warning: bool,
}

impl Spectrum {
    /// Wrap existing values, e.g. read back from a file. The quadrature
    /// diagnostics are unknown and set to zero.
    pub fn from_values(
        omegas: Grid,
        values: Vec<Complex64>,
        convention: KernelConvention,
        alpha: f64,
        truncation: f64,
    ) -> Result<Self> {
        AlphaContext::new(alpha)?;
        if omegas.len() != values.len() {
            return Err(Error::LengthMismatch(omegas.len(), values.len()));
        }
        if let Some(i) = values
            .iter()
            .position(|v| !(v.re.is_finite() && v.im.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        Ok(Self {
            omegas,
            values,
            convention,
            alpha,
            truncation,
            nodes: 0,
            abs_integral: 0.0,
            warning: false,
        })
    }

    pub fn omegas(&self) -> &Grid {
        &self.omegas
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn convention(&self) -> KernelConvention {
        self.convention
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn truncation(&self) -> f64 {
        self.truncation
    }

    /// Quadrature nodes used on the signal side.
    pub fn nodes(&self) -> usize {
        self.nodes
    }

    /// `∫|f|(dx)^α` estimated during the transform.
    pub fn abs_integral(&self) -> f64 {
        self.abs_integral
    }

    /// The integrability bound was exceeded.
    pub fn warning(&self) -> bool {
        self.warning
    }

    /// Cubic interpolation of the samples; zero outside the grid.
    pub fn interpolate(&self, omega: f64) -> Complex64 {
        if self.omegas.contains(omega) {
            cubic_interpolate(&self.omegas, &self.values, omega)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }
}

/// Forward transform of `f` over `[−X, X]`.
pub fn forward(
    ctx: &AlphaContext,
    convention: KernelConvention,
    f: impl FnMut(f64) -> Result<Complex64>,
    omegas: &Grid,
    opts: &TransformOptions,
) -> Result<Spectrum> {
    forward_on(
        ctx,
        convention,
        f,
        f64::NEG_INFINITY,
        f64::INFINITY,
        omegas,
        opts,
    )
}

/// Forward transform of `f` known to vanish outside `[lo, hi]`; integrates
/// over `[lo, hi] ∩ [−X, X]`.
pub fn forward_on(
    ctx: &AlphaContext,
    convention: KernelConvention,
    mut f: impl FnMut(f64) -> Result<Complex64>,
    lo: f64,
    hi: f64,
    omegas: &Grid,
    opts: &TransformOptions,
) -> Result<Spectrum> {
    if !(opts.truncation > 0.0 && opts.truncation.is_finite()) {
        return Err(Error::InvalidParameter("truncation must be positive"));
    }
    let x = opts.truncation;
    let (lo, hi) = (lo.max(-x), hi.min(x));
    let mut spectrum = Spectrum {
        omegas: omegas.clone(),
        values: vec![Complex64::new(0.0, 0.0); omegas.len()],
        convention,
        alpha: ctx.alpha(),
        truncation: x,
        nodes: 0,
        abs_integral: 0.0,
        warning: false,
    };
    if !(lo < hi) {
        return Ok(spectrum);
    }
    let omega_max = omegas.first().abs().max(omegas.last().abs());
    let scale = convention.scale(ctx);
    let nodes = opts
        .nodes
        .max(nodes_for_oscillation(
            ctx,
            scale,
            omega_max,
            lo.abs().max(hi.abs()),
        ))
        .min(opts.max_nodes);
    let rule = LineRule::new(ctx, lo, hi, nodes)?;
    let fv = rule
        .points()
        .iter()
        .map(|&x| f(x))
        .collect::<Result<Vec<_>>>()?;
    spectrum.abs_integral = rule.abs_sum(&fv);
    spectrum.warning = spectrum.abs_integral > opts.bound;
    spectrum.nodes = rule.len();
    let factor = convention.forward_prefactor(ctx) * ctx.gamma_1p();
    let weighted: Vec<Complex64> = fv
        .iter()
        .zip(rule.weights())
        .map(|(v, w)| v * (w * factor))
        .collect();
    kernel_sums(
        ctx,
        -scale,
        rule.points(),
        &weighted,
        omegas,
        &mut spectrum.values,
    )?;
    Ok(spectrum)
}

/// Forward transform of a formal expression evaluated pointwise.
pub fn forward_formal(
    ctx: &AlphaContext,
    convention: KernelConvention,
    e: &FormalExpr,
    omegas: &Grid,
    opts: &TransformOptions,
) -> Result<Spectrum> {
    let ml = MlEvaluator::new(ctx);
    let (lo, hi) = e.span();
    forward_on(
        ctx,
        convention,
        |x| e.eval_extended(&ml, x),
        lo,
        hi,
        omegas,
        opts,
    )
}

/// Forward transform of samples through their cubic interpolant, over the
/// sampled range (clipped to `[−X, X]`).
pub fn forward_sampled(
    ctx: &AlphaContext,
    convention: KernelConvention,
    s: &SampledSignal,
    omegas: &Grid,
    opts: &TransformOptions,
) -> Result<Spectrum> {
    let g = s.grid();
    forward_on(
        ctx,
        convention,
        |x| Ok(s.interpolate_or_zero(x)),
        g.first(),
        g.last(),
        omegas,
        opts,
    )
}

/// A recovered signal with the integrability diagnostic of its spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct Inversion {
    pub signal: SampledSignal,
    /// `∫|S|(dω)^α` over the spectrum's range.
    pub abs_integral: f64,
    pub warning: bool,
}

/// Quadrature settings for [`inverse`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseOptions {
    pub nodes: usize,
    pub bound: f64,
    pub max_nodes: usize,
}

impl Default for InverseOptions {
    fn default() -> Self {
        Self {
            nodes: 4096,
            bound: 1e3,
            max_nodes: 1 << 20,
        }
    }
}

/// Inverse transform over the spectrum's recorded ω-range, integrating a
/// cubic interpolant of the samples. No tail beyond the range is added.
pub fn inverse(spectrum: &Spectrum, xs: &Grid, opts: &InverseOptions) -> Result<Inversion> {
    let ctx = AlphaContext::new(spectrum.alpha)?;
    let convention = spectrum.convention;
    let og = spectrum.omegas();
    let scale = convention.scale(&ctx);
    let x_max = xs.first().abs().max(xs.last().abs());
    let nodes = opts
        .nodes
        .max(nodes_for_oscillation(
            &ctx,
            scale,
            x_max,
            og.first().abs().max(og.last().abs()),
        ))
        .min(opts.max_nodes);
    let rule = LineRule::new(&ctx, og.first(), og.last(), nodes)?;
    let sv: Vec<Complex64> = rule
        .points()
        .iter()
        .map(|&w| spectrum.interpolate(w))
        .collect();
    let abs_integral = rule.abs_sum(&sv);
    let factor = convention.inverse_prefactor(&ctx) * ctx.gamma_1p();
    let weighted: Vec<Complex64> = sv
        .iter()
        .zip(rule.weights())
        .map(|(v, w)| v * (w * factor))
        .collect();
    let mut values = vec![Complex64::new(0.0, 0.0); xs.len()];
    kernel_sums(&ctx, scale, rule.points(), &weighted, xs, &mut values)?;
    Ok(Inversion {
        signal: SampledSignal::new(xs.clone(), values, SupportHint::Interval)?,
        abs_integral,
        warning: abs_integral > opts.bound,
    })
}

/// `out[j] = Σ_i weighted[i] · E_α(i^α · scale · u_i^α · v_j^α)`.
///
/// At α = 1 on a uniform `v` grid the exponentials are advanced by complex
/// rotation, reseeded exactly every few steps.
fn kernel_sums(
    ctx: &AlphaContext,
    scale: f64,
    u: &[f64],
    weighted: &[Complex64],
    v: &Grid,
    out: &mut [Complex64],
) -> Result<()> {
    const RESEED: usize = 64;
    let vp = v.points();
    if ctx.is_classical() {
        if let Some(h) = v.step() {
            let v0 = v.first();
            for (&ui, &wi) in u.iter().zip(weighted) {
                if wi == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let theta = scale * ui;
                let rot = Complex64::new(0.0, theta * h).exp();
                let mut z = Complex64::new(0.0, 0.0);
                for (j, o) in out.iter_mut().enumerate() {
                    if j % RESEED == 0 {
                        z = Complex64::new(0.0, theta * (v0 + h * j as f64)).exp() * wi;
                    }
                    *o += z;
                    z *= rot;
                }
            }
        } else {
            for (o, &vj) in out.iter_mut().zip(vp) {
                *o = u
                    .iter()
                    .zip(weighted)
                    .map(|(&ui, &wi)| wi * Complex64::new(0.0, scale * ui * vj).exp())
                    .sum();
            }
        }
        return Ok(());
    }
    let ml = MlEvaluator::new(ctx);
    let ia = ctx.i_pow_alpha() * scale;
    let up: Vec<f64> = u.iter().map(|&x| ctx.pow(x)).collect();
    for (o, &vj) in out.iter_mut().zip(vp) {
        let pv = ctx.pow(vj);
        let mut acc = Complex64::new(0.0, 0.0);
        for (&pu, &wi) in up.iter().zip(weighted) {
            acc += wi * ml.eval(ia * (pu * pv))?;
        }
        *o = acc;
    }
    Ok(())
}

/// `‖a − b‖₂ / ‖b‖₂` over paired samples.
pub fn relative_l2(a: &[Complex64], b: &[Complex64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum();
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
    Ok(if den > 0.0 {
        (num / den).sqrt()
    } else {
        num.sqrt()
    })
}
