//! Closed-form local fractional Fourier transforms of the decaying
//! Mittag-Leffler family, their inverse, and causal convolution.
//!
//! With `s = i^α h₀ ω^α`, the formal exponential law merges signal and
//! kernel into `x^{kα} E_α((λ−s)x^α)`; the antiderivative telescopes to
//!
//! ```text
//! x^{kα} E_α(λ x^α) 1_{x≥0}  ↦  Γ(1+kα) / (s − λ)^{k+1}.
//! ```

#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use num_complex::Complex64;

use super::expr::{FormalExpr, FormalTerm, Support};
use super::spectrum::{PoleTerm, RationalSpectrum};
use crate::alpha::AlphaContext;
use crate::error::{Error, Result};
use crate::special::{gamma, mittag_leffler};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn check_causal(e: &FormalExpr) -> Result<()> {
    if e.support() != Support::HalfLine {
        return Err(Error::NoClosedForm("support must be a half-line"));
    }
    if e.anchor() != 0.0 {
        return Err(Error::NoClosedForm(
            "anchor must be 0; normalize shifted inputs first",
        ));
    }
    Ok(())
}

pub fn transform_closed_form(ctx: &AlphaContext, e: &FormalExpr) -> Result<RationalSpectrum> {
    check_causal(e)?;
    let mut terms = Vec::with_capacity(e.terms().len());
    for t in e.terms() {
        if !(t.lambda.re < 0.0) {
            return Err(Error::NoClosedForm("term does not decay (Re λ ≥ 0)"));
        }
        let g = gamma(1.0 + t.k as f64 * ctx.alpha())?;
        terms.push(PoleTerm::new(t.coeff * g, -t.lambda, t.k + 1));
    }
    Ok(RationalSpectrum::from_terms(terms))
}

/// Inverse of [`transform_closed_form`] on its image.
pub fn invert_closed_form(ctx: &AlphaContext, f: &RationalSpectrum) -> Result<FormalExpr> {
    if f.constant() != ZERO {
        return Err(Error::NoClosedForm(
            "constant spectrum part has no causal preimage",
        ));
    }
    let mut terms = Vec::with_capacity(f.terms().len());
    for t in f.terms() {
        if !(t.pole.re > 0.0) {
            return Err(Error::NoClosedForm("pole outside the decaying family"));
        }
        let k = t.power - 1;
        let g = gamma(1.0 + k as f64 * ctx.alpha())?;
        terms.push(FormalTerm::new(t.coeff / g, k, -t.pole));
    }
    Ok(FormalExpr::causal(terms))
}

/// Transform of a causal expression delayed to anchor `c ≥ 0`:
/// `E_α(−i^α h₀ c^α ω^α) · F{f}(ω)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DelayedSpectrum {
    pub delay: f64,
    pub base: RationalSpectrum,
}

impl DelayedSpectrum {
    pub fn eval(&self, ctx: &AlphaContext, omega: f64) -> Result<Complex64> {
        let phase = mittag_leffler(ctx, -ctx.s_of(omega) * ctx.pow(self.delay))?;
        Ok(phase * self.base.eval(ctx, omega))
    }
}

/// Closed form for a half-line expression anchored at `c ≥ 0`, via the
/// linear change of variables `x ↦ x − c` and the formal exponential law.
pub fn transform_delayed(ctx: &AlphaContext, e: &FormalExpr) -> Result<DelayedSpectrum> {
    let c = e.anchor();
    if !(c >= 0.0) {
        return Err(Error::NoClosedForm("delay must be non-negative"));
    }
    let base = transform_closed_form(ctx, &e.shift(-c))?;
    Ok(DelayedSpectrum { delay: c, base })
}

/// Causal convolution of two Mittag-Leffler mixtures (all `k = 0`):
///
/// ```text
/// E_α(a x^α) * E_α(b x^α) = (E_α(a x^α) − E_α(b x^α)) / (a − b),   a ≠ b
/// E_α(a x^α) * E_α(a x^α) = x^α E_α(a x^α) / Γ(1+α)
/// ```
pub fn convolve_formal(ctx: &AlphaContext, f1: &FormalExpr, f2: &FormalExpr) -> Result<FormalExpr> {
    check_causal(f1)?;
    check_causal(f2)?;
    if f1.terms().iter().chain(f2.terms()).any(|t| t.k != 0) {
        return Err(Error::UnsupportedTerm(
            "convolution needs pure Mittag-Leffler terms (k = 0)",
        ));
    }
    let inv_g = 1.0 / ctx.gamma_1p();
    let mut out = Vec::new();
    for t in f1.terms() {
        for u in f2.terms() {
            let c = t.coeff * u.coeff;
            let (a, b) = (t.lambda, u.lambda);
            if a == b {
                out.push(FormalTerm::new(c * inv_g, 1, a));
            } else {
                let d = c / (a - b);
                out.push(FormalTerm::new(d, 0, a));
                out.push(FormalTerm::new(-d, 0, b));
            }
        }
    }
    Ok(FormalExpr::causal(out))
}
