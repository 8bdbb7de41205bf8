#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::alpha::AlphaContext;
use crate::error::{Error, Result};
use crate::numeric::{QuadratureRule, SampledSignal, SupportHint};

/// Settings for [`convolve_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvolveOptions {
    /// Nodes of the matched rule over each `[0, x]`.
    pub nodes: usize,
}

impl Default for ConvolveOptions {
    fn default() -> Self {
        Self { nodes: 64 }
    }
}

/// Causal convolution `(1/Γ(1+α))∫_0^x f₁(t) f₂(x−t) (dt)^α` at every grid
/// point, with cubic interpolation of both factors (zero before the grid).
pub fn convolve_numeric(
    ctx: &AlphaContext,
    f1: &SampledSignal,
    f2: &SampledSignal,
    opts: &ConvolveOptions,
) -> Result<SampledSignal> {
    if f1.grid() != f2.grid() {
        return Err(Error::GridMismatch);
    }
    let grid = f1.grid();
    if grid.first() < 0.0 {
        return Err(Error::InvalidParameter(
            "convolution needs a causal grid starting at x ≥ 0",
        ));
    }
    // a rule on [0, 1] rescales to [0, x]: nodes ×x, weights ×x^α
    let template = QuadratureRule::composite_matched(ctx, 0.0, 1.0, opts.nodes)?;
    let values: Vec<Complex64> = grid
        .points()
        .iter()
        .map(|&x| {
            if x <= 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let wx = ctx.pow(x);
            template
                .nodes()
                .iter()
                .zip(template.weights())
                .map(|(&u, &w)| {
                    let t = x * u;
                    f1.interpolate_or_zero(t) * f2.interpolate_or_zero(x - t) * (w * wx)
                })
                .sum()
        })
        .collect();
    SampledSignal::new(grid.clone(), values, SupportHint::HalfLine)
}
