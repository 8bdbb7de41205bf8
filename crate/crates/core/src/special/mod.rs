//! Γ, the Mittag-Leffler function and the fractal Fourier kernels.

mod gamma;
mod mittag_leffler;

#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::PI;

use num_complex::Complex64;

pub use gamma::{gamma, ln_gamma, ln_rgamma_signed, rgamma, sin_pi};
pub use mittag_leffler::{
    mittag_leffler, mittag_leffler_real, MittagLeffler, MlEvaluator, MlMethod, MlValue,
};

use crate::alpha::AlphaContext;
use crate::error::Result;

/// The three ω-parametrizations of the local fractional Fourier kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelConvention {
    /// `E_α(∓i^α ω^α x^α)`, inverse prefactor `1/(2π)^α`.
    Case1,
    /// `E_α(∓i^α (2π)^α ω^α x^α)`, inverse prefactor 1.
    Case2,
    /// `E_α(∓i^α h₀ ω^α x^α)`, symmetric `1/Γ(1+α)` prefactors.
    Case3,
}

impl KernelConvention {
    pub const ALL: [KernelConvention; 3] = [Self::Case1, Self::Case2, Self::Case3];

    /// Factor multiplying `x^α ω^α` inside the kernel.
    pub fn scale(self, ctx: &AlphaContext) -> f64 {
        match self {
            Self::Case1 => 1.0,
            Self::Case2 => {
                if ctx.is_classical() {
                    2.0 * PI
                } else {
                    (2.0 * PI).powf(ctx.alpha())
                }
            }
            Self::Case3 => ctx.h0(),
        }
    }

    pub fn forward_prefactor(self, ctx: &AlphaContext) -> f64 {
        1.0 / ctx.gamma_1p()
    }

    pub fn inverse_prefactor(self, ctx: &AlphaContext) -> f64 {
        match self {
            Self::Case1 => {
                if ctx.is_classical() {
                    1.0 / (2.0 * PI)
                } else {
                    1.0 / (2.0 * PI).powf(ctx.alpha())
                }
            }
            Self::Case2 => 1.0,
            Self::Case3 => 1.0 / ctx.gamma_1p(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Case1 => "case1",
            Self::Case2 => "case2",
            Self::Case3 => "case3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "case1" | "Case1" | "1" => Some(Self::Case1),
            "case2" | "Case2" | "2" => Some(Self::Case2),
            "case3" | "Case3" | "3" => Some(Self::Case3),
            _ => None,
        }
    }
}

/// Direction of the kernel exponent: `-1` for the forward transform, `+1`
/// for the inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelSign {
    Minus,
    Plus,
}

impl KernelSign {
    pub fn value(self) -> f64 {
        match self {
            Self::Minus => -1.0,
            Self::Plus => 1.0,
        }
    }
}

/// Kernel argument `sign · i^α · scale · x^α · ω^α` (odd extension in x and ω).
pub fn kernel_argument(
    ctx: &AlphaContext,
    x: f64,
    omega: f64,
    sign: KernelSign,
    convention: KernelConvention,
) -> Complex64 {
    ctx.i_pow_alpha() * (sign.value() * convention.scale(ctx) * ctx.pow(x) * ctx.pow(omega))
}

/// `E_α(kernel_argument(..))`.
pub fn kernel(
    ctx: &AlphaContext,
    x: f64,
    omega: f64,
    sign: KernelSign,
    convention: KernelConvention,
) -> Result<Complex64> {
    mittag_leffler(ctx, kernel_argument(ctx, x, omega, sign, convention))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_at_zero_frequency_is_one() {
        for a in [0.3, 0.5, 1.0] {
            let ctx = AlphaContext::new(a).unwrap();
            for c in KernelConvention::ALL {
                let k = kernel(&ctx, 3.7, 0.0, KernelSign::Minus, c).unwrap();
                assert_eq!(k, Complex64::new(1.0, 0.0));
            }
        }
    }

    #[test]
    fn classical_quarter_turn() {
        let ctx = AlphaContext::new(1.0).unwrap();
        let k = kernel(&ctx, 0.25, 1.0, KernelSign::Minus, KernelConvention::Case3).unwrap();
        assert!((k - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn classical_kernel_matches_exp() {
        let ctx = AlphaContext::new(1.0).unwrap();
        for &(x, w) in &[(0.3, 2.1), (-4.0, 0.7), (12.5, -3.3)] {
            let k = kernel(&ctx, x, w, KernelSign::Plus, KernelConvention::Case3).unwrap();
            let e = Complex64::new(0.0, 2.0 * PI * x * w).exp();
            assert!((k - e).norm() < 1e-12);
            let km = kernel(&ctx, x, w, KernelSign::Minus, KernelConvention::Case3).unwrap();
            assert!((km - k.conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn prefactors() {
        let ctx = AlphaContext::new(0.6).unwrap();
        let c3 = KernelConvention::Case3;
        assert_eq!(c3.forward_prefactor(&ctx), c3.inverse_prefactor(&ctx));
        assert_eq!(KernelConvention::Case2.inverse_prefactor(&ctx), 1.0);
        assert_eq!(KernelConvention::Case1.scale(&ctx), 1.0);
    }
}
