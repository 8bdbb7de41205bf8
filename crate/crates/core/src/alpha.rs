#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::gamma;

/// The fractal order α together with the constants every kernel needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaContext {
    alpha: f64,
    h0: f64,
    i_pow_alpha: Complex64,
    gamma_1p: f64,
}

impl AlphaContext {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidAlpha(alpha));
        }
        if alpha == 1.0 {
            return Ok(Self {
                alpha,
                h0: 2.0 * PI,
                i_pow_alpha: Complex64::new(0.0, 1.0),
                gamma_1p: 1.0,
            });
        }
        let gamma_1p = gamma(1.0 + alpha)?;
        let h0 = (2.0 * PI).powf(alpha) / gamma_1p;
        let (s, c) = (0.5 * PI * alpha).sin_cos();
        Ok(Self {
            alpha,
            h0,
            i_pow_alpha: Complex64::new(c, s),
            gamma_1p,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `(2π)^α / Γ(1+α)`.
    pub fn h0(&self) -> f64 {
        self.h0
    }

    /// `exp(iπα/2)`.
    pub fn i_pow_alpha(&self) -> Complex64 {
        self.i_pow_alpha
    }

    /// `Γ(1+α)`.
    pub fn gamma_1p(&self) -> f64 {
        self.gamma_1p
    }

    pub fn is_classical(&self) -> bool {
        self.alpha == 1.0
    }

    /// `x^α` extended to negative `x` as an odd function.
    pub fn pow(&self, x: f64) -> f64 {
        pow_alpha(self.alpha, x)
    }

    /// The transform variable `s = i^α h₀ ω^α`.
    pub fn s_of(&self, omega: f64) -> Complex64 {
        self.i_pow_alpha * (self.h0 * self.pow(omega))
    }
}

/// `sign(x)·|x|^α`; exact identity at α = 1.
pub fn pow_alpha(alpha: f64, x: f64) -> f64 {
    if alpha == 1.0 || x == 0.0 {
        return x;
    }
    let m = x.abs().powf(alpha);
    if x < 0.0 {
        -m
    } else {
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_constants_are_exact() {
        let ctx = AlphaContext::new(1.0).unwrap();
        assert_eq!(ctx.h0(), 2.0 * PI);
        assert_eq!(ctx.i_pow_alpha(), Complex64::new(0.0, 1.0));
    }

    #[test]
    fn rejects_out_of_range() {
        for a in [0.0, -0.5, 1.0000001, f64::NAN] {
            assert!(AlphaContext::new(a).is_err());
        }
    }

    #[test]
    fn derived_constants() {
        let ctx = AlphaContext::new(0.5).unwrap();
        assert!((ctx.i_pow_alpha().norm() - 1.0).abs() < 1e-15);
        // (2π)^0.5 / Γ(1.5) = sqrt(2π) / (sqrt(π)/2) = 2 sqrt(2)
        assert!((ctx.h0() - 2.0 * 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn pow_alpha_examples() {
        assert!((pow_alpha(0.5, 4.0) - 2.0).abs() < 1e-15);
        assert!((pow_alpha(0.5, -4.0) + 2.0).abs() < 1e-15);
        assert_eq!(pow_alpha(1.0, -3.2), -3.2);
        assert_eq!(pow_alpha(0.3, 0.0), 0.0);
    }
}
