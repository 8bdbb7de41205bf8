//! Local fractional derivative, antiderivative and definite integral on the
//! atom algebra.
//!
//! Atoms are never expanded into their Mittag-Leffler series. The two axioms
//!
//! ```text
//! d^α (x−x₀)^{kα}        = c_k (x−x₀)^{(k−1)α},   c_k = Γ(1+kα)/Γ(1+(k−1)α)
//! d^α E_α(λ(x−x₀)^α)     = λ E_α(λ(x−x₀)^α)
//! ```
//!
//! combined through the product rule give the derivative of every atom;
//! the antiderivative inverts it exactly.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;

use num_complex::Complex64;

use super::expr::{FormalExpr, FormalTerm, Support};
use crate::alpha::AlphaContext;
use crate::error::{Error, Result};
use crate::special::gamma;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `Γ(1+kα)/Γ(1+(k−1)α)` for `k ≥ 1`.
pub fn step_coeff(ctx: &AlphaContext, k: u32) -> Result<f64> {
    let a = ctx.alpha();
    Ok(gamma(1.0 + k as f64 * a)? / gamma(1.0 + (k as f64 - 1.0) * a)?)
}

pub fn lf_derivative(ctx: &AlphaContext, e: &FormalExpr) -> Result<FormalExpr> {
    let mut out = Vec::with_capacity(2 * e.terms().len());
    for t in e.terms() {
        if t.k > 0 {
            out.push(FormalTerm::new(
                t.coeff * step_coeff(ctx, t.k)?,
                t.k - 1,
                t.lambda,
            ));
        }
        if t.lambda != ZERO {
            out.push(FormalTerm::new(t.coeff * t.lambda, t.k, t.lambda));
        }
    }
    Ok(e.with_terms(out))
}

pub fn lf_antiderivative(ctx: &AlphaContext, e: &FormalExpr) -> Result<FormalExpr> {
    let mut out = Vec::new();
    for t in e.terms() {
        if t.lambda == ZERO {
            out.push(FormalTerm::new(
                t.coeff / step_coeff(ctx, t.k + 1)?,
                t.k + 1,
                ZERO,
            ));
            continue;
        }
        // G_0 = A_0/λ,  G_k = (A_k − c_k G_{k−1})/λ  with A_j = x^{jα} E_α(λx^α)
        let inv = t.lambda.inv();
        let mut g: Vec<Complex64> = Vec::with_capacity(t.k as usize + 1);
        g.push(inv);
        for k in 1..=t.k {
            let ck = step_coeff(ctx, k)?;
            for gj in g.iter_mut() {
                *gj *= -ck * inv;
            }
            g.push(inv);
        }
        out.extend(
            g.into_iter()
                .enumerate()
                .map(|(j, gj)| FormalTerm::new(t.coeff * gj, j as u32, t.lambda)),
        );
    }
    Ok(e.with_terms(out))
}

/// Value of an antiderivative at `+∞`: decaying atoms (`Re λ < 0`) vanish,
/// anything else has no limit in the algebra.
fn value_at_infinity(g: &FormalExpr) -> Result<Complex64> {
    if g.terms().iter().any(|t| !(t.lambda.re < 0.0)) {
        return Err(Error::NoClosedForm("non-decaying term at infinity"));
    }
    Ok(ZERO)
}

/// `g(b) − g(a)` with `g` the formal antiderivative. `b` may be `+∞` on a
/// half-line support.
pub fn definite_integral(ctx: &AlphaContext, e: &FormalExpr, a: f64, b: f64) -> Result<Complex64> {
    let g = lf_antiderivative(ctx, e)?;
    let at = |x: f64| -> Result<Complex64> {
        if x == f64::INFINITY && e.support() == Support::HalfLine {
            value_at_infinity(&g)
        } else {
            g.eval(ctx, x)
        }
    };
    for x in [a, b] {
        if !(x == f64::INFINITY && e.support() == Support::HalfLine) && !e.contains(x) {
            return Err(Error::OutsideSupport(x));
        }
    }
    if a == b {
        return Ok(ZERO);
    }
    Ok(at(b)? - at(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formal::coefficient_discrepancy;
    use alloc::vec;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn ctx(a: f64) -> AlphaContext {
        AlphaContext::new(a).unwrap()
    }

    #[test]
    fn constants_are_annihilated() {
        let one = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 0, ZERO)]);
        assert!(lf_derivative(&ctx(0.4), &one).unwrap().is_zero());
    }

    #[test]
    fn eigen_rule() {
        let e = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 0, c(-2.5))]);
        let d = lf_derivative(&ctx(0.6), &e).unwrap();
        assert_eq!(d, e.scale(c(-2.5)));
    }

    #[test]
    fn classical_product() {
        // d[x² e^{−x}] = 2x e^{−x} − x² e^{−x}
        let e = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 2, c(-1.0))]);
        let d = lf_derivative(&ctx(1.0), &e).unwrap();
        let expected = FormalExpr::causal(vec![
            FormalTerm::new(c(2.0), 1, c(-1.0)),
            FormalTerm::new(c(-1.0), 2, c(-1.0)),
        ]);
        assert_eq!(d, expected);
    }

    #[test]
    fn antiderivative_of_one() {
        let cx = ctx(0.5);
        let one = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 0, ZERO)]);
        let g = lf_antiderivative(&cx, &one).unwrap();
        let expected = FormalExpr::causal(vec![FormalTerm::new(c(1.0 / cx.gamma_1p()), 1, ZERO)]);
        assert!(coefficient_discrepancy(&g, &expected) < 1e-15);
        assert!(coefficient_discrepancy(&lf_derivative(&cx, &g).unwrap(), &one) < 1e-15);
    }

    #[test]
    fn classical_antiderivative() {
        // ∫ x e^{−x} = −(x+1) e^{−x}
        let e = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 1, c(-1.0))]);
        let g = lf_antiderivative(&ctx(1.0), &e).unwrap();
        let expected = FormalExpr::causal(vec![
            FormalTerm::new(c(-1.0), 0, c(-1.0)),
            FormalTerm::new(c(-1.0), 1, c(-1.0)),
        ]);
        assert_eq!(g, expected);
    }

    #[test]
    fn antiderivative_of_decaying_ml() {
        let e = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 0, c(-1.0))]);
        let g = lf_antiderivative(&ctx(0.3), &e).unwrap();
        assert_eq!(g, e.scale(c(-1.0)));
    }

    #[test]
    fn definite_integral_examples() {
        let cx = ctx(0.5);
        let xa = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 1, ZERO)]);
        let v = definite_integral(&cx, &xa, 0.0, 1.0).unwrap();
        assert!((v.re - 0.886_226_925_452_758).abs() < 1e-14);

        let one = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 0, ZERO)]);
        assert_eq!(definite_integral(&cx, &one, 2.0, 2.0).unwrap(), ZERO);

        let decay = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 0, c(-1.0))]);
        let v = definite_integral(&ctx(1.0), &decay, 0.0, f64::INFINITY).unwrap();
        assert!((v - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn orientation() {
        let cx = ctx(0.7);
        let e = FormalExpr::causal(vec![
            FormalTerm::new(c(1.5), 2, c(-0.5)),
            FormalTerm::new(c(-1.0), 0, ZERO),
        ]);
        let ab = definite_integral(&cx, &e, 0.3, 2.0).unwrap();
        let ba = definite_integral(&cx, &e, 2.0, 0.3).unwrap();
        assert_eq!(ab, -ba);
    }

    #[test]
    fn non_decaying_infinite_integral_fails() {
        let e = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 0, ZERO)]);
        assert!(definite_integral(&ctx(0.5), &e, 0.0, f64::INFINITY).is_err());
        assert!(matches!(
            definite_integral(&ctx(0.5), &e, -1.0, 1.0),
            Err(Error::OutsideSupport(_))
        ));
    }
}
