//! Seeded random expression families for the formal suites.

use fractal_fourier::formal::{
    coefficient_discrepancy, lf_antiderivative, lf_derivative, FormalExpr, FormalTerm, Support,
};
use fractal_fourier::{AlphaContext, Complex64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coeff(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

/// Causal Mittag-Leffler mixtures `Σ c_j E_α(λ_j x^α)` with `Re λ_j < 0`:
/// the family on which every transform identity has a closed form.
pub fn ml_mixtures(seed: u64, count: usize) -> Vec<FormalExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=3);
            let terms = (0..n)
                .map(|_| {
                    let lambda = Complex64::new(-rng.gen_range(0.5..3.0), rng.gen_range(-2.0..2.0));
                    FormalTerm::new(coeff(&mut rng), 0, lambda)
                })
                .collect();
            FormalExpr::causal(terms)
        })
        .collect()
}

/// General expressions: up to 8 atoms `c (x−x₀)^{kα} E_α(λ(x−x₀)^α)` with
/// `k ≤ 6`, a quarter of them pure monomials (`λ = 0`).
pub fn general_exprs(seed: u64, count: usize) -> Vec<FormalExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            let anchor = rng.gen_range(-2.0..2.0);
            let terms = (0..n)
                .map(|_| {
                    let c = coeff(&mut rng);
                    let k = rng.gen_range(0..=6);
                    let lambda = if rng.gen_bool(0.25) {
                        Complex64::new(0.0, 0.0)
                    } else {
                        Complex64::from_polar(rng.gen_range(0.5..3.0), rng.gen_range(-3.1..3.1))
                    };
                    FormalTerm::new(c, k, lambda)
                })
                .collect();
            FormalExpr::new(anchor, Support::HalfLine, terms).expect("finite anchor")
        })
        .collect()
}

/// Worst coefficient discrepancy of `d(∫e) − e` over the family.
pub fn round_trip_discrepancy(
    ctx: &AlphaContext,
    exprs: &[FormalExpr],
) -> fractal_fourier::Result<f64> {
    let mut worst: f64 = 0.0;
    for e in exprs {
        let back = lf_derivative(ctx, &lf_antiderivative(ctx, e)?)?;
        worst = worst.max(coefficient_discrepancy(&back, e));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_shaped() {
        assert_eq!(ml_mixtures(7, 5), ml_mixtures(7, 5));
        assert_ne!(ml_mixtures(7, 5), ml_mixtures(8, 5));
        for e in general_exprs(3, 200) {
            assert!(!e.terms().is_empty() && e.terms().len() <= 8);
            assert!(e.terms().iter().all(|t| t.k <= 6));
        }
        for e in ml_mixtures(1, 50) {
            assert!(e.terms().iter().all(|t| t.k == 0 && t.lambda.re < 0.0));
        }
    }
}
