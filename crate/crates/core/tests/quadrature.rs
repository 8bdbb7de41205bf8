use fractal_fourier::formal::{definite_integral, FormalExpr, FormalTerm, Support};
use fractal_fourier::numeric::*;
use fractal_fourier::special::gamma;
use fractal_fourier::{AlphaContext, Complex64};
use proptest::prelude::*;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[test]
fn monomial_moments_n32() {
    for alpha in [0.3, 0.5, 0.9] {
        let ctx = AlphaContext::new(alpha).unwrap();
        let (a, b) = (-0.5, 1.75);
        let rule = build_measure_matched_rule(&ctx, a, b, 32).unwrap();
        assert!(rule.weights().iter().all(|&w| w > 0.0));
        for k in 0..=20 {
            let kf = k as f64;
            let exact = gamma(1.0 + kf * alpha).unwrap() / gamma(1.0 + (kf + 1.0) * alpha).unwrap()
                * (b - a).powf((kf + 1.0) * alpha);
            let got = rule.integrate(|x| c(((x - a).powf(alpha)).powi(k))).re;
            assert!(
                ((got - exact) / exact).abs() <= 1e-10,
                "alpha={alpha} k={k}"
            );
        }
    }
}

#[test]
fn literal_sum_closed_form() {
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        let ctx = AlphaContext::new(alpha).unwrap();
        for n in [10usize, 100, 1000] {
            let g = Grid::uniform(0.0, 1.0, n + 1).unwrap();
            let one = SampledSignal::from_fn(g, SupportHint::Interval, |_| c(1.0)).unwrap();
            let want = (n as f64).powf(1.0 - alpha) / gamma(1.0 + alpha).unwrap();
            assert!((lf_integral_riemann(&ctx, &one).re - want).abs() <= 1e-12 * want);
            let rule = QuadratureRule::literal_riemann(&ctx, 0.0, 1.0, n).unwrap();
            assert!((rule.integrate(|_| c(1.0)).re - want).abs() <= 1e-12 * want);
        }
    }
}

#[test]
fn classical_modes_agree() {
    let ctx = AlphaContext::new(1.0).unwrap();
    let f = |x: f64| c((3.0 * x).sin() + x * x);
    let literal = QuadratureRule::literal_riemann(&ctx, 0.0, 2.0, 4096)
        .unwrap()
        .integrate(f);
    let matched = QuadratureRule::composite_matched(&ctx, 0.0, 2.0, 64)
        .unwrap()
        .integrate(f);
    assert!((literal - matched).norm() < 1e-3);
    let exact = (1.0 - 6f64.cos()) / 3.0 + 8.0 / 3.0;
    assert!((matched.re - exact).abs() < 1e-13);
}

fn single(k: u32, lambda: Complex64) -> FormalExpr {
    FormalExpr::new(
        0.5,
        Support::HalfLine,
        vec![FormalTerm::new(Complex64::new(1.0, -0.5), k, lambda)],
    )
    .unwrap()
}

fn matched_gap(ctx: &AlphaContext, e: &FormalExpr) -> f64 {
    let rule = build_measure_matched_rule(ctx, 0.5, 3.0, 32).unwrap();
    let num = lf_integral_matched(&rule, |x| e.eval(ctx, x)).unwrap();
    (num - definite_integral(ctx, e, 0.5, 3.0).unwrap()).norm()
}

#[test]
fn matched_agrees_with_formal_integral() {
    for alpha in [0.3, 0.6, 1.0] {
        let ctx = AlphaContext::new(alpha).unwrap();
        assert!(
            matched_gap(&ctx, &single(0, Complex64::new(-1.3, 0.4))) <= 1e-8,
            "alpha={alpha}"
        );
        assert!(
            matched_gap(&ctx, &single(3, c(0.0))) <= 1e-8,
            "alpha={alpha}"
        );
    }
}

#[test]
fn weighted_atoms_split_below_one() {
    // x^{kα}E_α(λx^α) with k ≥ 1: atom calculus and pointwise values part ways
    let e = single(2, Complex64::new(-1.3, 0.4));
    assert!(matched_gap(&AlphaContext::new(1.0).unwrap(), &e) <= 1e-8);
    assert!(matched_gap(&AlphaContext::new(0.5).unwrap(), &e) > 1e-3);
}

#[test]
fn reconciliation_gap_split() {
    let e = FormalExpr::causal(vec![FormalTerm::new(c(1.0), 0, c(-1.0))]);
    let opts = ReconcileOptions {
        probe: vec![1.0],
        ..Default::default()
    };
    let half = reconciliation_report(&AlphaContext::new(0.5).unwrap(), &e, &opts).unwrap();
    assert!(half.exponential_law_gap > 0.1);
    assert!(half.quadrature_gap < 1e-8);
    let one = reconciliation_report(&AlphaContext::new(1.0).unwrap(), &e, &opts).unwrap();
    assert!(one.exponential_law_gap <= 1e-10);
}

#[test]
fn difference_quotient_scaling() {
    // smooth f at α < 1: the quotient vanishes like h^{1−α}
    let ctx = AlphaContext::new(0.5).unwrap();
    let d = lf_derivative_numeric(&ctx, |x| c(x.sin()), 0.3, 1e-2).unwrap();
    assert!((d.scaling_exponent.unwrap() - 0.5).abs() < 0.01);
    // |x|^α at its kink keeps a finite quotient
    let d = lf_derivative_numeric(&ctx, |x: f64| c(x.abs().sqrt()), 0.0, 1e-2).unwrap();
    assert!(d.scaling_exponent.unwrap().abs() < 1e-12);
    assert!((d.value.re - gamma(1.5).unwrap()).abs() < 1e-12);
}

#[test]
fn holder_exponent_of_power_cusp() {
    let g = Grid::uniform(0.0, 1.0, 4097).unwrap();
    let f = SampledSignal::from_fn(g.clone(), SupportHint::Interval, |x| c(x.powf(0.4))).unwrap();
    let h = estimate_holder_exponent(&f).unwrap();
    assert!((h.alpha_hat - 0.4).abs() < 0.02, "{h:?}");
    let flat = SampledSignal::from_fn(g, SupportHint::Interval, |_| c(2.0)).unwrap();
    assert!(estimate_holder_exponent(&flat).is_err());
}

fn alpha() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), 0.15f64..1.0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orientation_flips_sign(al in alpha(), a in -3.0f64..3.0, len in 0.1f64..4.0, p in -2.0f64..2.0) {
        let ctx = AlphaContext::new(al).unwrap();
        let b = a + len;
        let f = |x: f64| Complex64::new((p * x).cos(), x);
        let fwd = QuadratureRule::composite_matched(&ctx, a, b, 48).unwrap().integrate(f);
        let back = QuadratureRule::composite_matched(&ctx, b, a, 48).unwrap().integrate(f);
        prop_assert!((fwd + back).norm() <= 1e-12 * fwd.norm().max(1.0));
        let lf = QuadratureRule::literal_riemann(&ctx, a, b, 50).unwrap().integrate(f);
        let lb = QuadratureRule::literal_riemann(&ctx, b, a, 50).unwrap().integrate(f);
        prop_assert!((lf + lb).norm() <= 1e-12 * lf.norm().max(1.0));
    }

    #[test]
    fn matched_is_linear(al in alpha(), p in -2.0f64..2.0, q in -2.0f64..2.0, s in -5.0f64..5.0) {
        let ctx = AlphaContext::new(al).unwrap();
        let rule = QuadratureRule::composite_matched(&ctx, 0.0, 2.5, 40).unwrap();
        let f = |x: f64| c((p * x).sin());
        let g = |x: f64| Complex64::new(0.0, (q * x).exp());
        let lhs = rule.integrate(|x| f(x) * s + g(x));
        let rhs = rule.integrate(f) * s + rule.integrate(g);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1.0));
    }

    #[test]
    fn interval_measure_is_translation_covariant(al in alpha(), a in -5.0f64..5.0, len in 0.01f64..10.0) {
        let ctx = AlphaContext::new(al).unwrap();
        let rule = QuadratureRule::composite_matched(&ctx, a, a + len, 16).unwrap();
        let total = rule.integrate(|_| c(1.0)).re * gamma(1.0 + al).unwrap();
        prop_assert!((total - len.powf(al)).abs() <= 1e-12 * len.powf(al));
    }

    #[test]
    fn line_integral_splits_at_zero(al in alpha(), x in 0.5f64..6.0) {
        let ctx = AlphaContext::new(al).unwrap();
        let f = |t: f64| Ok(c((-t * t).exp() * (1.0 + 0.3 * t)));
        let opts = LineOptions { nodes: 256, ..Default::default() };
        let whole = lf_integral_line(&ctx, f, x, &opts).unwrap().value;
        let pos = lf_integral_span(&ctx, f, 0.0, x, &opts).unwrap().value;
        let neg = lf_integral_span(&ctx, f, -x, 0.0, &opts).unwrap().value;
        prop_assert!((whole - pos - neg).norm() <= 1e-12);
    }
}
