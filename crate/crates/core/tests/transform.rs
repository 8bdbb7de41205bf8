use fractal_fourier::numeric::Grid;
use fractal_fourier::transform::*;
use fractal_fourier::{AlphaContext, Complex64, IdentityTag, KernelConvention};
use proptest::prelude::*;

fn square(x: f64) -> fractal_fourier::Result<Complex64> {
    Ok(Complex64::new(if x < 0.0 { -1.0 } else { 1.0 }, 0.0))
}

fn gibbs_overshoot(n: usize) -> f64 {
    let ctx = AlphaContext::new(1.0).unwrap();
    let c = series_coefficients(&ctx, square, 1.0, n, &SeriesOptions::default()).unwrap();
    let xs: Vec<f64> = (1..=2000).map(|i| i as f64 * 1e-4).collect();
    let peak = series_partial_sums(&ctx, &c, &xs)
        .unwrap()
        .iter()
        .map(|v| v.re)
        .fold(f64::MIN, f64::max);
    (peak - 1.0) / 2.0
}

#[test]
fn gibbs_at_64_terms() {
    let o = gibbs_overshoot(64);
    assert!((o - 0.0895).abs() < 0.002, "{o}");
}

#[test]
fn square_wave_coefficients() {
    let ctx = AlphaContext::new(1.0).unwrap();
    let c = series_coefficients(&ctx, square, 2.0, 5, &SeriesOptions::default()).unwrap();
    for n in -5i64..=5 {
        let want = if n % 2 == 0 {
            0.0
        } else {
            -2.0 / (std::f64::consts::PI * n as f64)
        };
        let got = c.get(n).unwrap();
        assert!(
            got.re.abs() < 1e-12 && (got.im - want).abs() < 1e-12,
            "n={n} {got}"
        );
    }
}

#[test]
fn constant_series_every_alpha() {
    for alpha in [0.1, 0.35, 0.5, 0.9, 1.0] {
        let ctx = AlphaContext::new(alpha).unwrap();
        let c = series_coefficients(
            &ctx,
            |_| Ok(Complex64::new(1.0, 0.0)),
            3.0,
            0,
            &SeriesOptions::default(),
        )
        .unwrap();
        for x in [-2.5, 0.0, 1.0, 2.9] {
            assert!((series_partial_sum(&ctx, &c, x).unwrap() - 1.0).norm() < 1e-12);
        }
    }
}

#[test]
fn classical_identities_subset() {
    let ctx = AlphaContext::new(1.0).unwrap();
    let inputs = NumericInputs::standard(&ctx);
    let tol = NumericTolerance::default();
    let fast = [
        IdentityTag::Linearity,
        IdentityTag::InverseLinearity,
        IdentityTag::Shift,
        IdentityTag::Scaling,
        IdentityTag::Modulation,
        IdentityTag::Derivative,
        IdentityTag::Convolution,
        IdentityTag::Commutativity,
        IdentityTag::Distributivity,
    ];
    for id in fast {
        let r = verify_numeric(&ctx, KernelConvention::Case3, id, &inputs, &tol).unwrap();
        assert!(r.asserted && r.pass, "{id:?} {r:?}");
    }
    let shift = verify_numeric(
        &ctx,
        KernelConvention::Case3,
        IdentityTag::Shift,
        &inputs,
        &tol,
    )
    .unwrap();
    assert_eq!(shift.variant, "minus");
    let deriv = verify_numeric(
        &ctx,
        KernelConvention::Case3,
        IdentityTag::Derivative,
        &inputs,
        &tol,
    )
    .unwrap();
    assert_eq!(deriv.variant, "plus");
}

#[test]
fn fractional_identities_are_reported() {
    let ctx = AlphaContext::new(0.7).unwrap();
    let inputs = NumericInputs::standard(&ctx);
    let tol = NumericTolerance::default();
    for id in [
        IdentityTag::Shift,
        IdentityTag::Derivative,
        IdentityTag::Uniqueness,
    ] {
        let r = verify_numeric(&ctx, KernelConvention::Case3, id, &inputs, &tol).unwrap();
        assert!(!r.asserted && r.ok(), "{id:?}");
        assert!(r.max_abs_discrepancy.is_finite());
    }
    let lin = verify_numeric(
        &ctx,
        KernelConvention::Case3,
        IdentityTag::Linearity,
        &inputs,
        &tol,
    )
    .unwrap();
    assert!(lin.asserted && lin.pass && lin.max_abs_discrepancy <= 1e-12);
}

#[test]
fn round_trip_below_one_reported() {
    let ctx = AlphaContext::new(0.8).unwrap();
    let f = NumericSignal::causal_ml(&ctx, -1.0);
    let (lo, hi) = f.span();
    let opts = TransformOptions {
        nodes: 512,
        max_nodes: 4096,
        ..Default::default()
    };
    let g = Grid::uniform(-8.0, 8.0, 257).unwrap();
    let s = forward_on(
        &ctx,
        KernelConvention::Case3,
        |x| f.eval(x),
        lo,
        hi,
        &g,
        &opts,
    )
    .unwrap();
    let xs = Grid::uniform(0.1, 5.0, 50).unwrap();
    let inv = inverse(
        &s,
        &xs,
        &InverseOptions {
            nodes: 512,
            max_nodes: 4096,
            ..Default::default()
        },
    )
    .unwrap();
    let want: Vec<Complex64> = xs.points().iter().map(|&x| f.eval(x).unwrap()).collect();
    let err = relative_l2(inv.signal.values(), &want).unwrap();
    assert!(err.is_finite() && err > 0.0);
}

fn alpha() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), 0.3f64..1.0]
}

fn convention() -> impl Strategy<Value = KernelConvention> {
    prop_oneof![
        Just(KernelConvention::Case1),
        Just(KernelConvention::Case2),
        Just(KernelConvention::Case3)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn forward_is_linear(al in alpha(), conv in convention(), a in -2.0f64..2.0, b in -2.0f64..2.0, w in 0.3f64..3.0) {
        let ctx = AlphaContext::new(al).unwrap();
        let g = Grid::uniform(-2.0, 2.0, 9).unwrap();
        let opts = TransformOptions { truncation: 6.0, nodes: 128, max_nodes: 2048, ..Default::default() };
        let f = |x: f64| Ok(Complex64::new((-x * x / w).exp(), 0.0));
        let h = |x: f64| Ok(Complex64::new(0.0, x * (-x.abs()).exp()));
        let sf = forward(&ctx, conv, f, &g, &opts).unwrap();
        let sh = forward(&ctx, conv, h, &g, &opts).unwrap();
        let sc = forward(&ctx, conv, |x| Ok(f(x)? * a + h(x)? * b), &g, &opts).unwrap();
        for ((p, q), r) in sf.values().iter().zip(sh.values()).zip(sc.values()) {
            prop_assert!((p * a + q * b - r).norm() <= 1e-12 * r.norm().max(1.0));
        }
    }

    #[test]
    fn zero_frequency_is_mass(al in alpha(), conv in convention()) {
        let ctx = AlphaContext::new(al).unwrap();
        let f = NumericSignal::causal_ml(&ctx, -1.0);
        let (lo, hi) = f.span();
        let g = Grid::new(vec![0.0, 1.0]).unwrap();
        let opts = TransformOptions { nodes: 256, max_nodes: 1024, ..Default::default() };
        let s = forward_on(&ctx, conv, |x| f.eval(x), lo, hi, &g, &opts).unwrap();
        let tail = f.eval(40.0).unwrap();
        let d = (s.values()[0] - (1.0 - tail)).norm();
        // E_α(−x^α) is good to ~1e-6 relative in the series/asymptotic crossover band
        prop_assert!(d <= 1e-6, "{}", d);
    }
}
