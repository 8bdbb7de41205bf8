#![allow(clippy::excessive_precision)]

use fractal_fourier::special::{gamma, mittag_leffler, MittagLeffler, MlMethod};
use fractal_fourier::{kernel, AlphaContext, Complex64, KernelConvention, KernelSign};

/// (alpha, Re z, Im z, Re E, Im E), 60-digit series sums. Several points sit in
/// the Taylor/asymptotic crossover band where f64 evaluation is good to ~1e-6.
const REFERENCE: &[(f64, f64, f64, f64, f64)] = &[
    (
        0.7,
        -6.7493800332184997756,
        5.0419373773516289295,
        0.032881957654343968705,
        0.027505433862446811806,
    ),
    (
        0.5,
        -4.2426406871192851464,
        4.2426406871192851464,
        0.067372993860195328313,
        0.065531319819531821612,
    ),
    (
        0.9,
        -12.48440509641427161,
        27.278922804770450862,
        0.001317326017426027133,
        0.0033269594304734234721,
    ),
    (0.3, -3.0, 0.0, 0.21180263319643578203, 0.0),
    (
        0.8,
        -9.4222234066865809308,
        -3.3498815015590508692,
        0.022829972376759445008,
        -0.0093655637566885936197,
    ),
    (
        0.5,
        2.8284271247461900976,
        2.8284271247461900976,
        -2.0178450715453249991,
        -0.47942766282794620444,
    ),
    (
        0.6,
        11.464037869507272275,
        3.546242479936074774,
        4.7641497754079449444e+23,
        -1.4889232245353659269e+24,
    ),
];

#[test]
fn matches_high_precision_reference() {
    for &(a, zr, zi, er, ei) in REFERENCE {
        let ctx = AlphaContext::new(a).unwrap();
        let v = mittag_leffler(&ctx, Complex64::new(zr, zi)).unwrap();
        let exact = Complex64::new(er, ei);
        let rel = (v - exact).norm() / exact.norm();
        assert!(rel < 2e-6, "alpha={a} z=({zr},{zi}) rel={rel:e}");
    }
}

#[test]
fn classical_reduction_on_complex_disc() {
    let ctx = AlphaContext::new(1.0).unwrap();
    for i in 0..10 {
        for j in 0..10 {
            let z = Complex64::from_polar(2.0 * (i + 1) as f64, 0.6283 * j as f64);
            let v = mittag_leffler(&ctx, z).unwrap();
            assert!((v - z.exp()).norm() / z.exp().norm() <= 1e-12);
        }
    }
}

#[test]
fn half_order_against_erfc() {
    let ctx = AlphaContext::new(0.5).unwrap();
    let mut z = -3.0;
    while z <= 3.0 {
        let v = mittag_leffler(&ctx, Complex64::new(z, 0.0)).unwrap();
        let oracle = (z * z).exp() * libm::erfc(-z);
        assert!(((v.re - oracle) / oracle).abs() <= 1e-10, "z={z}");
        assert_eq!(v.im, 0.0);
        z += 0.05;
    }
}

#[test]
fn gamma_examples() {
    assert_eq!(gamma(1.0).unwrap(), 1.0);
    assert_eq!(gamma(2.0).unwrap(), 1.0);
    assert!((gamma(1.5).unwrap() - 0.8862269255).abs() < 1e-10);
}

#[test]
fn kernel_half_order_example() {
    let ctx = AlphaContext::new(0.5).unwrap();
    let k = kernel(&ctx, 1.0, 1.0, KernelSign::Minus, KernelConvention::Case3).unwrap();
    let exact = Complex64::new(0.14795275951201582423, -0.13117971708421785359);
    assert!((k - exact).norm() < 1e-12);
}

#[test]
fn kernel_conjugate_symmetry_is_classical_only() {
    let c1 = AlphaContext::new(1.0).unwrap();
    let k_plus = kernel(&c1, 0.8, 1.3, KernelSign::Plus, KernelConvention::Case3).unwrap();
    let k_minus = kernel(&c1, 0.8, 1.3, KernelSign::Minus, KernelConvention::Case3).unwrap();
    assert!((k_plus.conj() - k_minus).norm() < 1e-12);

    // at α < 1 the rotated argument is not a conjugate; the gap is measurable
    let c = AlphaContext::new(0.6).unwrap();
    let k_plus = kernel(&c, 0.8, 1.3, KernelSign::Plus, KernelConvention::Case3).unwrap();
    let k_minus = kernel(&c, 0.8, 1.3, KernelSign::Minus, KernelConvention::Case3).unwrap();
    assert!((k_plus.conj() - k_minus).norm() > 1e-3);
}

#[test]
fn method_selection() {
    let ml = MittagLeffler::default();
    let c = AlphaContext::new(0.5).unwrap();
    assert_eq!(
        ml.eval(&c, Complex64::new(1.0, 0.0)).unwrap().method,
        MlMethod::Taylor
    );
    assert_eq!(
        ml.eval(&c, Complex64::new(-10.0, 1.0)).unwrap().method,
        MlMethod::Asymptotic
    );
    let c1 = AlphaContext::new(1.0).unwrap();
    assert_eq!(
        ml.eval(&c1, Complex64::new(-100.0, 1.0)).unwrap().method,
        MlMethod::Exponential
    );
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn pow_alpha_is_odd(a in 0.01f64..=1.0, x in -1e6f64..1e6) {
            let ctx = AlphaContext::new(a).unwrap();
            prop_assert_eq!(ctx.pow(-x), -ctx.pow(x));
        }

        #[test]
        fn zero_maps_to_one(a in 0.01f64..=1.0) {
            let ctx = AlphaContext::new(a).unwrap();
            prop_assert_eq!(mittag_leffler(&ctx, Complex64::new(0.0, 0.0)).unwrap(), Complex64::new(1.0, 0.0));
        }
    }
}
