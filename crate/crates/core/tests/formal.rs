use fractal_fourier::formal::*;
use fractal_fourier::{AlphaContext, Complex64, IdentityTag};
use proptest::prelude::*;

fn complex(lo: f64, hi: f64) -> impl Strategy<Value = Complex64> {
    (lo..hi, lo..hi).prop_map(|(re, im)| Complex64::new(re, im))
}

fn lambda() -> impl Strategy<Value = Complex64> {
    prop_oneof![
        1 => Just(Complex64::new(0.0, 0.0)),
        3 => (0.5f64..3.0, -3.0f64..3.0).prop_map(|(r, t)| Complex64::from_polar(r, t)),
    ]
}

fn term() -> impl Strategy<Value = FormalTerm> {
    (complex(-2.0, 2.0), 0u32..=6, lambda()).prop_map(|(c, k, l)| FormalTerm::new(c, k, l))
}

fn expr() -> impl Strategy<Value = FormalExpr> {
    (prop::collection::vec(term(), 1..=8), -2.0f64..2.0)
        .prop_map(|(terms, anchor)| FormalExpr::new(anchor, Support::HalfLine, terms).unwrap())
}

fn decaying_causal() -> impl Strategy<Value = FormalExpr> {
    let t = (complex(-2.0, 2.0), 0u32..=3, (-3.0f64..-0.5, -2.0f64..2.0))
        .prop_map(|(c, k, (re, im))| FormalTerm::new(c, k, Complex64::new(re, im)));
    prop::collection::vec(t, 1..=4).prop_map(FormalExpr::causal)
}

fn ml_mixture() -> impl Strategy<Value = FormalExpr> {
    let t = (complex(-2.0, 2.0), (-3.0f64..-0.5, -2.0f64..2.0))
        .prop_map(|(c, (re, im))| FormalTerm::new(c, 0, Complex64::new(re, im)));
    prop::collection::vec(t, 1..=4).prop_map(FormalExpr::causal)
}

fn alpha() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), 0.2f64..1.0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn derivative_inverts_antiderivative(e in expr(), a in alpha()) {
        let ctx = AlphaContext::new(a).unwrap();
        let back = lf_derivative(&ctx, &lf_antiderivative(&ctx, &e).unwrap()).unwrap();
        prop_assert!(coefficient_discrepancy(&back, &e) <= 1e-12);
    }

    #[test]
    fn canonical_form_is_idempotent(e in expr()) {
        let again = FormalExpr::new(e.anchor(), e.support(), e.terms().to_vec()).unwrap();
        prop_assert_eq!(&again, &e);
        let mut reversed = e.terms().to_vec();
        reversed.reverse();
        prop_assert_eq!(FormalExpr::new(e.anchor(), e.support(), reversed).unwrap(), e);
    }

    #[test]
    fn derivative_is_linear(f in expr(), g in expr(), c in complex(-3.0, 3.0), a in alpha()) {
        let ctx = AlphaContext::new(a).unwrap();
        let g = FormalExpr::new(f.anchor(), Support::HalfLine, g.terms().to_vec()).unwrap();
        let lhs = lf_derivative(&ctx, &f.scale(c).add(&g).unwrap()).unwrap();
        let rhs = lf_derivative(&ctx, &f).unwrap().scale(c).add(&lf_derivative(&ctx, &g).unwrap()).unwrap();
        prop_assert!(coefficient_discrepancy(&lhs, &rhs) <= 1e-12);
    }

    #[test]
    fn transform_round_trip(e in decaying_causal(), a in alpha()) {
        let ctx = AlphaContext::new(a).unwrap();
        let back = invert_closed_form(&ctx, &transform_closed_form(&ctx, &e).unwrap()).unwrap();
        prop_assert!(coefficient_discrepancy(&back, &e) <= 1e-10);
    }

    #[test]
    fn convolution_theorem(f in ml_mixture(), g in ml_mixture(), a in alpha()) {
        let ctx = AlphaContext::new(a).unwrap();
        let conv = convolve_formal(&ctx, &f, &g).unwrap();
        let lhs = transform_closed_form(&ctx, &conv).unwrap();
        let rhs = transform_closed_form(&ctx, &f).unwrap().mul(&transform_closed_form(&ctx, &g).unwrap());
        for w in [-2.0, -0.3, 0.0, 0.7, 3.0] {
            let (l, r) = (lhs.eval(&ctx, w), rhs.eval(&ctx, w));
            prop_assert!((l - r).norm() <= 1e-8 * r.norm().max(1.0), "omega={} {} {}", w, l, r);
        }
    }

    #[test]
    fn definite_integral_is_additive(e in expr(), a in alpha(), s in 0.1f64..2.0, t in 0.1f64..2.0) {
        let ctx = AlphaContext::new(a).unwrap();
        let x0 = e.anchor();
        let whole = definite_integral(&ctx, &e, x0, x0 + s + t).unwrap();
        let parts = definite_integral(&ctx, &e, x0, x0 + s).unwrap() + definite_integral(&ctx, &e, x0 + s, x0 + s + t).unwrap();
        prop_assert!((whole - parts).norm() <= 1e-9 * whole.norm().max(1.0));
        let flipped = definite_integral(&ctx, &e, x0 + s, x0).unwrap();
        let forward = definite_integral(&ctx, &e, x0, x0 + s).unwrap();
        prop_assert!((flipped + forward).norm() <= 1e-12 * forward.norm().max(1.0));
    }
}

#[test]
fn theorem_suite_on_ml_family() {
    for a in [0.25, 0.5, 0.75, 1.0] {
        let ctx = AlphaContext::new(a).unwrap();
        let exprs = vec![
            FormalExpr::causal(vec![FormalTerm::new(
                Complex64::new(1.0, 0.0),
                0,
                Complex64::new(-1.0, 0.0),
            )]),
            FormalExpr::causal(vec![
                FormalTerm::new(Complex64::new(2.0, -1.0), 0, Complex64::new(-2.0, 0.5)),
                FormalTerm::new(Complex64::new(0.5, 0.0), 0, Complex64::new(-0.7, 0.0)),
            ]),
            FormalExpr::causal(vec![FormalTerm::new(
                Complex64::new(1.0, 0.0),
                0,
                Complex64::new(-3.0, 0.0),
            )]),
        ];
        let inputs = FormalInputs::new(exprs);
        for id in IdentityTag::ALL {
            if id == IdentityTag::Parseval {
                assert!(verify_formal_identity(&ctx, id, &inputs).is_err());
                continue;
            }
            let r = verify_formal_identity(&ctx, id, &inputs).unwrap();
            assert!(r.pass, "alpha={a} {id:?} {r:?}");
            assert!(r.max_abs_discrepancy <= FORMAL_TOLERANCE);
        }
    }
}

#[test]
fn printed_variants_fail_classically() {
    let ctx = AlphaContext::new(1.0).unwrap();
    let e = FormalExpr::causal(vec![FormalTerm::new(
        Complex64::new(1.0, 0.0),
        0,
        Complex64::new(-1.0, 0.0),
    )]);
    let inputs = FormalInputs::new(vec![e]);
    let cases = [
        (IdentityTag::Shift, "printed_plus_without_h0"),
        (IdentityTag::Modulation, "printed_without_h0"),
        (IdentityTag::Derivative, "printed_minus"),
    ];
    for (id, printed) in cases {
        let r = verify_formal_identity(&ctx, id, &inputs).unwrap();
        let v = r.variants.iter().find(|v| v.name == printed).unwrap();
        assert!(v.discrepancy > 1e-3, "{id:?}: {}", v.discrepancy);
        assert_ne!(r.variant, printed);
    }
}

#[test]
fn classical_closed_form() {
    let ctx = AlphaContext::new(1.0).unwrap();
    let e = FormalExpr::causal(vec![FormalTerm::new(
        Complex64::new(1.0, 0.0),
        0,
        Complex64::new(-1.0, 0.0),
    )]);
    let s = transform_closed_form(&ctx, &e).unwrap();
    for w in [-3.0, 0.0, 0.5, 1.0] {
        let want = Complex64::new(1.0, 0.0) / Complex64::new(1.0, 2.0 * std::f64::consts::PI * w);
        assert!((s.eval(&ctx, w) - want).norm() < 1e-14);
    }
}
