#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Neg;

use num_complex::Complex64;

use crate::alpha::AlphaContext;
use crate::error::{Error, Result};
use crate::special::{mittag_leffler, MlEvaluator};

/// Where an expression lives. Every term of one [`FormalExpr`] shares it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Support {
    /// `[anchor, ∞)`.
    HalfLine,
    /// `[a, b]`, containing the anchor.
    Interval(f64, f64),
}

/// One atom `coeff · (x−x₀)^{kα} · E_α(λ (x−x₀)^α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormalTerm {
    pub coeff: Complex64,
    pub k: u32,
    pub lambda: Complex64,
}

impl FormalTerm {
    pub fn new(coeff: Complex64, k: u32, lambda: Complex64) -> Self {
        Self { coeff, k, lambda }
    }

    /// Value at offset `u = x − x₀ ≥ 0`.
    pub fn eval_at_offset(&self, ctx: &AlphaContext, u: f64) -> Result<Complex64> {
        let ua = ctx.pow(u);
        let mono = if self.k == 0 {
            1.0
        } else {
            ua.powi(self.k as i32)
        };
        if self.lambda == Complex64::new(0.0, 0.0) {
            return Ok(self.coeff * mono);
        }
        Ok(self.coeff * mono * mittag_leffler(ctx, self.lambda * ua)?)
    }
}

fn cmp_key(a: &FormalTerm, b: &FormalTerm) -> Ordering {
    a.k.cmp(&b.k)
        .then(a.lambda.re.total_cmp(&b.lambda.re))
        .then(a.lambda.im.total_cmp(&b.lambda.im))
}

const CANCEL_EPS: f64 = 32.0 * f64::EPSILON;

fn normalize_zero(z: Complex64) -> Complex64 {
    // +0.0 and −0.0 must merge as like terms
    Complex64::new(z.re + 0.0, z.im + 0.0)
}

/// Finite sum of [`FormalTerm`]s in canonical order: sorted by `(k, λ)`,
/// like terms merged, zero coefficients dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalExpr {
    anchor: f64,
    support: Support,
    terms: Vec<FormalTerm>,
}

impl FormalExpr {
    pub fn new(anchor: f64, support: Support, terms: Vec<FormalTerm>) -> Result<Self> {
        if !anchor.is_finite() {
            return Err(Error::InvalidParameter("anchor must be finite"));
        }
        if let Support::Interval(a, b) = support {
            if !(a <= anchor && anchor <= b) {
                return Err(Error::InvalidParameter(
                    "interval support must contain the anchor",
                ));
            }
        }
        let mut e = Self {
            anchor,
            support,
            terms,
        };
        e.canonicalize();
        Ok(e)
    }

    /// Causal expression on `[0, ∞)`.
    pub fn causal(terms: Vec<FormalTerm>) -> Self {
        let mut e = Self {
            anchor: 0.0,
            support: Support::HalfLine,
            terms,
        };
        e.canonicalize();
        e
    }

    pub fn zero_like(&self) -> Self {
        Self {
            anchor: self.anchor,
            support: self.support,
            terms: Vec::new(),
        }
    }

    pub fn anchor(&self) -> f64 {
        self.anchor
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn terms(&self) -> &[FormalTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn with_terms(&self, terms: Vec<FormalTerm>) -> Self {
        let mut e = Self {
            anchor: self.anchor,
            support: self.support,
            terms,
        };
        e.canonicalize();
        e
    }

    fn canonicalize(&mut self) {
        for t in &mut self.terms {
            t.lambda = normalize_zero(t.lambda);
        }
        self.terms.sort_by(cmp_key);
        let mut merged: Vec<FormalTerm> = Vec::with_capacity(self.terms.len());
        // summed magnitudes of the merged parts; a sum that cancels to within
        // rounding of them is an exact zero
        let mut mass: Vec<f64> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match (merged.last_mut(), mass.last_mut()) {
                (Some(last), Some(m)) if last.k == t.k && last.lambda == t.lambda => {
                    last.coeff += t.coeff;
                    *m += t.coeff.norm();
                }
                _ => {
                    mass.push(t.coeff.norm());
                    merged.push(t);
                }
            }
        }
        self.terms = merged
            .into_iter()
            .zip(mass)
            .filter(|(t, m)| t.coeff.norm() > CANCEL_EPS * m)
            .map(|(t, _)| t)
            .collect();
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.anchor != other.anchor || self.support != other.support {
            return Err(Error::SupportMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Ok(self.with_terms(terms))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.with_terms(
            self.terms
                .iter()
                .map(|t| FormalTerm {
                    coeff: t.coeff * c,
                    ..*t
                })
                .collect(),
        )
    }

    /// Formal exponential law: every `λ` becomes `λ + μ`.
    ///
    /// Exact in the algebra; pointwise only at α = 1.
    pub fn mul_exponential(&self, mu: Complex64) -> Self {
        self.with_terms(
            self.terms
                .iter()
                .map(|t| FormalTerm {
                    lambda: t.lambda + mu,
                    ..*t
                })
                .collect(),
        )
    }

    /// `f(a·x)` for `a > 0`, anchor 0 only: `x^{kα} ↦ a^{kα} x^{kα}`, `λ ↦ λ a^α`.
    pub fn dilate(&self, ctx: &AlphaContext, a: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::InvalidParameter("dilation factor must be positive"));
        }
        if self.anchor != 0.0 || self.support != Support::HalfLine {
            return Err(Error::NotApplicable(
                "dilation needs a causal expression anchored at 0",
            ));
        }
        let aa = ctx.pow(a);
        Ok(self.with_terms(
            self.terms
                .iter()
                .map(|t| FormalTerm {
                    coeff: t.coeff * aa.powi(t.k as i32),
                    k: t.k,
                    lambda: t.lambda * aa,
                })
                .collect(),
        ))
    }

    /// Translate the anchor by `c`, i.e. `f(x − c)`.
    pub fn shift(&self, c: f64) -> Self {
        let support = match self.support {
            Support::HalfLine => Support::HalfLine,
            Support::Interval(a, b) => Support::Interval(a + c, b + c),
        };
        Self {
            anchor: self.anchor + c,
            support,
            terms: self.terms.clone(),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        match self.support {
            Support::HalfLine => x >= self.anchor,
            Support::Interval(a, b) => a <= x && x <= b,
        }
    }

    /// Smallest interval outside which the expression vanishes
    /// (`hi = ∞` on a half-line).
    pub fn span(&self) -> (f64, f64) {
        match self.support {
            Support::HalfLine => (self.anchor, f64::INFINITY),
            Support::Interval(a, b) => (a.max(self.anchor), b),
        }
    }

    /// The expression as a function on the whole line, zero outside its
    /// support, using a cached Mittag-Leffler evaluator.
    pub fn eval_extended(&self, ml: &MlEvaluator, x: f64) -> Result<Complex64> {
        let u = x - self.anchor;
        if !self.contains(x) || u < 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let ctx = ml.context();
        let ua = ctx.pow(u);
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            let mono = if t.k == 0 { 1.0 } else { ua.powi(t.k as i32) };
            let ml_part = if t.lambda == Complex64::new(0.0, 0.0) {
                Complex64::new(1.0, 0.0)
            } else {
                ml.eval(t.lambda * ua)?
            };
            acc += t.coeff * mono * ml_part;
        }
        Ok(acc)
    }

    /// Pointwise value via the special-function layer.
    pub fn eval(&self, ctx: &AlphaContext, x: f64) -> Result<Complex64> {
        if !self.contains(x) {
            return Err(Error::OutsideSupport(x));
        }
        let u = x - self.anchor;
        if u < 0.0 {
            return Err(Error::OutsideSupport(x));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            acc += t.eval_at_offset(ctx, u)?;
        }
        Ok(acc)
    }

    /// Largest coefficient magnitude (0 for the empty expression).
    pub fn coeff_norm(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff.norm())
            .fold(0.0, f64::max)
    }

    /// Drop terms whose coefficient is below `rel_tol` times the largest.
    pub fn pruned(&self, rel_tol: f64) -> Self {
        let cut = rel_tol * self.coeff_norm();
        self.with_terms(
            self.terms
                .iter()
                .copied()
                .filter(|t| t.coeff.norm() > cut)
                .collect(),
        )
    }
}

impl Neg for &FormalExpr {
    type Output = FormalExpr;

    fn neg(self) -> FormalExpr {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Largest coefficient difference between two expressions, matched by
/// `(k, λ)`; unmatched terms count with their full magnitude. Divided by the
/// larger coefficient norm (or 1 if both are tiny).
pub fn coefficient_discrepancy(a: &FormalExpr, b: &FormalExpr) -> f64 {
    let scale = a.coeff_norm().max(b.coeff_norm());
    let mut worst: f64 = 0.0;
    let (mut i, mut j) = (0, 0);
    let (ta, tb) = (a.terms(), b.terms());
    while i < ta.len() || j < tb.len() {
        let ord = match (ta.get(i), tb.get(j)) {
            (Some(x), Some(y)) => cmp_key(x, y),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Equal => {
                worst = worst.max((ta[i].coeff - tb[j].coeff).norm());
                i += 1;
                j += 1;
            }
            Ordering::Less => {
                worst = worst.max(ta[i].coeff.norm());
                i += 1;
            }
            Ordering::Greater => {
                worst = worst.max(tb[j].coeff.norm());
                j += 1;
            }
        }
    }
    if scale > 0.0 {
        worst / scale
    } else {
        worst
    }
}
