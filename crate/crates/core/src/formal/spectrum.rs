#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_complex::Complex64;

use crate::alpha::AlphaContext;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `coeff / (pole + s)^power`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleTerm {
    pub coeff: Complex64,
    pub pole: Complex64,
    pub power: u32,
}

impl PoleTerm {
    pub fn new(coeff: Complex64, pole: Complex64, power: u32) -> Self {
        Self { coeff, pole, power }
    }
}

fn cmp_key(a: &PoleTerm, b: &PoleTerm) -> Ordering {
    a.pole
        .re
        .total_cmp(&b.pole.re)
        .then(a.pole.im.total_cmp(&b.pole.im))
        .then(a.power.cmp(&b.power))
}

/// Rational function of `s = i^α h₀ ω^α` in partial-fraction form:
/// `constant + Σ coeff/(pole + s)^power`.
///
/// Closed-form transform images never carry a constant; it appears when a
/// spectrum is multiplied by `s`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RationalSpectrum {
    constant: Complex64,
    terms: Vec<PoleTerm>,
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

impl RationalSpectrum {
    pub fn new(constant: Complex64, terms: Vec<PoleTerm>) -> Self {
        let mut r = Self { constant, terms };
        r.canonicalize();
        r
    }

    pub fn from_terms(terms: Vec<PoleTerm>) -> Self {
        Self::new(ZERO, terms)
    }

    pub fn constant(&self) -> Complex64 {
        self.constant
    }

    pub fn terms(&self) -> &[PoleTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.constant == ZERO && self.terms.is_empty()
    }

    fn canonicalize(&mut self) {
        for t in &mut self.terms {
            t.pole = Complex64::new(t.pole.re + 0.0, t.pole.im + 0.0);
        }
        let mut constant = self.constant;
        self.terms.retain(|t| {
            if t.power == 0 {
                constant += t.coeff;
            }
            t.power > 0
        });
        self.constant = constant;
        self.terms.sort_by(cmp_key);
        let mut merged: Vec<PoleTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(l) if l.pole == t.pole && l.power == t.power => l.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != ZERO);
        self.terms = merged;
    }

    pub fn eval_s(&self, s: Complex64) -> Complex64 {
        self.terms.iter().fold(self.constant, |acc, t| {
            acc + t.coeff / (t.pole + s).powu(t.power)
        })
    }

    pub fn eval(&self, ctx: &AlphaContext, omega: f64) -> Complex64 {
        self.eval_s(ctx.s_of(omega))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Self::new(self.constant + other.constant, terms)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(
            self.constant * c,
            self.terms
                .iter()
                .map(|t| PoleTerm {
                    coeff: t.coeff * c,
                    ..*t
                })
                .collect(),
        )
    }

    /// Product, renormalized to partial fractions.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for t in &self.terms {
            terms.push(PoleTerm {
                coeff: t.coeff * other.constant,
                ..*t
            });
        }
        for u in &other.terms {
            terms.push(PoleTerm {
                coeff: u.coeff * self.constant,
                ..*u
            });
        }
        for t in &self.terms {
            for u in &other.terms {
                product_pair(t, u, &mut terms);
            }
        }
        Self::new(self.constant * other.constant, terms)
    }

    /// `F(s + d)`: every pole moves by `d`.
    pub fn shift_s(&self, d: Complex64) -> Self {
        Self::new(
            self.constant,
            self.terms
                .iter()
                .map(|t| PoleTerm {
                    pole: t.pole + d,
                    ..*t
                })
                .collect(),
        )
    }

    /// `F(f·s)` for `f ≠ 0`.
    pub fn rescale_s(&self, f: f64) -> Self {
        Self::new(
            self.constant,
            self.terms
                .iter()
                .map(|t| PoleTerm {
                    coeff: t.coeff / f.powi(t.power as i32),
                    pole: t.pole / f,
                    power: t.power,
                })
                .collect(),
        )
    }

    /// `s·F(s)`, using `s/(p+s)^m = 1/(p+s)^{m−1} − p/(p+s)^m`.
    ///
    /// # Panics
    /// If the spectrum carries a constant (the product would leave the family).
    pub fn mul_s(&self) -> Self {
        assert!(
            self.constant == ZERO,
            "s·constant is not a rational spectrum"
        );
        let mut terms = Vec::with_capacity(2 * self.terms.len());
        for t in &self.terms {
            terms.push(PoleTerm::new(t.coeff, t.pole, t.power - 1));
            terms.push(PoleTerm::new(-t.coeff * t.pole, t.pole, t.power));
        }
        Self::new(ZERO, terms)
    }

    pub fn coeff_norm(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff.norm())
            .fold(self.constant.norm(), f64::max)
    }

    /// Coefficient-level distance. Terms pair up by power and a pole match
    /// within `1e-9` relative; unmatched terms count in full. The result is
    /// the larger of the relative coefficient gap and the relative pole gap.
    pub fn discrepancy(&self, other: &Self) -> f64 {
        let scale = self.coeff_norm().max(other.coeff_norm());
        let norm = |x: f64| if scale > 0.0 { x / scale } else { x };
        let mut worst = norm((self.constant - other.constant).norm());
        let mut used = alloc::vec![false; other.terms.len()];
        for t in &self.terms {
            let tol = 1e-9 * t.pole.norm().max(1.0);
            let hit =
                other.terms.iter().enumerate().find(|(j, u)| {
                    !used[*j] && u.power == t.power && (u.pole - t.pole).norm() <= tol
                });
            match hit {
                Some((j, u)) => {
                    used[j] = true;
                    worst = worst
                        .max(norm((t.coeff - u.coeff).norm()))
                        .max((t.pole - u.pole).norm() / t.pole.norm().max(1.0));
                }
                None => worst = worst.max(norm(t.coeff.norm())),
            }
        }
        for (j, u) in other.terms.iter().enumerate() {
            if !used[j] {
                worst = worst.max(norm(u.coeff.norm()));
            }
        }
        worst
    }
}

/// Partial fractions of `c₁/(s+a)^m · c₂/(s+b)^n`.
fn product_pair(t: &PoleTerm, u: &PoleTerm, out: &mut Vec<PoleTerm>) {
    let c = t.coeff * u.coeff;
    if t.pole == u.pole {
        out.push(PoleTerm::new(c, t.pole, t.power + u.power));
        return;
    }
    let (a, m) = (t.pole, t.power);
    let (b, n) = (u.pole, u.power);
    // A_i = C(n+m−i−1, m−i) (−1)^{m−i} / (b−a)^{n+m−i}
    for i in 1..=m {
        let j = m - i;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let coef = sign * binomial(n + j - 1, j) / (b - a).powu(n + j);
        out.push(PoleTerm::new(c * coef, a, i));
    }
    for i in 1..=n {
        let j = n - i;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let coef = sign * binomial(m + j - 1, j) / (a - b).powu(m + j);
        out.push(PoleTerm::new(c * coef, b, i));
    }
}
