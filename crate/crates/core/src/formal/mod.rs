//! Formal differential algebra over `(x−x₀)^{kα} E_α(λ(x−x₀)^α)` atoms.

mod calculus;
mod expr;
mod spectrum;
mod transform;
mod verify;

pub use calculus::{definite_integral, lf_antiderivative, lf_derivative, step_coeff};
pub use expr::{coefficient_discrepancy, FormalExpr, FormalTerm, Support};
pub use spectrum::{PoleTerm, RationalSpectrum};
pub use transform::{
    convolve_formal, invert_closed_form, transform_closed_form, transform_delayed, DelayedSpectrum,
};
pub use verify::{verify_formal_identity, FormalInputs, FORMAL_TOLERANCE};
