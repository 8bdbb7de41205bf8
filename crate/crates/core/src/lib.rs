//! Local fractional calculus and local fractional Fourier transforms.
//!
//! Two layers share one crate:
//!
//! - [`formal`]: a differential algebra over atoms `(x−x₀)^{kα} E_α(λ(x−x₀)^α)`
//!   in which the fractal calculus rules hold exactly, with closed-form
//!   transforms into [`formal::RationalSpectrum`].
//! - [`numeric`] and [`transform`]: pointwise evaluation, `(dx)^α` quadrature and
//!   sampled transforms, which reduce to classical Fourier analysis at α = 1.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod alpha;
pub mod error;
pub mod formal;
pub mod numeric;
pub mod report;
pub mod special;
pub mod transform;

pub use alpha::{pow_alpha, AlphaContext};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use report::{IdentityTag, VariantResult, VerificationReport};
pub use special::{kernel, mittag_leffler, KernelConvention, KernelSign};
