//! Sampled local fractional Fourier transforms, fractal Fourier series and
//! numeric convolution.
//!
//! Every `∫ … (dx)^α` here is the measure-matched realization. The
//! `1/Γ(1+α)` of the integral definition is the forward prefactor, so with
//! Case 3 the forward transform of `E_α(−x^α)` at ω = 0 is the matched
//! integral of `E_α(−x^α)` over `[0, X]`, i.e. `1 − E_α(−X^α)`.

mod convolution;
mod fourier;
mod series;
mod verify;

pub use crate::special::KernelConvention;
pub use convolution::{convolve_numeric, ConvolveOptions};
pub use fourier::{
    forward, forward_formal, forward_on, forward_sampled, inverse, relative_l2, InverseOptions,
    Inversion, Spectrum, TransformOptions,
};
pub use series::{
    series_coefficients, series_partial_sum, series_partial_sums, SeriesCoefficients, SeriesOptions,
};
pub use verify::{
    numeric_suite, verify_numeric, NumericInputs, NumericSignal, NumericTolerance, SpectralWindow,
};
