//! Pointwise numerics: grids, `(dx)^α` quadrature, difference quotients and
//! diagnostics.

mod diagnostics;
mod gauss;
mod grid;
mod integrals;
mod quadrature;

pub use diagnostics::{
    estimate_holder_exponent, lf_derivative_numeric, reconciliation_report, DerivativeEstimate,
    DiscrepancyReport, HolderEstimate, ReconcileOptions, PROBE_RATIO,
};
pub use gauss::{gauss_jacobi, gauss_legendre, golub_welsch, tridiagonal_eigen};
pub use grid::{cubic_interpolate, Grid, SampledSignal, SupportHint};
pub use integrals::{
    lf_integral_line, lf_integral_matched, lf_integral_matched_sampled, lf_integral_riemann,
    lf_integral_span, nodes_for_oscillation, LineIntegral, LineOptions, LineRule,
};
pub use quadrature::{
    build_measure_matched_rule, measure_moment, QuadratureMode, QuadratureRule, MOMENT_TOLERANCE,
    PANEL_NODES,
};
