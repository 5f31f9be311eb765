//! Exact scalars, polynomials, harmonic symbols and Toeplitz application.

pub mod convention;
pub mod poly;
pub mod scalar;
pub mod toeplitz;

pub use convention::Convention;
pub use poly::{AnalyticPoly, HarmonicSymbol, MixedPoly};
pub use scalar::{
    format_decimal, format_rational, parse_decimal_rational, parse_rational, rational_to_f64, GaussianRational,
};
pub use toeplitz::{
    conj_symbol, eval_poly, inner, norm_sqr, poly_derivative, project, project_literal_disk, symbol_times_poly,
    toeplitz_apply, toeplitz_apply_literal_disk,
};
