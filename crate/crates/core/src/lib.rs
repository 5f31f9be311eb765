//! Exact-arithmetic laboratory for hyponormality and normality of
//! `wT_φ + T_ψ`, where `T_φ`, `T_ψ` are Toeplitz operators with harmonic
//! polynomial symbols.
//!
//! Refutations are exact proofs (a polynomial witness with a strictly
//! negative self-commutator form). Positive answers are reported per
//! truncation level and are evidence only.

pub mod algebra;
pub mod error;
pub mod forms;
pub mod io;
pub mod kernels;
pub mod suite;
pub mod worked;

pub use algebra::{
    conj_symbol, eval_poly, inner, poly_derivative, project, symbol_times_poly, toeplitz_apply, AnalyticPoly,
    Convention, GaussianRational, HarmonicSymbol, MixedPoly,
};
pub use error::{Error, Result};
pub use forms::{
    apply_matrix, form_matrix, gram, hypo_verdict, normal_verdict, psd_check, FormMatrix, HypoVerdict, NormalVerdict,
    PsdCertificate, PsdVerdict,
};
pub use kernels::{
    derivative_kernel_poly, expand_rational_symbol, invariant_residual, kernel_bound_check, kernel_poly, min_modulus,
    sup_norm_estimate, theorem_coeff_check, KernelSpec, RationalSymbolSpec,
};
pub use suite::{cauchy_schwarz_check, cross_term, w_scan, CsReport, GridSpec, WScanGrid};
