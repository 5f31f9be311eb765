//! Reproducing and derivative kernels (circle inner product), kernel-based
//! checks, rational-symbol expansions and grid estimates of symbols.

pub mod grid;
pub mod invariant;
pub mod kernel;
pub mod rational;

pub use grid::{min_modulus, sample_points, sup_norm_estimate};
pub use invariant::invariant_residual;
pub use kernel::{
    derivative_kernel_poly, kernel_bound_check, kernel_norm_sqr_limit, kernel_poly, KernelBoundReport, KernelSpec,
};
pub use rational::{
    coefficient_series, dominates, expand_rational_symbol, theorem_coeff_check, ComplexValue, RationalSymbolSpec,
    TailCheck, TheoremCoeffReport, CLOSED_FORM_TOLERANCE,
};
