//! Matrix forms of Toeplitz applications and of the self-commutator of
//! `wT_φ + T_ψ`, with an exact PSD certifier.

pub mod brackets;
pub mod build;
pub mod matrix;
pub mod psd;
pub mod verdict;

pub use brackets::{cross_bracket, self_commutator_form, sum_form_value};
pub use build::{apply_matrix, form_matrix, gram, ApplyMatrix, FormBlocks, FormMatrix, GramMatrix};
pub use matrix::ExactMatrix;
pub use psd::{nonzero_form_witness, psd_check, Pivot, PsdCertificate, PsdVerdict};
pub use verdict::{hypo_verdict, normal_verdict, HypoVerdict, NormalVerdict};
