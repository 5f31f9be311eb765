//! Shared fixtures for the benchmarks.

use toeplitz_lab::{GaussianRational, GridSpec, HarmonicSymbol};

/// `φ = z²/4 + 3/4`, `ψ = z²/3 + z/3 + 1/3` with a co-analytic term added to
/// `ψ` so that every block of the form matrix is populated.
pub fn mixed_pair() -> (HarmonicSymbol, HarmonicSymbol) {
    let q = GaussianRational::ratio;
    let phi = HarmonicSymbol::from_terms([((2, 0), q(1, 4)), ((0, 0), q(3, 4))]);
    let psi = HarmonicSymbol::from_terms([
        ((2, 0), q(1, 3)),
        ((1, 0), q(1, 3)),
        ((0, 0), q(1, 3)),
        ((0, 1), GaussianRational::from_ratios((1, 5), (-1, 7))),
    ]);
    (phi, psi)
}

pub fn weight() -> GaussianRational {
    GaussianRational::from_ratios((-1, 2), (1, 3))
}

pub fn grid(steps: usize) -> GridSpec {
    format!("-1:1:{steps},-1:1:{steps}").parse().expect("valid grid")
}
