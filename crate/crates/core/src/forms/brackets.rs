//! Bracket values evaluated directly from polynomials, one `h` at a time.

use num_rational::BigRational;

use crate::algebra::{inner, norm_sqr, toeplitz_apply, AnalyticPoly, Convention, GaussianRational, HarmonicSymbol};

/// `⟨[T_φ^*, T_φ]h, h⟩ = ‖T_φ h‖² − ‖T_{φ̄} h‖²`.
pub fn self_commutator_form(phi: &HarmonicSymbol, h: &AnalyticPoly, conv: Convention) -> BigRational {
    norm_sqr(&toeplitz_apply(phi, h, conv), conv) - norm_sqr(&toeplitz_apply(&phi.conj(), h, conv), conv)
}

/// `⟨[T_φ^*, T_ψ]h, h⟩ = ⟨T_ψ h, T_φ h⟩ − ⟨T_{φ̄} h, T_{ψ̄} h⟩`.
pub fn cross_bracket(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    h: &AnalyticPoly,
    conv: Convention,
) -> GaussianRational {
    let first = inner(&toeplitz_apply(psi, h, conv), &toeplitz_apply(phi, h, conv), conv);
    let second = inner(&toeplitz_apply(&phi.conj(), h, conv), &toeplitz_apply(&psi.conj(), h, conv), conv);
    first - second
}

/// `|w|² ⟨[T_φ^*,T_φ]h,h⟩ + ⟨[T_ψ^*,T_ψ]h,h⟩ + 2 Re{w̄ ⟨[T_φ^*,T_ψ]h,h⟩}`.
pub fn sum_form_value(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    w: &GaussianRational,
    h: &AnalyticPoly,
    conv: Convention,
) -> BigRational {
    let two = BigRational::from_integer(2.into());
    w.norm_sqr() * self_commutator_form(phi, h, conv)
        + self_commutator_form(psi, h, conv)
        + two * (&w.conj() * &cross_bracket(phi, psi, h, conv)).re()
}
