use num_rational::BigRational;
use num_traits::Zero;

use super::build::{form_matrix, FormBlocks};
use super::matrix::ExactMatrix;
use super::psd::{nonzero_form_witness, psd_check};
use crate::algebra::{AnalyticPoly, Convention, GaussianRational, HarmonicSymbol};
use crate::error::{Error, Result};

/// Outcome of the compression test at one truncation level.
///
/// `Refuted` is a proof: the witness has degree at most `N` and the form is
/// evaluated exactly. `PsdAtLevel` only says the level-`N` compression is
/// positive semidefinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypoVerdict {
    RefutedNotHyponormal { witness: AnalyticPoly, form_value: BigRational },
    PsdAtLevel { level: usize, singular: bool },
}

impl HypoVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, HypoVerdict::RefutedNotHyponormal { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            HypoVerdict::RefutedNotHyponormal { .. } => "refuted",
            HypoVerdict::PsdAtLevel { .. } => "psd",
        }
    }
}

pub fn hypo_verdict(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    w: &GaussianRational,
    n: usize,
    conv: Convention,
) -> Result<HypoVerdict> {
    verdict_from_matrix(&form_matrix(phi, psi, w, n, conv).q, n)
}

pub(crate) fn verdict_from_matrix(q: &ExactMatrix, n: usize) -> Result<HypoVerdict> {
    let cert = psd_check(q)?;
    Ok(match (cert.witness, cert.witness_value) {
        (Some(x), Some(v)) => {
            HypoVerdict::RefutedNotHyponormal { witness: AnalyticPoly::from_dense(&x), form_value: v }
        }
        _ => HypoVerdict::PsdAtLevel { level: n, singular: !cert.zero_rows.is_empty() },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum NormalVerdict {
    NormalAtLevel(usize),
    /// `form_value ≠ 0` is the value at `witness` of the form built with
    /// `w_used` (either `w` or `−w`).
    NotNormal {
        witness: AnalyticPoly,
        form_value: BigRational,
        w_used: GaussianRational,
    },
}

impl NormalVerdict {
    pub fn is_normal(&self) -> bool {
        matches!(self, NormalVerdict::NormalAtLevel(_))
    }
}

/// Normal at level `N` iff the forms for both `w` and `−w` vanish on
/// polynomials of degree at most `N`, which kills both the Hermitian sum and
/// the cross term.
pub fn normal_verdict(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    w: &GaussianRational,
    n: usize,
    conv: Convention,
) -> Result<NormalVerdict> {
    if w.is_zero() {
        return Err(Error::DivisionByZero("normality test needs w != 0"));
    }
    let blocks = FormBlocks::new(phi, psi, n, conv);
    for w_used in [w.clone(), -w] {
        let q = blocks.combine(&w_used);
        if let Some((x, v)) = nonzero_form_witness(&q) {
            return Ok(NormalVerdict::NotNormal { witness: AnalyticPoly::from_dense(&x), form_value: v, w_used });
        }
    }
    Ok(NormalVerdict::NormalAtLevel(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    #[test]
    fn shift_is_psd() {
        let v = hypo_verdict(&HarmonicSymbol::z(), &HarmonicSymbol::zero(), &q(1, 1), 8, Convention::Circle).unwrap();
        assert!(matches!(v, HypoVerdict::PsdAtLevel { level: 8, singular: true }));
    }

    #[test]
    fn backward_shift_is_refuted() {
        let v =
            hypo_verdict(&HarmonicSymbol::zbar(), &HarmonicSymbol::zero(), &q(1, 1), 2, Convention::Circle).unwrap();
        match v {
            HypoVerdict::RefutedNotHyponormal { witness, form_value } => {
                // form is -|h_0|^2
                assert_eq!(witness, AnalyticPoly::basis(0));
                assert_eq!(form_value, BigRational::from_integer((-1).into()));
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn self_adjoint_pair_is_normal() {
        let h = HarmonicSymbol::z().add(&HarmonicSymbol::zbar());
        for n in 0..6 {
            assert!(normal_verdict(&h, &h, &q(1, 1), n, Convention::PaperDisk).unwrap().is_normal());
        }
    }

    #[test]
    fn self_adjoint_plus_analytic_is_not_normal() {
        let phi = HarmonicSymbol::z().add(&HarmonicSymbol::zbar());
        let psi = HarmonicSymbol::from_terms([((1, 0), q(1, 1)), ((2, 0), q(1, 1))]);
        for n in 1..5 {
            let v = normal_verdict(&phi, &psi, &q(-1, 1), n, Convention::PaperDisk).unwrap();
            assert!(!v.is_normal());
        }
    }

    #[test]
    fn zero_symbols_are_normal_but_w_zero_is_rejected() {
        let z = HarmonicSymbol::zero();
        assert!(normal_verdict(&z, &z, &GaussianRational::from_ints(2, -3), 3, Convention::Bergman)
            .unwrap()
            .is_normal());
        assert!(matches!(
            normal_verdict(&z, &z, &GaussianRational::zero(), 3, Convention::Bergman),
            Err(Error::DivisionByZero(_))
        ));
    }
}
