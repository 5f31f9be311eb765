use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::algebra::{format_rational, AnalyticPoly, Convention, GaussianRational, HarmonicSymbol};
use crate::forms::{cross_bracket, self_commutator_form};

/// `w̄·⟨[T_φ^*, T_ψ]h, h⟩`. The real part is the cross term of the
/// self-commutator form of `wT_φ + T_ψ`; the imaginary part is kept for
/// diagnostics.
pub fn cross_term(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    w: &GaussianRational,
    h: &AnalyticPoly,
    conv: Convention,
) -> GaussianRational {
    &w.conj() * &cross_bracket(phi, psi, h, conv)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsReport {
    pub cross: GaussianRational,
    pub self_phi: BigRational,
    pub self_psi: BigRational,
    /// `|⟨[T_φ^*, T_ψ]h, h⟩|²`
    pub lhs_sq: BigRational,
    /// `⟨[T_φ^*, T_φ]h, h⟩ · ⟨[T_ψ^*, T_ψ]h, h⟩`
    pub rhs: BigRational,
    pub holds: bool,
}

/// Evaluates the Cauchy–Schwarz inequality between the cross bracket and
/// the two self-commutator forms at `h`. Computed unconditionally; the
/// inequality is only guaranteed when `wT_φ + T_ψ` is hyponormal for every
/// nonzero `w`.
pub fn cauchy_schwarz_check(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    h: &AnalyticPoly,
    conv: Convention,
) -> CsReport {
    let cross = cross_bracket(phi, psi, h, conv);
    let self_phi = self_commutator_form(phi, h, conv);
    let self_psi = self_commutator_form(psi, h, conv);
    let lhs_sq = cross.norm_sqr();
    let rhs = &self_phi * &self_psi;
    let holds = !(&rhs - &lhs_sq).is_negative();
    CsReport { cross, self_phi, self_psi, lhs_sq, rhs, holds }
}

#[derive(Serialize)]
struct CsReportJson {
    cross_re: String,
    cross_im: String,
    self_phi: String,
    self_psi: String,
    lhs_sq: String,
    rhs: String,
    holds: bool,
}

impl CsReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CsReportJson {
            cross_re: format_rational(self.cross.re()),
            cross_im: format_rational(self.cross.im()),
            self_phi: format_rational(&self.self_phi),
            self_psi: format_rational(&self.self_psi),
            lhs_sq: format_rational(&self.lhs_sq),
            rhs: format_rational(&self.rhs),
            holds: self.holds,
        })
        .expect("plain strings serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn two_quadratics() -> (HarmonicSymbol, HarmonicSymbol) {
        (
            HarmonicSymbol::from_terms([((2, 0), q(1, 4)), ((0, 0), q(3, 4))]),
            HarmonicSymbol::from_terms([((2, 0), q(1, 3)), ((1, 0), q(1, 3)), ((0, 0), q(1, 3))]),
        )
    }

    #[test]
    fn cross_term_two_quadratics() {
        let (phi, psi) = two_quadratics();
        let c = cross_term(&phi, &psi, &q(-1, 2), &AnalyticPoly::basis(1), Convention::PaperDisk);
        assert_eq!(c, q(-1, 192));
    }

    #[test]
    fn cross_term_vanishes_at_zero_w() {
        let (phi, psi) = two_quadratics();
        let h = AnalyticPoly::from_terms([(0, q(1, 2)), (3, GaussianRational::from_ints(1, -1))]);
        assert!(cross_term(&phi, &psi, &GaussianRational::zero(), &h, Convention::Bergman).is_zero());
    }

    #[test]
    fn cross_term_with_equal_symbols_is_scaled_self_form() {
        let (phi, _) = two_quadratics();
        let phi = phi.add(&HarmonicSymbol::zbar());
        let h = AnalyticPoly::from_terms([(0, q(1, 1)), (1, q(2, 3))]);
        let w = q(5, 2);
        let c = cross_term(&phi, &phi, &w, &h, Convention::PaperDisk);
        assert_eq!(c, GaussianRational::real(w.re() * self_commutator_form(&phi, &h, Convention::PaperDisk)));
    }

    #[test]
    fn cauchy_schwarz_two_quadratics() {
        let (phi, psi) = two_quadratics();
        let rep = cauchy_schwarz_check(&phi, &psi, &AnalyticPoly::basis(1), Convention::PaperDisk);
        assert_eq!(rep.lhs_sq, r(1, 9216));
        assert_eq!(rep.rhs, r(25, 110592));
        // 1/9216 = 12/110592 < 25/110592
        assert!(rep.holds);
    }

    #[test]
    fn cauchy_schwarz_equality_for_equal_symbols() {
        let phi = HarmonicSymbol::from_terms([((1, 0), q(1, 1)), ((0, 1), q(1, 3))]);
        let h = AnalyticPoly::from_terms([(0, q(1, 1)), (2, q(-1, 2))]);
        for conv in Convention::ALL {
            let rep = cauchy_schwarz_check(&phi, &phi, &h, conv);
            assert_eq!(rep.lhs_sq, rep.rhs);
            assert!(rep.holds);
        }
    }

    #[test]
    fn cauchy_schwarz_analytic_pair_on_circle() {
        let phi = HarmonicSymbol::z();
        let psi = HarmonicSymbol::term(2, 0, q(1, 1));
        let rep = cauchy_schwarz_check(&phi, &psi, &AnalyticPoly::basis(1), Convention::Circle);
        // T_φ^* z = 1, T_ψ^* z = 0; brackets: ‖z²‖² − 1 = 0, ‖z³‖² − 0 = 1, ⟨z³, z²⟩ − ⟨1, 0⟩ = 0
        assert_eq!(rep.self_phi, r(0, 1));
        assert_eq!(rep.self_psi, r(1, 1));
        assert!(rep.cross.is_zero());
        assert!(rep.holds);
    }
}
