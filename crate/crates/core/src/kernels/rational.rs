//! Symbols of the form `z/(uz + v)`: geometric expansion and the
//! z-coefficients of `T_φ^* T_ψ K_α` and `T_ψ T_φ^* K_α` for
//! `φ = z/(uz + v)`, `ψ = z/(sz + t)`.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::kernel::check_in_disk;
use crate::algebra::{rational_to_f64, AnalyticPoly, GaussianRational};
use crate::error::{Error, Result};

/// Gap above which a closed form is flagged as disagreeing with its series.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSymbolSpec {
    u: GaussianRational,
    v: GaussianRational,
}

impl RationalSymbolSpec {
    pub fn new(u: GaussianRational, v: GaussianRational) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { u, v })
    }

    pub fn u(&self) -> &GaussianRational {
        &self.u
    }

    pub fn v(&self) -> &GaussianRational {
        &self.v
    }

    /// `|v| ≥ 1 + |u|`, decided exactly.
    pub fn is_dominated(&self) -> bool {
        dominates(&self.v, &self.u)
    }
}

/// `|big| ≥ 1 + |small|` without square roots: with `a = |big|² − 1 − |small|²`
/// the condition is `a ≥ 0` and `a² ≥ 4|small|²`.
pub fn dominates(big: &GaussianRational, small: &GaussianRational) -> bool {
    let small_sq = small.norm_sqr();
    let a = big.norm_sqr() - BigRational::one() - &small_sq;
    if a.is_negative() {
        return false;
    }
    let four = BigRational::from_integer(4.into());
    &a * &a >= four * small_sq
}

/// `Σ_{k=1}^{N} (1/v)(−u/v)^{k−1} z^k`.
pub fn expand_rational_symbol(spec: &RationalSymbolSpec, n: usize) -> Result<AnalyticPoly> {
    if spec.u.norm_sqr() >= spec.v.norm_sqr() {
        return Err(Error::NotConvergent);
    }
    let inv_v = spec.v.inv().ok_or(Error::ZeroDenominator)?;
    let ratio = -(&spec.u * &inv_v);
    let mut c = inv_v;
    let mut out = AnalyticPoly::zero();
    for k in 1..=n {
        out.add_term(k, &c);
        c *= &ratio;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexValue> for Complex64 {
    fn from(z: ComplexValue) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TailCheck {
    /// `|value(2N) − value(N)|`, from the exact difference.
    pub step: f64,
    /// Geometric bound on the tail beyond `N`.
    pub bound: f64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremCoeffReport {
    pub truncation: usize,
    /// z-coefficient of `T_φ^* T_ψ K_α`, truncated series.
    pub series_lhs: ComplexValue,
    /// z-coefficient of `T_ψ T_φ^* K_α`, truncated series.
    pub series_rhs: ComplexValue,
    /// Log closed forms; absent when `α = 0` or `tᾱ + s = 0`.
    pub closed_lhs: Option<ComplexValue>,
    pub closed_rhs: Option<ComplexValue>,
    pub gap_lhs: Option<f64>,
    pub gap_rhs: Option<f64>,
    /// `|series_lhs + closed_lhs|`: distance to the closed form with its sign flipped.
    pub gap_lhs_negated: Option<f64>,
    pub lhs_discrepancy: Option<bool>,
    pub rhs_discrepancy: Option<bool>,
    pub tail_lhs: TailCheck,
    pub tail_rhs: TailCheck,
    /// Moduli of the two sides of the concluding inequality
    /// `|ᾱ/(tᾱ + s) · B| ≤ |v/(αu)|`, where `B` is the bracket of the
    /// left closed form.
    pub final_lhs_modulus: Option<f64>,
    pub final_rhs_modulus: Option<f64>,
    pub final_holds: Option<bool>,
}

/// Exact truncated series for both z-coefficients.
///
/// With `x = −ū/v̄`, `r = −s/t` and `S_n = Σ_{j=1}^{n+1} r^{j−1} ᾱ^{n+1−j}`:
/// `lhs = (1/(2v̄t)) Σ_{n=1}^{N} x^{n−1} S_n/(n+2)` and
/// `rhs = (1/(2tv̄)) Σ_{n=1}^{N} ᾱ^n x^{n−1}/(n+1)`.
pub fn coefficient_series(
    u: &GaussianRational,
    v: &GaussianRational,
    s: &GaussianRational,
    t: &GaussianRational,
    alpha: &GaussianRational,
    n: usize,
) -> Result<(GaussianRational, GaussianRational)> {
    let vb = v.conj();
    let ab = alpha.conj();
    let x = -u.conj().checked_div(&vb).ok_or(Error::ZeroDenominator)?;
    let r = -s.checked_div(t).ok_or(Error::ZeroDenominator)?;

    let mut lhs = GaussianRational::zero();
    let mut rhs = GaussianRational::zero();
    let mut x_pow = GaussianRational::one();
    let mut a_pow = ab.clone();
    let mut r_pow = r.clone();
    let mut s_n = &ab + &r;
    for k in 1..=n {
        let lhs_w = BigRational::new(1.into(), (k + 2).into());
        let rhs_w = BigRational::new(1.into(), (k + 1).into());
        lhs += &(&x_pow * &s_n).scale(&lhs_w);
        rhs += &(&x_pow * &a_pow).scale(&rhs_w);
        x_pow *= &x;
        a_pow *= &ab;
        r_pow *= &r;
        s_n = &(&ab * &s_n) + &r_pow;
    }
    let two = GaussianRational::from(2);
    let denom = &(&two * &vb) * t;
    let lhs = lhs.checked_div(&denom).ok_or(Error::ZeroDenominator)?;
    let rhs = rhs.checked_div(&denom).ok_or(Error::ZeroDenominator)?;
    Ok((lhs, rhs))
}

struct ClosedForms {
    lhs: Option<Complex64>,
    rhs: Complex64,
    bracket_factor: Option<Complex64>,
}

fn closed_forms(u: Complex64, v: Complex64, s: Complex64, t: Complex64, alpha: Complex64) -> ClosedForms {
    let (ub, vb, ab) = (u.conj(), v.conj(), alpha.conj());
    let one = Complex64::new(1.0, 0.0);
    let rhs = (one / (2.0 * t * ub)) * (one - (vb / (ub * ab)) * (one + ab * ub / vb).ln());
    let shift = t * ab + s;
    if shift == Complex64::new(0.0, 0.0) {
        return ClosedForms { lhs: None, rhs, bracket_factor: None };
    }
    let bracket = 0.5
        + s / (2.0 * ab * t)
        + (ab * ub / vb + one).ln() * vb * vb / (ab * ab * ub * ub)
        + (vb * vb * t / (ab * ub * ub * s)) * (one - ub * s / (vb * t)).ln();
    let lhs = -(ab / (2.0 * shift * ub)) * bracket;
    ClosedForms { lhs: Some(lhs), rhs, bracket_factor: Some(ab / shift * bracket) }
}

fn abs_exact(z: &GaussianRational) -> f64 {
    rational_to_f64(z.re()).hypot(rational_to_f64(z.im()))
}

/// Series against closed forms for the two z-coefficients. The series are
/// exact and treated as ground truth; the closed forms are what is checked.
pub fn theorem_coeff_check(
    u: &GaussianRational,
    v: &GaussianRational,
    s: &GaussianRational,
    t: &GaussianRational,
    alpha: &GaussianRational,
    n: usize,
) -> Result<TheoremCoeffReport> {
    if u.is_zero() {
        return Err(Error::DegenerateParameter("u must be nonzero"));
    }
    if s.is_zero() {
        return Err(Error::DegenerateParameter("s must be nonzero"));
    }
    if !dominates(v, u) {
        return Err(Error::HypothesisViolated("|v| >= 1 + |u| fails".into()));
    }
    if !dominates(t, s) {
        return Err(Error::HypothesisViolated("|t| >= 1 + |s| fails".into()));
    }
    check_in_disk(alpha)?;

    let (lhs, rhs) = coefficient_series(u, v, s, t, alpha, n)?;
    let (lhs2, rhs2) = coefficient_series(u, v, s, t, alpha, 2 * n)?;

    let q = abs_exact(u) / abs_exact(v);
    let a = abs_exact(alpha);
    let rho = a.max(abs_exact(s) / abs_exact(t));
    let scale = 2.0 * abs_exact(v) * abs_exact(t);
    let tail = |step: f64, ratio: f64, lead: f64| {
        let bound = q.powi(n as i32) * lead / ((1.0 - q * ratio) * scale);
        TailCheck { step, bound, ok: step <= bound * (1.0 + 1e-9) + f64::MIN_POSITIVE }
    };
    let tail_lhs = tail(abs_exact(&(&lhs2 - &lhs)), rho, rho.powi(n as i32 + 1));
    let tail_rhs = tail(abs_exact(&(&rhs2 - &rhs)), a, a.powi(n as i32 + 1));

    let series_lhs = lhs.to_complex64();
    let series_rhs = rhs.to_complex64();
    let mut report = TheoremCoeffReport {
        truncation: n,
        series_lhs: series_lhs.into(),
        series_rhs: series_rhs.into(),
        closed_lhs: None,
        closed_rhs: None,
        gap_lhs: None,
        gap_rhs: None,
        gap_lhs_negated: None,
        lhs_discrepancy: None,
        rhs_discrepancy: None,
        tail_lhs,
        tail_rhs,
        final_lhs_modulus: None,
        final_rhs_modulus: None,
        final_holds: None,
    };
    if alpha.is_zero() {
        return Ok(report);
    }

    let closed =
        closed_forms(u.to_complex64(), v.to_complex64(), s.to_complex64(), t.to_complex64(), alpha.to_complex64());
    let gap_rhs = (series_rhs - closed.rhs).norm();
    report.closed_rhs = Some(closed.rhs.into());
    report.gap_rhs = Some(gap_rhs);
    report.rhs_discrepancy = Some(gap_rhs > CLOSED_FORM_TOLERANCE);
    if let (Some(cl), Some(factor)) = (closed.lhs, closed.bracket_factor) {
        let gap = (series_lhs - cl).norm();
        report.closed_lhs = Some(cl.into());
        report.gap_lhs = Some(gap);
        report.gap_lhs_negated = Some((series_lhs + cl).norm());
        report.lhs_discrepancy = Some(gap > CLOSED_FORM_TOLERANCE);
        let fl = factor.norm();
        let fr = (v.to_complex64() / (alpha.to_complex64() * u.to_complex64())).norm();
        report.final_lhs_modulus = Some(fl);
        report.final_rhs_modulus = Some(fr);
        report.final_holds = Some(fl <= fr);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{toeplitz_apply, Convention};

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    #[test]
    fn expansions() {
        let e = expand_rational_symbol(&RationalSymbolSpec::new(q(0, 1), q(2, 1)).unwrap(), 5).unwrap();
        assert_eq!(e, AnalyticPoly::monomial(1, q(1, 2)));
        let e = expand_rational_symbol(&RationalSymbolSpec::new(q(1, 1), q(3, 1)).unwrap(), 2).unwrap();
        assert_eq!(e, AnalyticPoly::from_terms([(1, q(1, 3)), (2, q(-1, 9))]));
        let e = expand_rational_symbol(&RationalSymbolSpec::new(q(1, 1), q(-3, 1)).unwrap(), 3).unwrap();
        assert_eq!(e, AnalyticPoly::from_terms([(1, q(-1, 3)), (2, q(-1, 9)), (3, q(-1, 27))]));
    }

    #[test]
    fn expansion_errors() {
        assert_eq!(RationalSymbolSpec::new(q(1, 1), q(0, 1)), Err(Error::ZeroDenominator));
        let spec = RationalSymbolSpec::new(q(2, 1), q(-2, 1)).unwrap();
        assert_eq!(expand_rational_symbol(&spec, 3), Err(Error::NotConvergent));
    }

    #[test]
    fn domination_is_exact() {
        assert!(dominates(&q(3, 1), &q(2, 1)));
        assert!(!dominates(&q(3, 1), &q(201, 100)));
        assert!(dominates(&GaussianRational::from_ints(3, 4), &GaussianRational::from_ints(0, 4)));
        assert!(!dominates(&q(1, 2), &q(0, 1)));
        assert!(RationalSymbolSpec::new(q(1, 1), q(3, 1)).unwrap().is_dominated());
    }

    /// z-coefficients through the operators themselves: truncated symbols,
    /// truncated kernel, disk projection.
    fn operator_route(
        u: &GaussianRational,
        v: &GaussianRational,
        s: &GaussianRational,
        t: &GaussianRational,
        alpha: &GaussianRational,
        n: usize,
    ) -> (GaussianRational, GaussianRational) {
        let phi = expand_rational_symbol(&RationalSymbolSpec::new(u.clone(), v.clone()).unwrap(), n).unwrap();
        let psi = expand_rational_symbol(&RationalSymbolSpec::new(s.clone(), t.clone()).unwrap(), n + 1).unwrap();
        let phi_bar = phi.to_symbol().conj();
        let psi = psi.to_symbol();
        let ab = alpha.conj();
        let kernel = AnalyticPoly::from_terms((0..=n).map(|k| (k, ab.pow(k))));
        let conv = Convention::PaperDisk;
        let lhs = toeplitz_apply(&phi_bar, &toeplitz_apply(&psi, &kernel, conv), conv).coeff(1);
        let rhs = toeplitz_apply(&psi, &toeplitz_apply(&phi_bar, &kernel, conv), conv).coeff(1);
        (lhs, rhs)
    }

    #[test]
    fn series_match_operator_route() {
        let cases = [
            (q(1, 1), q(3, 1), q(1, 1), q(3, 1), q(1, 2)),
            (
                GaussianRational::from_ratios((1, 2), (1, 3)),
                q(-2, 1),
                q(-1, 4),
                GaussianRational::from_ints(0, 3),
                GaussianRational::from_ratios((1, 4), (-1, 3)),
            ),
        ];
        for (u, v, s, t, a) in cases {
            for n in 1..7 {
                let (lhs, rhs) = coefficient_series(&u, &v, &s, &t, &a, n).unwrap();
                let (ol, or) = operator_route(&u, &v, &s, &t, &a, n);
                assert_eq!(lhs, ol, "lhs at n = {n}");
                assert_eq!(rhs, or, "rhs at n = {n}");
            }
        }
    }

    #[test]
    fn reference_parameters() {
        let rep = theorem_coeff_check(&q(1, 1), &q(3, 1), &q(1, 1), &q(3, 1), &q(1, 2), 200).unwrap();
        assert!(rep.gap_rhs.unwrap() <= 1e-10);
        assert!((rep.series_rhs.re - 0.012515986839408362).abs() < 1e-15);
        assert!((rep.series_lhs.re - 0.0022473881669925746).abs() < 1e-15);
        // The left closed form comes out with the opposite sign.
        assert!(rep.gap_lhs.unwrap() > 4e-3);
        assert!(rep.gap_lhs_negated.unwrap() < 1e-12);
        assert_eq!(rep.lhs_discrepancy, Some(true));
        assert!(rep.tail_lhs.ok && rep.tail_rhs.ok);
        assert!(rep.final_holds.is_some());
    }

    #[test]
    fn origin_skips_closed_forms() {
        let rep = theorem_coeff_check(&q(1, 1), &q(3, 1), &q(1, 1), &q(3, 1), &q(0, 1), 20).unwrap();
        assert!(rep.closed_lhs.is_none() && rep.closed_rhs.is_none());
        assert_eq!(rep.series_rhs.re, 0.0);
        assert!(rep.tail_lhs.ok);
    }

    #[test]
    fn hypotheses() {
        let one = q(1, 1);
        let three = q(3, 1);
        let half = q(1, 2);
        assert!(matches!(
            theorem_coeff_check(&q(0, 1), &three, &one, &three, &half, 5),
            Err(Error::DegenerateParameter(_))
        ));
        assert!(matches!(
            theorem_coeff_check(&one, &three, &q(0, 1), &three, &half, 5),
            Err(Error::DegenerateParameter(_))
        ));
        assert!(matches!(
            theorem_coeff_check(&one, &q(3, 2), &one, &three, &half, 5),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            theorem_coeff_check(&one, &three, &one, &q(3, 2), &half, 5),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            theorem_coeff_check(&one, &three, &one, &three, &one, 5),
            Err(Error::AlphaOutsideDisk { .. })
        ));
    }
}
