use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::grid::sup_norm_estimate;
use crate::algebra::{
    format_rational, norm_sqr, rational_to_f64, AnalyticPoly, Convention, GaussianRational, HarmonicSymbol,
};
use crate::error::{Error, Result};
use crate::forms::cross_bracket;

/// Kernel point, derivative order and truncation degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSpec {
    alpha: GaussianRational,
    order: usize,
    truncation: usize,
}

impl KernelSpec {
    pub fn new(alpha: GaussianRational, order: usize, truncation: usize) -> Result<Self> {
        check_in_disk(&alpha)?;
        if order > truncation {
            return Err(Error::OrderExceedsTruncation { order, truncation });
        }
        Ok(Self { alpha, order, truncation })
    }

    pub fn alpha(&self) -> &GaussianRational {
        &self.alpha
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }
}

pub(crate) fn check_in_disk(alpha: &GaussianRational) -> Result<()> {
    let n = alpha.norm_sqr();
    if n >= BigRational::one() {
        return Err(Error::AlphaOutsideDisk { norm_sqr: format_rational(&n) });
    }
    Ok(())
}

/// `1/(1 − |α|²)`, the squared norm of the full kernel.
pub fn kernel_norm_sqr_limit(alpha: &GaussianRational) -> Result<BigRational> {
    check_in_disk(alpha)?;
    Ok((BigRational::one() - alpha.norm_sqr()).recip())
}

/// `Σ_{k=0}^{N} conj(α)^k z^k`; the derivative order of `spec` is ignored.
pub fn kernel_poly(spec: &KernelSpec) -> AnalyticPoly {
    let ab = spec.alpha.conj();
    let mut c = GaussianRational::one();
    let mut out = AnalyticPoly::zero();
    for k in 0..=spec.truncation {
        out.add_term(k, &c);
        c *= &ab;
    }
    out
}

/// `Σ_{k=m}^{N} k!/(k−m)! · conj(α)^{k−m} z^k`, which represents
/// `f ↦ f^{(m)}(α)` in the circle inner product.
pub fn derivative_kernel_poly(spec: &KernelSpec) -> AnalyticPoly {
    let m = spec.order;
    let ab = spec.alpha.conj();
    let mut pow = GaussianRational::one();
    let mut out = AnalyticPoly::zero();
    for k in m..=spec.truncation {
        let falling: BigInt = ((k - m + 1)..=k).map(BigInt::from).product();
        out.add_term(k, &pow.scale(&BigRational::from_integer(falling)));
        pow *= &ab;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelBoundReport {
    /// `|⟨[T_φ^*, T_ψ]K, K⟩|²` on the truncated kernel.
    pub lhs: f64,
    /// `sup|φ|² · sup|ψ|² · (1/(1 − |α|²))²` with grid sup-norm estimates.
    pub rhs: f64,
    pub holds: bool,
    pub lhs_exact: String,
    pub sup_phi: f64,
    pub sup_psi: f64,
    pub kernel_norm_sqr_partial: String,
    pub kernel_norm_sqr_limit: String,
    /// Partial kernel norm does not exceed its limit (exact).
    pub partial_within_limit: bool,
}

/// Compares the cross bracket at the truncated kernel with the product of
/// the symbols' sup-norms and the squared kernel norm. Circle convention,
/// analytic self-maps of the disk only.
pub fn kernel_bound_check(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    alpha: &GaussianRational,
    n: usize,
    grid_m: usize,
) -> Result<KernelBoundReport> {
    for sym in [phi, psi] {
        if let Some((s, t)) = sym.first_nonanalytic() {
            return Err(Error::NonAnalyticSymbol { s, t });
        }
    }
    let spec = KernelSpec::new(alpha.clone(), 0, n)?;
    let sup_phi = sup_norm_estimate(phi, grid_m);
    let sup_psi = sup_norm_estimate(psi, grid_m);
    for estimate in [sup_phi, sup_psi] {
        if estimate > 1.0 + 1e-6 {
            return Err(Error::SymbolNotSelfMap { estimate });
        }
    }
    let k = kernel_poly(&spec);
    let conv = Convention::Circle;
    let lhs_exact = cross_bracket(phi, psi, &k, conv).norm_sqr();
    let limit = kernel_norm_sqr_limit(alpha)?;
    let partial = norm_sqr(&k, conv);
    let lhs = rational_to_f64(&lhs_exact);
    let lim = rational_to_f64(&limit);
    let rhs = sup_phi * sup_phi * sup_psi * sup_psi * lim * lim;
    Ok(KernelBoundReport {
        lhs,
        rhs,
        holds: lhs <= rhs * (1.0 + 1e-9),
        lhs_exact: format_rational(&lhs_exact),
        sup_phi,
        sup_psi,
        kernel_norm_sqr_partial: format_rational(&partial),
        kernel_norm_sqr_limit: format_rational(&limit),
        partial_within_limit: !(&limit - &partial).is_negative(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{inner, poly_derivative};
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    #[test]
    fn kernel_at_origin_is_one() {
        let k = kernel_poly(&KernelSpec::new(GaussianRational::zero(), 0, 5).unwrap());
        assert_eq!(k, AnalyticPoly::basis(0));
    }

    #[test]
    fn geometric_coefficients() {
        let k = kernel_poly(&KernelSpec::new(q(1, 2), 0, 2).unwrap());
        assert_eq!(k, AnalyticPoly::from_terms([(0, q(1, 1)), (1, q(1, 2)), (2, q(1, 4))]));
    }

    #[test]
    fn partial_norms_approach_limit() {
        let a = q(1, 2);
        for n in [0usize, 1, 5, 10] {
            let k = kernel_poly(&KernelSpec::new(a.clone(), 0, n).unwrap());
            let four = BigRational::from_integer(4.into());
            let expected = (BigRational::one() - four.pow(-(n as i32 + 1))) * BigRational::new(4.into(), 3.into());
            assert_eq!(inner(&k, &k, Convention::Circle), GaussianRational::real(expected));
        }
        assert_eq!(kernel_norm_sqr_limit(&a).unwrap(), BigRational::new(4.into(), 3.into()));
    }

    #[test]
    fn rejects_points_outside_disk() {
        assert!(matches!(KernelSpec::new(q(1, 1), 0, 3), Err(Error::AlphaOutsideDisk { .. })));
        assert!(matches!(
            KernelSpec::new(GaussianRational::from_ratios((3, 5), (4, 5)), 0, 3),
            Err(Error::AlphaOutsideDisk { .. })
        ));
        assert_eq!(KernelSpec::new(q(1, 2), 4, 3), Err(Error::OrderExceedsTruncation { order: 4, truncation: 3 }));
    }

    #[test]
    fn derivative_kernel_examples() {
        let d = derivative_kernel_poly(&KernelSpec::new(GaussianRational::zero(), 1, 3).unwrap());
        assert_eq!(d, AnalyticPoly::basis(1));

        let f = AnalyticPoly::basis(3);
        let d = derivative_kernel_poly(&KernelSpec::new(q(1, 3), 1, 5).unwrap());
        assert_eq!(inner(&f, &d, Convention::Circle), q(1, 3));

        let spec = KernelSpec::new(GaussianRational::from_ratios((1, 3), (-1, 4)), 0, 6).unwrap();
        assert_eq!(derivative_kernel_poly(&spec), kernel_poly(&spec));
    }

    #[test]
    fn reproduces_derivatives() {
        let a = GaussianRational::from_ratios((1, 2), (1, 3));
        let f = AnalyticPoly::from_terms([(0, q(2, 1)), (2, q(-1, 3)), (4, GaussianRational::from_ints(1, 1))]);
        for m in 0..=3 {
            let d = derivative_kernel_poly(&KernelSpec::new(a.clone(), m, 6).unwrap());
            assert_eq!(inner(&f, &d, Convention::Circle), poly_derivative(&f, m).eval_exact(&a));
        }
    }

    #[test]
    fn bound_half_shift_at_origin() {
        let phi = HarmonicSymbol::term(1, 0, q(1, 2));
        let rep = kernel_bound_check(&phi, &phi, &GaussianRational::zero(), 8, 64).unwrap();
        assert_eq!(rep.lhs_exact, "1/16");
        assert!((rep.rhs - 1.0 / 16.0).abs() < 1e-12);
        assert!(rep.holds);
    }

    #[test]
    fn bound_zero_symbols() {
        let z = HarmonicSymbol::zero();
        let rep = kernel_bound_check(&z, &z, &q(1, 3), 8, 64).unwrap();
        assert_eq!(rep.lhs, 0.0);
        assert_eq!(rep.rhs, 0.0);
        assert!(rep.holds);
    }

    #[test]
    fn bound_shift_and_square() {
        let rep =
            kernel_bound_check(&HarmonicSymbol::z(), &HarmonicSymbol::term(2, 0, q(1, 1)), &q(1, 2), 16, 256).unwrap();
        assert!(rep.holds);
        assert!(rep.partial_within_limit);
        assert!((rep.rhs - 16.0 / 9.0).abs() < 1e-9);
    }

    #[test]
    fn bound_preconditions() {
        assert!(matches!(
            kernel_bound_check(&HarmonicSymbol::zbar(), &HarmonicSymbol::z(), &q(0, 1), 4, 16),
            Err(Error::NonAnalyticSymbol { s: 0, t: 1 })
        ));
        assert!(matches!(
            kernel_bound_check(&HarmonicSymbol::term(1, 0, q(2, 1)), &HarmonicSymbol::z(), &q(0, 1), 4, 16),
            Err(Error::SymbolNotSelfMap { .. })
        ));
    }
}
