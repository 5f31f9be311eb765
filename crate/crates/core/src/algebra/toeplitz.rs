//! Exact Toeplitz application `T_φ f = P(φ f)` and the supporting
//! projection, inner product and polynomial calculus.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::convention::Convention;
use super::poly::{AnalyticPoly, HarmonicSymbol, MixedPoly};
use super::scalar::GaussianRational;

pub fn conj_symbol(phi: &HarmonicSymbol) -> HarmonicSymbol {
    phi.conj()
}

/// The distributive product `φ·f`; the term `(s, t)` times `z^k` lands on
/// key `(s + k, t)`.
pub fn symbol_times_poly(phi: &HarmonicSymbol, f: &AnalyticPoly) -> MixedPoly {
    let mut out = MixedPoly::zero();
    for ((s, t), c) in phi.iter() {
        for (k, a) in f.iter() {
            out.add_term(s + k, t, &(c * a));
        }
    }
    out
}

/// Term-by-term projection onto analytic polynomials.
pub fn project(g: &MixedPoly, conv: Convention) -> AnalyticPoly {
    let mut out = AnalyticPoly::zero();
    for ((s, t), c) in g.iter() {
        if let Some(f) = conv.projection_factor(s, t) {
            out.add_term(s - t, &c.scale(&f));
        }
    }
    out
}

/// The disk rule applied literally to every key, analytic ones included:
/// `z^s z̄^t ↦ z^{s-t}/(2(s+1))` for `s ≥ t`. Kept for comparison only;
/// it is not idempotent and no other routine uses it.
pub fn project_literal_disk(g: &MixedPoly) -> AnalyticPoly {
    let mut out = AnalyticPoly::zero();
    for ((s, t), c) in g.iter() {
        if s >= t {
            let f = BigRational::new(BigInt::one(), BigInt::from(2 * (s as u64 + 1)));
            out.add_term(s - t, &c.scale(&f));
        }
    }
    out
}

/// `⟨f, g⟩ = Σ_k f_k conj(g_k) w_k`, linear in the first argument.
pub fn inner(f: &AnalyticPoly, g: &AnalyticPoly, conv: Convention) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (k, a) in f.iter() {
        let b = g.coeff(k);
        if !b.is_zero() {
            acc += &(a * &b.conj()).scale(&conv.weight(k));
        }
    }
    acc
}

/// `‖f‖²`, a nonnegative rational.
pub fn norm_sqr(f: &AnalyticPoly, conv: Convention) -> BigRational {
    f.iter().fold(BigRational::zero(), |acc, (k, c)| acc + c.norm_sqr() * conv.weight(k))
}

pub fn toeplitz_apply(phi: &HarmonicSymbol, f: &AnalyticPoly, conv: Convention) -> AnalyticPoly {
    project(&symbol_times_poly(phi, f), conv)
}

/// `T_φ f` with the literal disk rule (see [`project_literal_disk`]).
pub fn toeplitz_apply_literal_disk(phi: &HarmonicSymbol, f: &AnalyticPoly) -> AnalyticPoly {
    project_literal_disk(&symbol_times_poly(phi, f))
}

/// `m`-th formal derivative.
pub fn poly_derivative(f: &AnalyticPoly, m: usize) -> AnalyticPoly {
    AnalyticPoly::from_terms(f.iter().filter(|(k, _)| *k >= m).map(|(k, c)| {
        let falling: BigInt = ((k - m + 1)..=k).map(|j| BigInt::from(j as u64)).product();
        (k - m, c.scale(&BigRational::from_integer(falling)))
    }))
}

/// Horner evaluation; coefficients are converted to `f64` once each.
pub fn eval_poly(f: &AnalyticPoly, z: Complex64) -> Complex64 {
    let Some(deg) = f.degree() else {
        return Complex64::new(0.0, 0.0);
    };
    let dense: Vec<Complex64> = f.to_dense(deg + 1).iter().map(GaussianRational::to_complex64).collect();
    dense.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}
