//! Sparse exact polynomials: analytic polynomials in `z`, harmonic symbols
//! `Σ c z^s z̄^t`, and the unprojected products `φ·f`.
//!
//! Every map is kept free of zero coefficients, so structural equality is
//! mathematical equality.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::GaussianRational;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, GaussianRational>, key: K, c: &GaussianRational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// A polynomial `Σ_k c_k z^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AnalyticPoly {
    coeffs: BTreeMap<usize, GaussianRational>,
}

impl AnalyticPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(k: usize, c: GaussianRational) -> Self {
        let mut p = Self::zero();
        p.add_term(k, &c);
        p
    }

    /// `z^k`.
    pub fn basis(k: usize) -> Self {
        Self::monomial(k, GaussianRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, GaussianRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    /// Coefficients in ascending degree, `dense[k]` multiplying `z^k`.
    pub fn from_dense(dense: &[GaussianRational]) -> Self {
        Self::from_terms(dense.iter().cloned().enumerate())
    }

    pub fn add_term(&mut self, k: usize, c: &GaussianRational) {
        accumulate(&mut self.coeffs, k, c);
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(&k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &GaussianRational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest stored degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Dense coefficient vector of length `len`. Higher terms are dropped.
    pub fn to_dense(&self, len: usize) -> Vec<GaussianRational> {
        let mut out = vec![GaussianRational::zero(); len];
        for (k, c) in self.coeffs.range(..len) {
            out[*k] = c.clone();
        }
        out
    }

    pub fn scale(&self, a: &GaussianRational) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * a)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, &-c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }

    /// Reinterprets `Σ c_k z^k` as the mixed polynomial with keys `(k, 0)`.
    pub fn embed(&self) -> MixedPoly {
        MixedPoly { terms: self.coeffs.iter().map(|(k, c)| ((*k, 0), c.clone())).collect() }
    }

    /// The same polynomial viewed as an analytic symbol.
    pub fn to_symbol(&self) -> HarmonicSymbol {
        HarmonicSymbol { terms: self.coeffs.iter().map(|(k, c)| ((*k, 0), c.clone())).collect() }
    }

    /// Exact evaluation at a Gaussian rational point (Horner).
    pub fn eval_exact(&self, z: &GaussianRational) -> GaussianRational {
        let Some(deg) = self.degree() else {
            return GaussianRational::zero();
        };
        let mut acc = GaussianRational::zero();
        for k in (0..=deg).rev() {
            acc = &acc * z;
            if let Some(c) = self.coeffs.get(&k) {
                acc += c;
            }
        }
        acc
    }
}

/// A finite harmonic polynomial symbol `Σ c_{s,t} z^s z̄^t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HarmonicSymbol {
    terms: BTreeMap<(usize, usize), GaussianRational>,
}

impl HarmonicSymbol {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(0, 0, c)
    }

    /// The single term `c z^s z̄^t`.
    pub fn term(s: usize, t: usize, c: GaussianRational) -> Self {
        let mut p = Self::zero();
        p.add_term(s, t, &c);
        p
    }

    /// `z`.
    pub fn z() -> Self {
        Self::term(1, 0, GaussianRational::one())
    }

    /// `z̄`.
    pub fn zbar() -> Self {
        Self::term(0, 1, GaussianRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), GaussianRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((s, t), c) in terms {
            p.add_term(s, t, &c);
        }
        p
    }

    pub fn add_term(&mut self, s: usize, t: usize, c: &GaussianRational) {
        accumulate(&mut self.terms, (s, t), c);
    }

    pub fn coeff(&self, s: usize, t: usize) -> GaussianRational {
        self.terms.get(&(s, t)).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &GaussianRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when every term has `t = 0` (the zero symbol counts).
    pub fn is_analytic(&self) -> bool {
        self.terms.keys().all(|&(_, t)| t == 0)
    }

    /// True when every term has `s = 0`.
    pub fn is_coanalytic(&self) -> bool {
        self.terms.keys().all(|&(s, _)| s == 0)
    }

    /// Largest power of `z` across terms (0 for the zero symbol).
    pub fn max_s(&self) -> usize {
        self.terms.keys().map(|&(s, _)| s).max().unwrap_or(0)
    }

    /// Largest power of `z̄` across terms.
    pub fn max_t(&self) -> usize {
        self.terms.keys().map(|&(_, t)| t).max().unwrap_or(0)
    }

    /// First term with `t > 0`, if any.
    pub fn first_nonanalytic(&self) -> Option<(usize, usize)> {
        self.terms.keys().find(|&&(_, t)| t > 0).copied()
    }

    /// Analytic part as a polynomial; `None` if any term involves `z̄`.
    pub fn as_analytic(&self) -> Option<AnalyticPoly> {
        self.is_analytic().then(|| AnalyticPoly::from_terms(self.terms.iter().map(|(&(s, _), c)| (s, c.clone()))))
    }

    /// Complex conjugate: `c z^s z̄^t ↦ c̄ z^t z̄^s`.
    pub fn conj(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(s, t), c)| ((t, s), c.conj())).collect() }
    }

    pub fn scale(&self, a: &GaussianRational) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (*k, c * a)).collect() }
    }

    pub fn scale_rational(&self, a: &BigRational) -> Self {
        self.scale(&GaussianRational::real(a.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(s, t), c) in &other.terms {
            out.add_term(s, t, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    /// Pointwise product of symbols.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(s1, t1), a) in &self.terms {
            for (&(s2, t2), b) in &other.terms {
                out.add_term(s1 + s2, t1 + t2, &(a * b));
            }
        }
        out
    }

    /// `w·self + other`, the symbol of `w T_self + T_other`.
    pub fn combine(&self, w: &GaussianRational, other: &Self) -> Self {
        self.scale(w).add(other)
    }

    /// Float evaluation at a point of the closed disk.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let zc = z.conj();
        self.terms.iter().map(|(&(s, t), c)| c.to_complex64() * z.powu(s as u32) * zc.powu(t as u32)).sum()
    }
}

/// The product `φ·f` before projection, `Σ c_{s,t} z^s z̄^t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MixedPoly {
    terms: BTreeMap<(usize, usize), GaussianRational>,
}

impl MixedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(s: usize, t: usize, c: GaussianRational) -> Self {
        let mut p = Self::zero();
        p.add_term(s, t, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), GaussianRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((s, t), c) in terms {
            p.add_term(s, t, &c);
        }
        p
    }

    pub fn add_term(&mut self, s: usize, t: usize, c: &GaussianRational) {
        accumulate(&mut self.terms, (s, t), c);
    }

    pub fn coeff(&self, s: usize, t: usize) -> GaussianRational {
        self.terms.get(&(s, t)).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &GaussianRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_analytic(&self) -> bool {
        self.terms.keys().all(|&(_, t)| t == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    #[test]
    fn cancellation_removes_keys() {
        let mut p = AnalyticPoly::monomial(3, q(1, 2));
        p.add_term(3, &q(-1, 2));
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p, AnalyticPoly::zero());
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let p = AnalyticPoly::from_terms([(0, q(0, 1)), (2, q(1, 3))]);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.degree(), Some(2));
        let s = HarmonicSymbol::term(1, 1, GaussianRational::zero());
        assert!(s.is_zero());
    }

    #[test]
    fn analytic_and_coanalytic_flags() {
        let a = HarmonicSymbol::from_terms([((2, 0), q(1, 4)), ((0, 0), q(3, 4))]);
        assert!(a.is_analytic());
        assert!(!a.is_coanalytic());
        assert!(a.conj().is_coanalytic());
        let h = HarmonicSymbol::z().add(&HarmonicSymbol::zbar());
        assert!(!h.is_analytic());
        assert_eq!(h.first_nonanalytic(), Some((0, 1)));
        assert!(HarmonicSymbol::zero().is_analytic());
    }

    #[test]
    fn symbol_product_adds_exponents() {
        let p = HarmonicSymbol::z().mul(&HarmonicSymbol::zbar());
        assert_eq!(p, HarmonicSymbol::term(1, 1, GaussianRational::one()));
    }

    #[test]
    fn exact_horner() {
        let p = AnalyticPoly::from_terms([(0, q(1, 1)), (2, q(1, 1))]);
        assert_eq!(p.eval_exact(&GaussianRational::i()), GaussianRational::zero());
        assert_eq!(p.eval_exact(&q(1, 2)), q(5, 4));
    }

    #[test]
    fn dense_round_trip() {
        let p = AnalyticPoly::from_terms([(1, q(1, 3)), (4, GaussianRational::i())]);
        assert_eq!(AnalyticPoly::from_dense(&p.to_dense(5)), p);
        assert_eq!(p.to_dense(2).len(), 2);
    }
}
