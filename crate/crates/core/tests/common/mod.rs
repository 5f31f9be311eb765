//! Random generators and independent reference computations shared by the
//! integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toeplitz_lab::{AnalyticPoly, Convention, GaussianRational, HarmonicSymbol};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gq(n: i64, d: i64) -> GaussianRational {
    GaussianRational::ratio(n, d)
}

/// Gaussian rational with numerators in `-4..=4` and denominators in `1..=4`.
pub fn small(rng: &mut ChaCha8Rng) -> GaussianRational {
    let (dr, di) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    GaussianRational::from_ratios((rng.gen_range(-4..=4), dr), (rng.gen_range(-4..=4), di))
}

pub fn small_real(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=4))
}

pub fn nonzero(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let w = small(rng);
        if w.inv().is_some() {
            return w;
        }
    }
}

pub fn symbol(rng: &mut ChaCha8Rng, max_deg: usize, max_terms: usize) -> HarmonicSymbol {
    let terms = rng.gen_range(1..=max_terms);
    HarmonicSymbol::from_terms(
        (0..terms).map(|_| ((rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg)), small(rng))),
    )
}

pub fn analytic_symbol(rng: &mut ChaCha8Rng, max_deg: usize) -> HarmonicSymbol {
    poly(rng, max_deg).to_symbol()
}

pub fn poly(rng: &mut ChaCha8Rng, max_deg: usize) -> AnalyticPoly {
    let deg = rng.gen_range(0..=max_deg);
    AnalyticPoly::from_terms((0..=deg).map(|k| (k, small(rng))))
}

/// Analytic polynomial with `Σ|c_k| ≤ 1`, hence a self-map of the closed disk.
/// Coefficients are real or purely imaginary multiples of `1/8`, so their
/// moduli are exact.
pub fn self_map(rng: &mut ChaCha8Rng, max_deg: usize) -> HarmonicSymbol {
    let deg = rng.gen_range(1..=max_deg);
    let mut budget = 8i64;
    let mut terms = Vec::new();
    for k in 0..=deg {
        if budget == 0 {
            break;
        }
        let share = rng.gen_range(0..=budget);
        budget -= share;
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let c = if rng.gen_bool(0.5) {
            GaussianRational::ratio(sign * share, 8)
        } else {
            GaussianRational::from_ratios((0, 1), (sign * share, 8))
        };
        terms.push(((k, 0), c));
    }
    HarmonicSymbol::from_terms(terms)
}

/// Point of the open disk with rational coordinates, `|α| ≤ 3/4`.
pub fn disk_point(rng: &mut ChaCha8Rng) -> GaussianRational {
    let (a, b) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
    let d = rng.gen_range(6..=12);
    GaussianRational::from_ratios((a, d), (b, d))
}

/// Reference implementation of projection and inner product, written
/// against the monomial rules directly rather than through the library.
pub struct Reference {
    pub conv: Convention,
}

pub type Dense = BTreeMap<usize, GaussianRational>;

impl Reference {
    fn weight(&self, k: usize) -> BigRational {
        match self.conv {
            Convention::Circle => rat(1, 1),
            Convention::PaperDisk | Convention::Bergman => rat(1, 2 * (k as i64 + 1)),
        }
    }

    /// Image of `z^a z̄^b` under the projection.
    fn monomial(&self, a: usize, b: usize) -> Option<(usize, BigRational)> {
        if b > a {
            return None;
        }
        let (a_i, b_i) = (a as i64, b as i64);
        let factor = match self.conv {
            Convention::Circle => rat(1, 1),
            Convention::Bergman => rat(a_i - b_i + 1, a_i + 1),
            Convention::PaperDisk if b == 0 => rat(1, 1),
            Convention::PaperDisk => rat(1, 2 * (a_i + 1)),
        };
        Some((a - b, factor))
    }

    pub fn apply(&self, phi: &HarmonicSymbol, f: &AnalyticPoly) -> Dense {
        let mut out = Dense::new();
        for ((s, t), c) in phi.iter() {
            for (k, d) in f.iter() {
                if let Some((deg, factor)) = self.monomial(s + k, t) {
                    let term = (c.clone() * d).scale(&factor);
                    let slot = out.entry(deg).or_insert_with(|| GaussianRational::from(0));
                    *slot += &term;
                }
            }
        }
        out
    }

    pub fn inner(&self, f: &Dense, g: &Dense) -> GaussianRational {
        let mut acc = GaussianRational::from(0);
        for (k, a) in f {
            if let Some(b) = g.get(k) {
                acc += &(a.clone() * b.conj()).scale(&self.weight(*k));
            }
        }
        acc
    }

    /// `‖T_χ h‖² − ‖T_χ̄ h‖²` with `χ = wφ + ψ`.
    pub fn sum_form(
        &self,
        phi: &HarmonicSymbol,
        psi: &HarmonicSymbol,
        w: &GaussianRational,
        h: &AnalyticPoly,
    ) -> BigRational {
        let chi = phi.scale(w).add(psi);
        let a = self.apply(&chi, h);
        let b = self.apply(&chi.conj(), h);
        let v = self.inner(&a, &a) - self.inner(&b, &b);
        assert!(v.im() == &rat(0, 1));
        v.re().clone()
    }
}

pub fn dense(f: &AnalyticPoly) -> Dense {
    f.iter().map(|(k, c)| (k, c.clone())).collect()
}

pub fn to_poly(d: &Dense) -> AnalyticPoly {
    AnalyticPoly::from_terms(d.iter().map(|(k, c)| (*k, c.clone())))
}
