//! Grid estimates of `sup|φ|` and `min|φ|` over the closed disk.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::HarmonicSymbol;

const RING_RADII: [f64; 4] = [0.0, 0.25, 0.5, 0.75];

/// `M` points on the unit circle plus `M/4` points on each of the rings of
/// radius 0, 1/4, 1/2, 3/4.
pub fn sample_points(m: usize) -> Vec<Complex64> {
    assert!(m >= 8, "grid needs at least 8 samples");
    let mut pts: Vec<Complex64> = (0..m).map(|j| Complex64::from_polar(1.0, TAU * j as f64 / m as f64)).collect();
    let per_ring = m / 4;
    for r in RING_RADII {
        pts.extend((0..per_ring).map(|j| Complex64::from_polar(r, TAU * j as f64 / per_ring as f64)));
    }
    pts
}

/// Largest sampled `|φ|`. A lower bound on the sup-norm.
pub fn sup_norm_estimate(phi: &HarmonicSymbol, m: usize) -> f64 {
    sample_points(m).par_iter().map(|&z| phi.eval(z).norm()).reduce(|| 0.0, f64::max)
}

/// Smallest sampled `|φ|`. Zero or near zero flags non-invertibility.
pub fn min_modulus(phi: &HarmonicSymbol, m: usize) -> f64 {
    sample_points(m).par_iter().map(|&z| phi.eval(z).norm()).reduce(|| f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussianRational;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    #[test]
    fn sample_count() {
        assert_eq!(sample_points(8).len(), 16);
        assert_eq!(sample_points(360).len(), 720);
    }

    #[test]
    fn sup_norms() {
        assert!((sup_norm_estimate(&HarmonicSymbol::z(), 16) - 1.0).abs() < 1e-15);
        let cos = HarmonicSymbol::z().add(&HarmonicSymbol::zbar());
        assert!((sup_norm_estimate(&cos, 360) - 2.0).abs() < 1e-3);
        let quad = HarmonicSymbol::from_terms([((2, 0), q(1, 4)), ((0, 0), q(3, 4))]);
        assert!((sup_norm_estimate(&quad, 360) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn min_moduli() {
        let shifted = HarmonicSymbol::from_terms([((1, 0), q(1, 1)), ((0, 0), q(3, 1))]);
        assert!((min_modulus(&shifted, 360) - 2.0).abs() < 1e-6);
        assert_eq!(min_modulus(&HarmonicSymbol::z(), 64), 0.0);
        assert_eq!(min_modulus(&HarmonicSymbol::constant(q(5, 1)), 8), 5.0);
    }
}
