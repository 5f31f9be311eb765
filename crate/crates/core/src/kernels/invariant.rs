use num_complex::Complex64;

use super::kernel::{derivative_kernel_poly, KernelSpec};
use crate::algebra::{toeplitz_apply, AnalyticPoly, Convention, GaussianRational, HarmonicSymbol};
use crate::error::{Error, Result};

const DEGENERATE_RATIO: f64 = 1e-12;

/// Largest relative distance from `(wT_φ + T_ψ)^* K^{[j]}_c` to the span of
/// `K_c, K^{[1]}_c, …, K^{[m]}_c`, over `j = 0..=m`, with all kernels
/// truncated at degree `N`. Circle convention.
pub fn invariant_residual(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    w: &GaussianRational,
    c: &GaussianRational,
    m: usize,
    n: usize,
) -> Result<f64> {
    for sym in [phi, psi] {
        if let Some((s, t)) = sym.first_nonanalytic() {
            return Err(Error::NonAnalyticSymbol { s, t });
        }
    }
    let adjoint = phi.combine(w, psi).conj();
    let kernels = (0..=m)
        .map(|j| KernelSpec::new(c.clone(), j, n).map(|s| derivative_kernel_poly(&s)))
        .collect::<Result<Vec<_>>>()?;
    let basis = orthonormalize(kernels.iter().map(|k| to_vec(k, n)).collect())?;

    let mut worst: f64 = 0.0;
    for k in &kernels {
        let image = to_vec(&toeplitz_apply(&adjoint, k, Convention::Circle), n);
        let norm = norm(&image);
        if norm == 0.0 {
            continue;
        }
        let mut r = image;
        // Two projection passes keep the residual accurate near zero.
        for _ in 0..2 {
            for e in &basis {
                let coef = dot(e, &r);
                for (ri, ei) in r.iter_mut().zip(e) {
                    *ri -= coef * ei;
                }
            }
        }
        worst = worst.max(self::norm(&r) / norm);
    }
    Ok(worst)
}

fn to_vec(p: &AnalyticPoly, n: usize) -> Vec<Complex64> {
    p.to_dense(n + 1).iter().map(GaussianRational::to_complex64).collect()
}

/// `⟨y, x⟩ = Σ conj(x_k) y_k`, the coefficient of `x` in `y` for unit `x`.
fn dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Modified Gram–Schmidt with reorthogonalization.
fn orthonormalize(vectors: Vec<Vec<Complex64>>) -> Result<Vec<Vec<Complex64>>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(vectors.len());
    for mut v in vectors {
        let original = norm(&v);
        for _ in 0..2 {
            for e in &basis {
                let coef = dot(e, &v);
                for (vi, ei) in v.iter_mut().zip(e) {
                    *vi -= coef * ei;
                }
            }
        }
        let remaining = norm(&v);
        let ratio = if original == 0.0 { 0.0 } else { remaining / original };
        if ratio < DEGENERATE_RATIO {
            return Err(Error::DegenerateSpan { ratio });
        }
        for vi in &mut v {
            *vi /= remaining;
        }
        basis.push(v);
    }
    Ok(basis)
}
