//! Matrix representations at truncation `N`.
//!
//! Images of `z^0 … z^N` are kept at full degree (`N + d` rows), so for any
//! `h` of degree at most `N` the quadratic form `h^H Q h` is exact.

use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::ExactMatrix;
use crate::algebra::{toeplitz_apply, AnalyticPoly, Convention, GaussianRational, HarmonicSymbol};

/// Matrix of `T_φ` on `span{1, z, …, z^N}`; column `k` holds the
/// coefficients of `T_φ z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApplyMatrix {
    pub entries: ExactMatrix,
    pub convention: Convention,
    pub truncation: usize,
    /// Largest power of `z` in the symbol.
    pub shift: usize,
}

pub fn apply_matrix(phi: &HarmonicSymbol, n: usize, conv: Convention) -> ApplyMatrix {
    apply_matrix_rows(phi, n, n + phi.max_s() + 1, conv)
}

/// As [`apply_matrix`] but padded to `rows` rows (must hold every image).
fn apply_matrix_rows(phi: &HarmonicSymbol, n: usize, rows: usize, conv: Convention) -> ApplyMatrix {
    debug_assert!(rows > n + phi.max_s());
    let mut entries = ExactMatrix::zeros(rows, n + 1);
    for k in 0..=n {
        let image = toeplitz_apply(phi, &AnalyticPoly::basis(k), conv);
        for (r, c) in image.iter() {
            entries.set(r, k, c.clone());
        }
    }
    ApplyMatrix { entries, convention: conv, truncation: n, shift: phi.max_s() }
}

/// Diagonal Gram weights `⟨z^k, z^k⟩`, `k = 0..=M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub weights: Vec<BigRational>,
    pub convention: Convention,
}

pub fn gram(m: usize, conv: Convention) -> GramMatrix {
    GramMatrix { weights: (0..=m).map(|k| conv.weight(k)).collect(), convention: conv }
}

impl GramMatrix {
    /// `X^H G Y`, i.e. entry `(i, j)` is `⟨Y e_j, X e_i⟩`.
    pub fn sandwich(&self, x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
        assert_eq!(x.rows(), self.weights.len());
        assert_eq!(y.rows(), self.weights.len());
        let mut out = ExactMatrix::zeros(x.cols(), y.cols());
        for i in 0..x.cols() {
            for j in 0..y.cols() {
                let mut acc = GaussianRational::zero();
                for (r, g) in self.weights.iter().enumerate() {
                    let a = x.get(r, i);
                    let b = y.get(r, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(&a.conj() * b).scale(g);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

/// Hermitian matrix of `h ↦ ⟨[(wT_φ+T_ψ)^*, wT_φ+T_ψ] h, h⟩` on polynomials
/// of degree at most `N`, with `T^*` read as `T_{φ̄}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    pub q: ExactMatrix,
    pub phi: HarmonicSymbol,
    pub psi: HarmonicSymbol,
    pub w: GaussianRational,
    pub convention: Convention,
    pub truncation: usize,
}

impl FormMatrix {
    pub fn dim(&self) -> usize {
        self.truncation + 1
    }

    /// `h^H Q h` for `deg h ≤ N`.
    pub fn eval(&self, h: &AnalyticPoly) -> BigRational {
        assert!(h.degree().is_none_or(|d| d <= self.truncation), "h exceeds truncation");
        self.q.hermitian_form(&h.to_dense(self.dim()))
    }
}

/// The three Hermitian/sesquilinear blocks behind a form matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormBlocks {
    /// `A_φ^H G A_φ − B_φ^H G B_φ`: the self-commutator form of `T_φ`.
    pub self_phi: ExactMatrix,
    /// Same for `ψ`.
    pub self_psi: ExactMatrix,
    /// `A_φ^H G A_ψ − B_ψ^H G B_φ`: the matrix of `h ↦ ⟨[T_φ^*, T_ψ]h, h⟩`.
    pub cross: ExactMatrix,
}

impl FormBlocks {
    pub fn new(phi: &HarmonicSymbol, psi: &HarmonicSymbol, n: usize, conv: Convention) -> Self {
        let phi_bar = phi.conj();
        let psi_bar = psi.conj();
        let d = [phi, &phi_bar, psi, &psi_bar].iter().map(|s| s.max_s()).max().unwrap_or(0);
        let rows = n + d + 1;
        let a_phi = apply_matrix_rows(phi, n, rows, conv).entries;
        let b_phi = apply_matrix_rows(&phi_bar, n, rows, conv).entries;
        let a_psi = apply_matrix_rows(psi, n, rows, conv).entries;
        let b_psi = apply_matrix_rows(&psi_bar, n, rows, conv).entries;
        let g = gram(rows - 1, conv);
        let self_phi = g.sandwich(&a_phi, &a_phi).sub(&g.sandwich(&b_phi, &b_phi));
        let self_psi = g.sandwich(&a_psi, &a_psi).sub(&g.sandwich(&b_psi, &b_psi));
        let cross = g.sandwich(&a_phi, &a_psi).sub(&g.sandwich(&b_psi, &b_phi));
        Self { self_phi, self_psi, cross }
    }

    /// `|w|² F_φ + F_ψ + w̄ X + w X^H`.
    pub fn combine(&self, w: &GaussianRational) -> ExactMatrix {
        let wn = GaussianRational::real(w.norm_sqr());
        self.self_phi
            .scale(&wn)
            .add(&self.self_psi)
            .add(&self.cross.scale(&w.conj()))
            .add(&self.cross.conj_transpose().scale(w))
    }
}

pub fn form_matrix(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    w: &GaussianRational,
    n: usize,
    conv: Convention,
) -> FormMatrix {
    let q = FormBlocks::new(phi, psi, n, conv).combine(w);
    FormMatrix { q, phi: phi.clone(), psi: psi.clone(), w: w.clone(), convention: conv, truncation: n }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> GaussianRational {
        GaussianRational::ratio(n, d)
    }

    #[test]
    fn shift_matrix_on_circle() {
        let m = apply_matrix(&HarmonicSymbol::z(), 1, Convention::Circle);
        assert_eq!((m.entries.rows(), m.entries.cols()), (3, 2));
        let mut expected = ExactMatrix::zeros(3, 2);
        expected.set(1, 0, q(1, 1));
        expected.set(2, 1, q(1, 1));
        assert_eq!(m.entries, expected);
        assert_eq!(m.shift, 1);
    }

    #[test]
    fn coanalytic_on_disk() {
        let m = apply_matrix(&HarmonicSymbol::zbar(), 1, Convention::PaperDisk);
        let mut expected = ExactMatrix::zeros(2, 2);
        expected.set(0, 1, q(1, 4));
        assert_eq!(m.entries, expected);
    }

    #[test]
    fn zero_symbol_gives_zero_matrix() {
        for conv in Convention::ALL {
            assert!(apply_matrix(&HarmonicSymbol::zero(), 4, conv).entries.is_zero());
        }
    }

    #[test]
    fn gram_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(gram(2, Convention::PaperDisk).weights, vec![r(1, 2), r(1, 4), r(1, 6)]);
        assert_eq!(gram(2, Convention::Circle).weights, vec![r(1, 1); 3]);
        assert_eq!(gram(0, Convention::Bergman).weights, vec![r(1, 2)]);
    }

    #[test]
    fn self_adjoint_symbol_gives_zero_form() {
        let h = HarmonicSymbol::z().add(&HarmonicSymbol::zbar());
        for conv in Convention::ALL {
            assert!(form_matrix(&h, &h, &q(1, 1), 4, conv).q.is_zero());
        }
    }

    #[test]
    fn shift_self_commutator() {
        let f = form_matrix(&HarmonicSymbol::z(), &HarmonicSymbol::zero(), &q(1, 1), 2, Convention::Circle);
        assert_eq!(f.q, ExactMatrix::diagonal(&[q(1, 1), q(0, 1), q(0, 1)]));
    }
}
