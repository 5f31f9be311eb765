//! Exact positive-semidefiniteness decision for Hermitian matrices over the
//! Gaussian rationals, by symmetric pivoted elimination.
//!
//! A `NotPsd` answer always carries a witness `x` with `x^H Q x < 0`,
//! re-evaluated on the original matrix.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::ExactMatrix;
use crate::algebra::GaussianRational;
#[cfg(test)]
use crate::error::Error;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PsdVerdict {
    Psd,
    NotPsd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub index: usize,
    pub value: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsdCertificate {
    pub verdict: PsdVerdict,
    pub witness: Option<Vec<GaussianRational>>,
    /// `x^H Q x` at the witness; strictly negative.
    pub witness_value: Option<BigRational>,
    /// Positive pivots in elimination order.
    pub pivots: Vec<Pivot>,
    /// Indices whose row and column vanished in a Schur complement.
    pub zero_rows: Vec<usize>,
}

impl PsdCertificate {
    pub fn is_psd(&self) -> bool {
        self.verdict == PsdVerdict::Psd
    }

    /// PSD with at least one vanishing Schur row, i.e. singular.
    pub fn is_singular(&self) -> bool {
        self.is_psd() && !self.zero_rows.is_empty()
    }
}

struct Step {
    pivot: usize,
    value: BigRational,
    /// `(j, M[p][j])` over the indices still active at this step, `j ≠ p`.
    row: Vec<(usize, GaussianRational)>,
}

pub fn psd_check(q: &ExactMatrix) -> Result<PsdCertificate> {
    q.check_hermitian()?;
    let n = q.rows();
    let mut m: Vec<Vec<GaussianRational>> = (0..n).map(|i| (0..n).map(|j| q.get(i, j).clone()).collect()).collect();
    let mut active = vec![true; n];
    let mut steps: Vec<Step> = Vec::new();
    let mut zero_rows = Vec::new();

    loop {
        let act: Vec<usize> = (0..n).filter(|&i| active[i]).collect();
        if act.is_empty() {
            return Ok(PsdCertificate {
                verdict: PsdVerdict::Psd,
                witness: None,
                witness_value: None,
                pivots: steps.into_iter().map(|s| Pivot { index: s.pivot, value: s.value }).collect(),
                zero_rows,
            });
        }

        // Negative diagonal of the current Schur complement.
        if let Some(&j) = act.iter().find(|&&j| m[j][j].re().is_negative()) {
            let mut y = vec![GaussianRational::zero(); n];
            y[j] = GaussianRational::one();
            return Ok(not_psd(q, &steps, y, zero_rows));
        }

        // Zero diagonal with a nonzero entry in its row.
        for &j in &act {
            if !m[j][j].is_zero() {
                continue;
            }
            if let Some(&k) = act.iter().find(|&&k| k != j && !m[j][k].is_zero()) {
                // y = e_j + c e_k with c = -τ conj(b): y^H S y = |b|² τ (S_kk τ − 2) < 0.
                let b = &m[j][k];
                let s_kk = m[k][k].re().clone();
                let tau = if s_kk.is_zero() { BigRational::one() } else { s_kk.recip() };
                let mut y = vec![GaussianRational::zero(); n];
                y[j] = GaussianRational::one();
                y[k] = -b.conj().scale(&tau);
                return Ok(not_psd(q, &steps, y, zero_rows));
            }
        }

        // Zero rows drop out.
        for &j in &act {
            if m[j][j].is_zero() {
                active[j] = false;
                zero_rows.push(j);
            }
        }

        // Largest positive diagonal, lowest index on ties.
        let mut best: Option<usize> = None;
        for &j in act.iter().filter(|&&j| active[j]) {
            if best.is_none_or(|b| m[j][j].re() > m[b][b].re()) {
                best = Some(j);
            }
        }
        let Some(p) = best else { continue };

        let pivot = m[p][p].re().clone();
        let others: Vec<usize> = (0..n).filter(|&i| active[i] && i != p).collect();
        let row: Vec<(usize, GaussianRational)> = others.iter().map(|&j| (j, m[p][j].clone())).collect();
        let inv = pivot.recip();
        for &i in &others {
            let l = m[i][p].scale(&inv);
            if l.is_zero() {
                continue;
            }
            for &j in &others {
                let upd = &l * &m[p][j];
                if !upd.is_zero() {
                    m[i][j] -= &upd;
                }
            }
        }
        active[p] = false;
        steps.push(Step { pivot: p, value: pivot, row });
    }
}

/// Lifts a Schur-complement witness back through the elimination steps and
/// evaluates it on the original matrix.
fn not_psd(q: &ExactMatrix, steps: &[Step], mut x: Vec<GaussianRational>, zero_rows: Vec<usize>) -> PsdCertificate {
    for step in steps.iter().rev() {
        let mut acc = GaussianRational::zero();
        for (j, mpj) in &step.row {
            if !x[*j].is_zero() {
                acc += &(mpj * &x[*j]);
            }
        }
        x[step.pivot] = -acc.scale(&step.value.recip());
    }
    let value = q.hermitian_form(&x);
    assert!(value.is_negative(), "witness lifting produced a nonnegative form value");
    PsdCertificate {
        verdict: PsdVerdict::NotPsd,
        witness: Some(x),
        witness_value: Some(value),
        pivots: steps.iter().map(|s| Pivot { index: s.pivot, value: s.value.clone() }).collect(),
        zero_rows,
    }
}

/// Some `x` with `x^H Q x ≠ 0`, if `Q` is a nonzero Hermitian matrix.
pub fn nonzero_form_witness(q: &ExactMatrix) -> Option<(Vec<GaussianRational>, BigRational)> {
    let n = q.rows();
    let unit = |i: usize| {
        let mut x = vec![GaussianRational::zero(); n];
        x[i] = GaussianRational::one();
        x
    };
    if let Some(i) = (0..n).find(|&i| !q.get(i, i).is_zero()) {
        let x = unit(i);
        let v = q.hermitian_form(&x);
        return Some((x, v));
    }
    // All diagonals vanish: x = e_i + conj(Q_ij) e_j gives 2|Q_ij|².
    let (i, j) = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !q.get(i, j).is_zero())?;
    let mut x = unit(i);
    x[j] = q.get(i, j).conj();
    let v = q.hermitian_form(&x);
    Some((x, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from(n)
    }

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| g(x)).collect()).collect())
    }

    #[test]
    fn identity_is_psd() {
        let c = psd_check(&ExactMatrix::identity(2)).unwrap();
        assert!(c.is_psd());
        assert_eq!(c.pivots.len(), 2);
        assert!(!c.is_singular());
    }

    #[test]
    fn negative_diagonal_gives_unit_witness() {
        let c = psd_check(&m(&[&[1, 0], &[0, -1]])).unwrap();
        assert_eq!(c.verdict, PsdVerdict::NotPsd);
        assert_eq!(c.witness.unwrap(), vec![g(0), g(1)]);
        assert_eq!(c.witness_value.unwrap(), BigRational::from_integer((-1).into()));
    }

    #[test]
    fn indefinite_two_by_two() {
        let a = m(&[&[1, 2], &[2, 1]]);
        // The textbook witness (1, -1) gives -2.
        assert_eq!(a.hermitian_form(&[g(1), g(-1)]), BigRational::from_integer((-2).into()));
        let c = psd_check(&a).unwrap();
        assert_eq!(c.verdict, PsdVerdict::NotPsd);
        // Pivot on index 0, Schur complement 1 - 4 = -3, lifted witness (-2, 1).
        assert_eq!(c.witness.unwrap(), vec![g(-2), g(1)]);
        assert_eq!(c.witness_value.unwrap(), BigRational::from_integer((-3).into()));
    }

    #[test]
    fn zero_diagonal_with_coupling() {
        let a = m(&[&[0, 1], &[1, 0]]);
        let c = psd_check(&a).unwrap();
        assert_eq!(c.verdict, PsdVerdict::NotPsd);
        assert!(c.witness_value.unwrap().is_negative());

        let b = m(&[&[0, 1], &[1, 3]]);
        let c = psd_check(&b).unwrap();
        assert!(c.witness_value.unwrap().is_negative());
    }

    #[test]
    fn rank_deficient_psd() {
        let a = m(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 0]]);
        let c = psd_check(&a).unwrap();
        assert!(c.is_psd());
        assert!(c.is_singular());
        assert_eq!(c.pivots.len(), 1);
        assert!(psd_check(&ExactMatrix::zeros(3, 3)).unwrap().is_psd());
    }

    #[test]
    fn complex_hermitian() {
        // [[1, i], [-i, 1]] is PSD (eigenvalues 0, 2); [[1, 2i], [-2i, 1]] is not.
        let i = GaussianRational::i();
        let a = ExactMatrix::from_rows(vec![vec![g(1), i.clone()], vec![-&i, g(1)]]);
        assert!(psd_check(&a).unwrap().is_psd());
        let two_i = GaussianRational::from_ints(0, 2);
        let b = ExactMatrix::from_rows(vec![vec![g(1), two_i.clone()], vec![-&two_i, g(1)]]);
        assert!(!psd_check(&b).unwrap().is_psd());
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = m(&[&[1, 2], &[3, 1]]);
        assert_eq!(psd_check(&a), Err(Error::NonHermitianInput { row: 0, col: 1 }));
    }

    #[test]
    fn nonzero_witness() {
        assert!(nonzero_form_witness(&ExactMatrix::zeros(3, 3)).is_none());
        let (_, v) = nonzero_form_witness(&m(&[&[0, 3], &[3, 0]])).unwrap();
        assert_eq!(v, BigRational::from_integer(18.into()));
    }
}
