use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::GaussianRational;
use crate::error::{Error, Result};

/// Dense row-major matrix of Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::from(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[GaussianRational]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Ok if square and exactly equal to its conjugate transpose.
    pub fn check_hermitian(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.get(i, j) != self.get(j, i).conj() {
                    return Err(Error::NonHermitianInput { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    pub fn is_hermitian(&self) -> bool {
        self.check_hermitian().is_ok()
    }

    pub fn scale(&self, a: &GaussianRational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * a).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Top-left `n × n` block.
    pub fn leading_block(&self, n: usize) -> Self {
        assert!(n <= self.rows && n <= self.cols);
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// `x^H M x`. Real whenever `M` is Hermitian.
    pub fn quadratic_form(&self, x: &[GaussianRational]) -> GaussianRational {
        assert!(self.is_square() && x.len() == self.rows);
        let mut acc = GaussianRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let mut row = GaussianRational::zero();
            for (j, xj) in x.iter().enumerate() {
                if !xj.is_zero() {
                    row += &(self.get(i, j) * xj);
                }
            }
            acc += &(&xi.conj() * &row);
        }
        acc
    }

    /// Real part of `x^H M x` for Hermitian `M`.
    pub fn hermitian_form(&self, x: &[GaussianRational]) -> BigRational {
        self.quadratic_form(x).re().clone()
    }

    pub fn max_abs_f64(&self) -> f64 {
        self.data.iter().map(|x| x.to_complex64().norm()).fold(0.0, f64::max)
    }

    pub fn iter_upper(&self) -> impl Iterator<Item = (usize, usize, &GaussianRational)> {
        (0..self.rows).flat_map(move |i| (i..self.cols).map(move |j| (i, j, self.get(i, j))))
    }
}
