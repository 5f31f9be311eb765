//! JSON formats. Every rational is a `"p/q"` string.
//!
//! ```json
//! {"terms": [{"s": 2, "t": 0, "re": "1/4", "im": "0"}]}   // symbol
//! {"coeffs": [{"k": 1, "re": "1/3", "im": "0"}]}          // polynomial
//! ```

use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, parse_rational, AnalyticPoly, Convention, GaussianRational, HarmonicSymbol};
use crate::error::{Error, Result};
use crate::forms::{ExactMatrix, FormMatrix};

fn zero_string() -> String {
    "0".to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: String,
    #[serde(default = "zero_string")]
    pub im: String,
}

impl ComplexJson {
    pub fn from_value(c: &GaussianRational) -> Self {
        Self { re: format_rational(c.re()), im: format_rational(c.im()) }
    }

    pub fn to_value(&self) -> Result<GaussianRational> {
        Ok(GaussianRational::new(parse_rational(&self.re)?, parse_rational(&self.im)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolTerm {
    pub s: usize,
    pub t: usize,
    pub re: String,
    #[serde(default = "zero_string")]
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolJson {
    pub terms: Vec<SymbolTerm>,
}

impl SymbolJson {
    pub fn from_symbol(phi: &HarmonicSymbol) -> Self {
        let terms = phi
            .iter()
            .map(|((s, t), c)| SymbolTerm { s, t, re: format_rational(c.re()), im: format_rational(c.im()) })
            .collect();
        Self { terms }
    }

    /// Repeated `(s, t)` keys are summed.
    pub fn to_symbol(&self) -> Result<HarmonicSymbol> {
        let mut out = HarmonicSymbol::zero();
        for term in &self.terms {
            let c = GaussianRational::new(parse_rational(&term.re)?, parse_rational(&term.im)?);
            out.add_term(term.s, term.t, &c);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyCoeff {
    pub k: usize,
    pub re: String,
    #[serde(default = "zero_string")]
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<PolyCoeff>,
}

impl PolyJson {
    pub fn from_poly(f: &AnalyticPoly) -> Self {
        let coeffs =
            f.iter().map(|(k, c)| PolyCoeff { k, re: format_rational(c.re()), im: format_rational(c.im()) }).collect();
        Self { coeffs }
    }

    pub fn to_poly(&self) -> Result<AnalyticPoly> {
        let mut out = AnalyticPoly::zero();
        for c in &self.coeffs {
            out.add_term(c.k, &GaussianRational::new(parse_rational(&c.re)?, parse_rational(&c.im)?));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub re: String,
    pub im: String,
}

/// Form matrix dump. `n` is the truncation degree (the matrix is
/// `(n+1)×(n+1)`); `entries` lists the upper triangle densely, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormMatrixJson {
    pub n: usize,
    pub convention: Convention,
    pub w: ComplexJson,
    pub phi: SymbolJson,
    pub psi: SymbolJson,
    pub entries: Vec<MatrixEntry>,
}

impl FormMatrixJson {
    pub fn from_form(form: &FormMatrix) -> Self {
        let entries = form
            .q
            .iter_upper()
            .map(|(row, col, c)| MatrixEntry { row, col, re: format_rational(c.re()), im: format_rational(c.im()) })
            .collect();
        Self {
            n: form.truncation,
            convention: form.convention,
            w: ComplexJson::from_value(&form.w),
            phi: SymbolJson::from_symbol(&form.phi),
            psi: SymbolJson::from_symbol(&form.psi),
            entries,
        }
    }

    /// Rebuilds the matrix from the upper triangle, mirroring by conjugation.
    pub fn to_form(&self) -> Result<FormMatrix> {
        let dim = self.n + 1;
        let expected = dim * (dim + 1) / 2;
        if self.entries.len() != expected {
            return Err(Error::Parse(format!(
                "expected {expected} upper-triangle entries, got {}",
                self.entries.len()
            )));
        }
        let mut q = ExactMatrix::zeros(dim, dim);
        let mut seen = vec![false; dim * dim];
        for e in &self.entries {
            if e.row > e.col || e.col >= dim {
                return Err(Error::Parse(format!("entry ({}, {}) is outside the upper triangle", e.row, e.col)));
            }
            if std::mem::replace(&mut seen[e.row * dim + e.col], true) {
                return Err(Error::Parse(format!("duplicate entry ({}, {})", e.row, e.col)));
            }
            let v = GaussianRational::new(parse_rational(&e.re)?, parse_rational(&e.im)?);
            if e.row == e.col && !v.is_real() {
                return Err(Error::NonHermitianInput { row: e.row, col: e.col });
            }
            q.set(e.col, e.row, v.conj());
            q.set(e.row, e.col, v);
        }
        Ok(FormMatrix {
            q,
            phi: self.phi.to_symbol()?,
            psi: self.psi.to_symbol()?,
            w: self.w.to_value()?,
            convention: self.convention,
            truncation: self.n,
        })
    }
}

pub fn parse_symbol_json(text: &str) -> Result<HarmonicSymbol> {
    let parsed: SymbolJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    parsed.to_symbol()
}

pub fn parse_poly_json(text: &str) -> Result<AnalyticPoly> {
    let parsed: PolyJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    parsed.to_poly()
}

pub fn parse_form_matrix_json(text: &str) -> Result<FormMatrix> {
    let parsed: FormMatrixJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    parsed.to_form()
}

pub fn symbol_to_json(phi: &HarmonicSymbol) -> serde_json::Value {
    serde_json::to_value(SymbolJson::from_symbol(phi)).expect("plain data serializes")
}

pub fn poly_to_json(f: &AnalyticPoly) -> serde_json::Value {
    serde_json::to_value(PolyJson::from_poly(f)).expect("plain data serializes")
}

pub fn form_matrix_to_json(form: &FormMatrix) -> serde_json::Value {
    serde_json::to_value(FormMatrixJson::from_form(form)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::form_matrix;

    #[test]
    fn symbol_round_trip() {
        let text = r#"{"terms":[{"s":2,"t":0,"re":"1/4"},{"s":0,"t":0,"re":"3/4","im":"0"},{"s":0,"t":1,"re":"-1","im":"2/3"}]}"#;
        let phi = parse_symbol_json(text).unwrap();
        assert_eq!(phi.coeff(2, 0), GaussianRational::ratio(1, 4));
        assert_eq!(phi.coeff(0, 1), GaussianRational::from_ratios((-1, 1), (2, 3)));
        let back = parse_symbol_json(&symbol_to_json(&phi).to_string()).unwrap();
        assert_eq!(back, phi);
    }

    #[test]
    fn rejects_decimals_and_bad_json() {
        assert!(matches!(parse_symbol_json(r#"{"terms":[{"s":1,"t":0,"re":"0.5"}]}"#), Err(Error::Parse(_))));
        assert!(matches!(parse_symbol_json(r#"{"terms":[{"s":1,"t":0,"re":"1/0"}]}"#), Err(Error::ZeroDenominator)));
        assert!(matches!(parse_symbol_json("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_symbol_json(r#"{"terms":[{"s":-1,"t":0,"re":"1"}]}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn poly_round_trip() {
        let f = AnalyticPoly::from_terms([(1, GaussianRational::ratio(1, 3)), (2, GaussianRational::ratio(-1, 9))]);
        let json = poly_to_json(&f);
        assert_eq!(json.to_string(), r#"{"coeffs":[{"im":"0","k":1,"re":"1/3"},{"im":"0","k":2,"re":"-1/9"}]}"#);
        assert_eq!(parse_poly_json(&json.to_string()).unwrap(), f);
    }

    #[test]
    fn form_matrix_round_trip() {
        let phi =
            HarmonicSymbol::from_terms([((2, 0), GaussianRational::ratio(1, 4)), ((0, 1), GaussianRational::i())]);
        let psi = HarmonicSymbol::from_terms([
            ((1, 1), GaussianRational::ratio(1, 3)),
            ((0, 2), GaussianRational::ratio(1, 2)),
        ]);
        for conv in Convention::ALL {
            let form = form_matrix(&phi, &psi, &GaussianRational::from_ratios((-1, 2), (1, 3)), 4, conv);
            let back = parse_form_matrix_json(&form_matrix_to_json(&form).to_string()).unwrap();
            assert_eq!(back, form);
        }
    }

    #[test]
    fn form_matrix_dump_is_validated() {
        let form = form_matrix(
            &HarmonicSymbol::zbar(),
            &HarmonicSymbol::zero(),
            &GaussianRational::from(1),
            1,
            Convention::Circle,
        );
        let mut dump = FormMatrixJson::from_form(&form);
        dump.entries.pop();
        assert!(dump.to_form().is_err());
        let mut dump = FormMatrixJson::from_form(&form);
        dump.entries[0].im = "1".into();
        assert_eq!(dump.to_form().unwrap_err(), Error::NonHermitianInput { row: 0, col: 0 });
    }
}
