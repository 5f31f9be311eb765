//! Recomputation of published worked examples in the disk convention.
//!
//! Each row pairs a published value with the value computed here. The
//! status is decided by comparison: exact equality for rationals and
//! polynomials, `5e-6` for published decimals.

use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{
    format_rational, inner, norm_sqr, rational_to_f64, toeplitz_apply, AnalyticPoly, Convention, GaussianRational,
    HarmonicSymbol,
};
use crate::forms::{form_matrix, hypo_verdict, normal_verdict, FormBlocks, HypoVerdict, NormalVerdict};
use crate::suite::cross_term;

/// Published decimals are compared within this absolute tolerance.
pub const DECIMAL_TOLERANCE: f64 = 5e-6;

/// Truncation used for the matrix-level rows.
pub const WORKED_TRUNCATION: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "MATCH-UNDER-REINTERPRETATION")]
    MatchUnderReinterpretation,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::MatchUnderReinterpretation => "MATCH-UNDER-REINTERPRETATION",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "MATCH" => Some(Status::Match),
            "MISMATCH" => Some(Status::Mismatch),
            "MATCH-UNDER-REINTERPRETATION" => Some(Status::MatchUnderReinterpretation),
            _ => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WorkedRow {
    pub id: &'static str,
    pub quantity: &'static str,
    pub reference: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn q(n: i64, d: i64) -> GaussianRational {
    GaussianRational::ratio(n, d)
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `1/12 + 1/3z + z^2`-style rendering, ascending degree.
pub fn format_poly(f: &AnalyticPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in f.iter() {
        let coeff = if c.is_real() { format_rational(c.re()) } else { format!("({c})") };
        let (sign, coeff) = match coeff.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", coeff),
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mono = match k {
            0 => String::new(),
            1 => "z".into(),
            _ => format!("z^{k}"),
        };
        if k == 0 {
            out.push_str(&coeff);
        } else if coeff == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{coeff}{mono}"));
        }
    }
    out
}

fn exact_row(id: &'static str, quantity: &'static str, reference: BigRational, computed: &BigRational) -> WorkedRow {
    let status = if &reference == computed { Status::Match } else { Status::Mismatch };
    WorkedRow {
        id,
        quantity,
        reference: format_rational(&reference),
        computed: format_rational(computed),
        status,
        note: None,
    }
}

fn poly_row(id: &'static str, quantity: &'static str, reference: AnalyticPoly, computed: &AnalyticPoly) -> WorkedRow {
    let status = if &reference == computed { Status::Match } else { Status::Mismatch };
    WorkedRow { id, quantity, reference: format_poly(&reference), computed: format_poly(computed), status, note: None }
}

/// Direct reading first; the alternative reading only rescues a mismatch.
fn reinterpreted_row(
    id: &'static str,
    quantity: &'static str,
    reference: BigRational,
    direct: &BigRational,
    alternative: (&str, &BigRational),
) -> WorkedRow {
    let (reading, alt) = alternative;
    if &reference == direct {
        return exact_row(id, quantity, reference, direct);
    }
    let status = if &reference == alt { Status::MatchUnderReinterpretation } else { Status::Mismatch };
    WorkedRow {
        id,
        quantity,
        reference: format_rational(&reference),
        computed: format!("{} (direct reading)", format_rational(direct)),
        status,
        note: Some(format!("{reading} = {}", format_rational(alt))),
    }
}

fn real(c: &GaussianRational) -> BigRational {
    assert!(c.is_real(), "expected a real value, got {c}");
    c.re().clone()
}

/// `φ = z²/4 + 3/4`, `ψ = z²/3 + z/3 + 1/3`.
pub fn two_quadratics() -> (HarmonicSymbol, HarmonicSymbol) {
    (
        HarmonicSymbol::from_terms([((2, 0), q(1, 4)), ((0, 0), q(3, 4))]),
        HarmonicSymbol::from_terms([((2, 0), q(1, 3)), ((1, 0), q(1, 3)), ((0, 0), q(1, 3))]),
    )
}

/// `φ = z + z̄`, `ψ = z + z²`.
pub fn self_adjoint_plus_analytic() -> (HarmonicSymbol, HarmonicSymbol) {
    (
        HarmonicSymbol::z().add(&HarmonicSymbol::zbar()),
        HarmonicSymbol::from_terms([((1, 0), q(1, 1)), ((2, 0), q(1, 1))]),
    )
}

fn two_quadratics_rows() -> Vec<WorkedRow> {
    let conv = Convention::PaperDisk;
    let (phi, psi) = two_quadratics();
    let (phi_bar, psi_bar) = (phi.conj(), psi.conj());
    let h = AnalyticPoly::basis(1);
    let w = q(-1, 2);

    let t_phi = toeplitz_apply(&phi, &h, conv);
    let t_psi = toeplitz_apply(&psi, &h, conv);
    let ta_phi = toeplitz_apply(&phi_bar, &h, conv);
    let ta_psi = toeplitz_apply(&psi_bar, &h, conv);

    let analytic = real(&inner(&t_psi, &t_phi, conv));
    let coanalytic = real(&inner(&ta_phi, &ta_psi, conv));
    let self_phi = norm_sqr(&t_phi, conv) - norm_sqr(&ta_phi, conv);
    let self_psi = norm_sqr(&t_psi, conv) - norm_sqr(&ta_psi, conv);
    let cross = cross_term(&phi, &psi, &w, &h, conv);

    // The aggregate, recomputed from its three parts and checked against
    // the matrix of the full form at the same vector.
    let two = BigRational::from_integer(2.into());
    let aggregate = w.norm_sqr() * &self_phi + &self_psi + &two * cross.re();
    let matrix_value = form_matrix(&phi, &psi, &w, 1, conv).eval(&h);
    assert_eq!(aggregate, matrix_value, "polynomial and matrix routes disagree");

    let published_aggregate = -0.03162;
    let agg_f = rational_to_f64(&aggregate);
    let agg_status =
        if (agg_f - published_aggregate).abs() <= DECIMAL_TOLERANCE { Status::Match } else { Status::Mismatch };

    vec![
        poly_row(
            "two-quadratics/apply-psi",
            "T_ψ z",
            AnalyticPoly::from_terms([(1, q(1, 3)), (2, q(1, 3)), (3, q(1, 3))]),
            &t_psi,
        ),
        poly_row("two-quadratics/apply-phi", "T_φ z", AnalyticPoly::from_terms([(1, q(3, 4)), (3, q(1, 4))]), &t_phi),
        poly_row("two-quadratics/adjoint-phi", "T_φ^* z", AnalyticPoly::monomial(1, q(3, 4)), &ta_phi),
        poly_row(
            "two-quadratics/adjoint-psi",
            "T_ψ^* z",
            AnalyticPoly::from_terms([(0, q(1, 12)), (1, q(1, 3))]),
            &ta_psi,
        ),
        exact_row("two-quadratics/analytic-inner", "<T_ψ z, T_φ z>", r(7, 96), &analytic),
        exact_row("two-quadratics/coanalytic-inner", "<T_φ^* z, T_ψ^* z>", r(1, 16), &coanalytic),
        exact_row("two-quadratics/cross-term", "Re{w̄ <[T_φ^*, T_ψ] z, z>}, w = -1/2", r(-1, 192), cross.re()),
        exact_row("two-quadratics/self-form-phi", "<[T_φ^*, T_φ] z, z>", r(1, 128), &self_phi),
        exact_row("two-quadratics/self-form-psi", "<[T_ψ^*, T_ψ] z, z>", r(25, 864), &self_psi),
        WorkedRow {
            id: "two-quadratics/aggregate",
            quantity: "<[(wT_φ+T_ψ)^*, wT_φ+T_ψ] z, z>, w = -1/2",
            reference: "-0.03162".into(),
            computed: format!("{} ≈ {agg_f:.5}", format_rational(&aggregate)),
            status: agg_status,
            note: Some("|w|²·(1/128) + 25/864 + 2·(-1/192) from the matched parts".into()),
        },
    ]
}

fn adjoint_pair_rows() -> Vec<WorkedRow> {
    // Any symbol with a hyponormal Toeplitz operator will do; the shift is
    // hyponormal in the disk convention (diagonal form, positive entries).
    let conv = Convention::PaperDisk;
    let n = WORKED_TRUNCATION;
    let phi = HarmonicSymbol::z();
    let phi_bar = phi.conj();
    let lhs = form_matrix(&phi_bar, &phi, &q(-2, 1), n, conv).q;
    let base = FormBlocks::new(&phi, &HarmonicSymbol::zero(), n, conv).self_phi;
    let identity_holds = lhs == base.scale(&q(-3, 1));
    let base_psd = crate::forms::psd_check(&base).map(|c| c.is_psd()).unwrap_or(false);
    let verdict = hypo_verdict(&phi_bar, &phi, &q(-2, 1), n, conv).expect("form matrices are Hermitian");
    let refuted = verdict.is_refuted();
    let computed_verdict = match &verdict {
        HypoVerdict::RefutedNotHyponormal { form_value, witness } => {
            format!(
                "refuted at level {n} (witness {}, form value {})",
                format_poly(witness),
                format_rational(form_value)
            )
        }
        HypoVerdict::PsdAtLevel { .. } => format!("psd at level {n}"),
    };
    vec![
        WorkedRow {
            id: "adjoint-pair/commutator-identity",
            quantity: "[(T_φ - 2T_φ̄)^*, T_φ - 2T_φ̄] = -3[T_φ^*, T_φ], φ = z",
            reference: "identity".into(),
            computed: format!("{} at level {n}", if identity_holds { "holds entrywise" } else { "fails" }),
            status: if identity_holds { Status::Match } else { Status::Mismatch },
            note: None,
        },
        WorkedRow {
            id: "adjoint-pair/verdict",
            quantity: "T_φ - 2T_φ̄ hyponormal? (T_φ hyponormal)",
            reference: "not hyponormal".into(),
            computed: computed_verdict,
            status: if refuted && base_psd { Status::Match } else { Status::Mismatch },
            note: None,
        },
    ]
}

fn self_adjoint_plus_analytic_rows() -> Vec<WorkedRow> {
    let conv = Convention::PaperDisk;
    let (phi, psi) = self_adjoint_plus_analytic();
    let h = AnalyticPoly::basis(1);
    let t_phi = toeplitz_apply(&phi, &h, conv);
    let t_psi = toeplitz_apply(&psi, &h, conv);
    let ta_phi = toeplitz_apply(&phi.conj(), &h, conv);
    let ta_psi = toeplitz_apply(&psi.conj(), &h, conv);

    let self_phi_zero = FormBlocks::new(&phi, &HarmonicSymbol::zero(), WORKED_TRUNCATION, conv).self_phi.is_zero();

    let analytic = real(&inner(&t_psi, &t_phi, conv));
    let mixed_direct = &analytic - real(&inner(&ta_phi, &t_psi, conv));
    let mixed_alt = &analytic - real(&inner(&ta_phi, &ta_psi, conv));

    let phi_sq = norm_sqr(&t_phi, conv);
    let self_direct = &phi_sq - real(&inner(&ta_phi, &t_phi, conv));
    let psi_self = norm_sqr(&t_psi, conv) - norm_sqr(&ta_psi, conv);

    let w = q(-1, 1);
    let left = ta_phi.scale(&w.conj()).add(&ta_psi);
    let right = t_phi.scale(&w).add(&t_psi);
    let pairing = real(&inner(&left, &right, conv));

    let verdict = normal_verdict(&phi, &psi, &w, WORKED_TRUNCATION, conv).expect("w is nonzero");
    let (computed_verdict, not_normal) = match &verdict {
        NormalVerdict::NotNormal { witness, form_value, w_used } => (
            format!(
                "not normal (witness {}, form value {} at w = {w_used})",
                format_poly(witness),
                format_rational(form_value)
            ),
            true,
        ),
        NormalVerdict::NormalAtLevel(n) => (format!("normal at level {n}"), false),
    };
    let form_at_z = norm_sqr(&right, conv) - norm_sqr(&left, conv);

    let mut self_row = exact_row(
        "self-adjoint-plus-analytic/self-bracket",
        "<T_φ z, T_φ z> - <T_φ^* z, T_φ z>",
        r(25, 96),
        &self_direct,
    );
    if self_row.status == Status::Mismatch && psi_self == r(25, 96) {
        self_row.note = Some(format!("<[T_ψ^*, T_ψ] z, z> = {}", format_rational(&psi_self)));
    }

    vec![
        WorkedRow {
            id: "self-adjoint-plus-analytic/self-adjoint",
            quantity: "[T_φ^*, T_φ] = 0",
            reference: "0".into(),
            computed: format!(
                "{} at level {WORKED_TRUNCATION}",
                if self_phi_zero { "zero matrix" } else { "nonzero matrix" }
            ),
            status: if self_phi_zero { Status::Match } else { Status::Mismatch },
            note: None,
        },
        poly_row(
            "self-adjoint-plus-analytic/apply-psi",
            "T_ψ z",
            AnalyticPoly::from_terms([(2, q(1, 1)), (3, q(1, 1))]),
            &t_psi,
        ),
        poly_row("self-adjoint-plus-analytic/adjoint-psi", "T_ψ^* z", AnalyticPoly::constant(q(1, 4)), &ta_psi),
        poly_row(
            "self-adjoint-plus-analytic/apply-phi",
            "T_φ z",
            AnalyticPoly::from_terms([(0, q(1, 4)), (2, q(1, 1))]),
            &t_phi,
        ),
        exact_row("self-adjoint-plus-analytic/norm-apply-psi", "<T_ψ z, T_ψ z>", r(7, 24), &norm_sqr(&t_psi, conv)),
        exact_row(
            "self-adjoint-plus-analytic/norm-adjoint-psi",
            "<T_ψ^* z, T_ψ^* z>",
            r(1, 32),
            &norm_sqr(&ta_psi, conv),
        ),
        exact_row("self-adjoint-plus-analytic/norm-apply-phi", "<T_φ z, T_φ z>", r(19, 96), &phi_sq),
        reinterpreted_row(
            "self-adjoint-plus-analytic/mixed-bracket",
            "<T_ψ z, T_φ z> - <T_φ^* z, T_ψ z>",
            r(13, 96),
            &mixed_direct,
            ("<T_ψ z, T_φ z> - <T_φ^* z, T_ψ^* z>", &mixed_alt),
        ),
        self_row,
        exact_row(
            "self-adjoint-plus-analytic/pairing-at-minus-one",
            "<(w̄T_φ^* + T_ψ^*) z, (wT_φ + T_ψ) z>, w = -1",
            r(17, 32),
            &pairing,
        ),
        WorkedRow {
            id: "self-adjoint-plus-analytic/verdict",
            quantity: "wT_φ + T_ψ normal? (w = -1)",
            reference: "not normal".into(),
            computed: computed_verdict,
            status: if not_normal { Status::Match } else { Status::Mismatch },
            note: Some(format!("self-commutator form at z: {}", format_rational(&form_at_z))),
        },
    ]
}

pub fn worked_rows() -> Vec<WorkedRow> {
    let mut rows = two_quadratics_rows();
    rows.extend(adjoint_pair_rows());
    rows.extend(self_adjoint_plus_analytic_rows());
    rows
}

/// Facts printed next to the table that have no published counterpart.
pub fn informational_lines() -> Vec<String> {
    let conv = Convention::PaperDisk;
    let (phi, psi) = two_quadratics();
    let w = q(-1, 2);
    let n = WORKED_TRUNCATION;
    let verdict = hypo_verdict(&phi, &psi, &w, n, conv).expect("form matrices are Hermitian");
    let verdict_line = match verdict {
        HypoVerdict::PsdAtLevel { singular, .. } => format!(
            "two-quadratics: compression at level {n} with w = -1/2 is PSD{} (no refutation at this level)",
            if singular { " (singular)" } else { "" }
        ),
        HypoVerdict::RefutedNotHyponormal { witness, form_value } => format!(
            "two-quadratics: refuted at level {n} with w = -1/2 (witness {}, form value {})",
            format_poly(&witness),
            format_rational(&form_value)
        ),
    };
    let cs = crate::suite::cauchy_schwarz_check(&phi, &psi, &AnalyticPoly::basis(1), conv);
    let cs_line = format!(
        "two-quadratics: |<[T_φ^*, T_ψ] z, z>|² = {} vs <[T_φ^*, T_φ] z, z><[T_ψ^*, T_ψ] z, z> = {}: inequality {}",
        format_rational(&cs.lhs_sq),
        format_rational(&cs.rhs),
        if cs.holds { "holds" } else { "fails" }
    );
    vec![verdict_line, cs_line]
}
