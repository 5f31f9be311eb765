use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use toeplitz_lab::algebra::{format_rational, parse_decimal_rational};
use toeplitz_lab::io::{form_matrix_to_json, parse_poly_json, parse_symbol_json, poly_to_json};
use toeplitz_lab::kernels::{min_modulus, sup_norm_estimate};
use toeplitz_lab::suite::CsvOptions;
use toeplitz_lab::worked::{format_poly, informational_lines, worked_rows, Status};
use toeplitz_lab::{
    cauchy_schwarz_check, expand_rational_symbol, form_matrix, hypo_verdict, invariant_residual, kernel_bound_check,
    normal_verdict, theorem_coeff_check, w_scan, GaussianRational, GridSpec, HarmonicSymbol, HypoVerdict,
    NormalVerdict, RationalSymbolSpec,
};

use crate::args::{Command, GlobalArgs, OutFormat, SymbolPair, WeightArg};
use crate::report::{to_pretty, RunConfig};
use crate::selfcheck;

/// Whether the command found what it was looking for. Maps to exit 0 / 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Negative,
}

pub struct Output {
    pub text: String,
    pub outcome: Outcome,
}

const BUNDLED_LEDGER: &str = include_str!("../data/expected_statuses.json");

fn read_symbol(path: &Path) -> Result<HarmonicSymbol> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_symbol_json(&text).with_context(|| format!("bad symbol file {}", path.display()))
}

fn read_pair(p: &SymbolPair) -> Result<(HarmonicSymbol, HarmonicSymbol)> {
    let phi = read_symbol(&p.phi)?;
    let psi = match &p.psi {
        Some(path) => read_symbol(path)?,
        None => HarmonicSymbol::zero(),
    };
    Ok((phi, psi))
}

fn gaussian(re: &str, im: &str) -> Result<GaussianRational> {
    let re = parse_decimal_rational(re).with_context(|| format!("bad number {re:?}"))?;
    let im = parse_decimal_rational(im).with_context(|| format!("bad number {im:?}"))?;
    Ok(GaussianRational::new(re, im))
}

fn weight(w: &WeightArg) -> Result<GaussianRational> {
    gaussian(&w.re, &w.im)
}

fn complex_json(c: &GaussianRational) -> Value {
    json!({ "re": format_rational(c.re()), "im": format_rational(c.im()) })
}

fn json_only(cmd: &str, requested: Option<OutFormat>) -> Result<OutFormat> {
    match requested {
        None | Some(OutFormat::Json) => Ok(OutFormat::Json),
        Some(other) => bail!("{cmd} supports only --out json, not {}", other.as_str()),
    }
}

fn emit_json(cfg: &RunConfig, body: Value, outcome: Outcome) -> Output {
    Output { text: to_pretty(&cfg.wrap(body)), outcome }
}

pub fn run(global: &GlobalArgs, command: &Command) -> Result<Output> {
    let n = global.truncation;
    let conv = global.convention;
    match command {
        Command::VerifyExamples { ledger } => verify_examples(global, ledger.as_deref()),

        Command::HypoCheck { symbols, w } => {
            let cfg = RunConfig { global, out: json_only("hypo-check", global.out)? };
            let (phi, psi) = read_pair(symbols)?;
            let w = weight(w)?;
            let verdict = hypo_verdict(&phi, &psi, &w, n, conv)?;
            let (body, outcome) = match &verdict {
                HypoVerdict::RefutedNotHyponormal { witness, form_value } => (
                    json!({
                        "w": complex_json(&w),
                        "verdict": "refuted",
                        "witness": poly_to_json(witness),
                        "witness_text": format_poly(witness),
                        "form_value": format_rational(form_value),
                    }),
                    Outcome::Negative,
                ),
                HypoVerdict::PsdAtLevel { level, singular } => (
                    json!({ "w": complex_json(&w), "verdict": "psd", "level": level, "singular": singular }),
                    Outcome::Ok,
                ),
            };
            Ok(emit_json(&cfg, body, outcome))
        }

        Command::ScanW { symbols, exact_columns, diagnostics } => {
            let out = global.out.unwrap_or(OutFormat::Csv);
            let cfg = RunConfig { global, out };
            let grid_text = global.grid.as_deref().context("scan-w needs --grid re0:re1:steps,im0:im1:steps")?;
            let grid: GridSpec = grid_text.parse()?;
            let (phi, psi) = read_pair(symbols)?;
            let scan = w_scan(&phi, &psi, &grid, n, conv)?;
            let text = match out {
                OutFormat::Csv | OutFormat::Text => {
                    let opts =
                        CsvOptions { precision: global.precision, exact: *exact_columns, diagnostics: *diagnostics };
                    scan.to_csv(&cfg.pairs(), &opts)
                }
                OutFormat::Json => {
                    let points: Vec<Value> = scan
                        .points
                        .iter()
                        .map(|p| {
                            let mut v = json!({
                                "row": p.row,
                                "col": p.col,
                                "w": complex_json(&p.w),
                                "verdict": p.verdict.label(),
                                "singular": p.singular(),
                            });
                            if let HypoVerdict::RefutedNotHyponormal { witness, form_value } = &p.verdict {
                                v["witness"] = poly_to_json(witness);
                                v["form_value"] = Value::String(format_rational(form_value));
                            }
                            v
                        })
                        .collect();
                    let excluded: Vec<Value> = scan.excluded.iter().map(|(r, c)| json!([r, c])).collect();
                    to_pretty(&cfg.wrap(json!({
                        "points": points,
                        "excluded": excluded,
                        "refuted": scan.refuted_count(),
                        "psd": scan.psd_count(),
                    })))
                }
            };
            Ok(Output { text, outcome: Outcome::Ok })
        }

        Command::NormalCheck { symbols, w } => {
            let cfg = RunConfig { global, out: json_only("normal-check", global.out)? };
            let (phi, psi) = read_pair(symbols)?;
            let w = weight(w)?;
            let verdict = normal_verdict(&phi, &psi, &w, n, conv)?;
            let (body, outcome) = match &verdict {
                NormalVerdict::NormalAtLevel(level) => {
                    (json!({ "w": complex_json(&w), "verdict": "normal", "level": level }), Outcome::Ok)
                }
                NormalVerdict::NotNormal { witness, form_value, w_used } => (
                    json!({
                        "w": complex_json(&w),
                        "verdict": "not-normal",
                        "witness": poly_to_json(witness),
                        "witness_text": format_poly(witness),
                        "form_value": format_rational(form_value),
                        "w_used": complex_json(w_used),
                    }),
                    Outcome::Negative,
                ),
            };
            Ok(emit_json(&cfg, body, outcome))
        }

        Command::CauchySchwarz { symbols, h } => {
            let cfg = RunConfig { global, out: json_only("cauchy-schwarz", global.out)? };
            let (phi, psi) = read_pair(symbols)?;
            let text = fs::read_to_string(h).with_context(|| format!("cannot read {}", h.display()))?;
            let h = parse_poly_json(&text).with_context(|| format!("bad polynomial file {}", h.display()))?;
            let rep = cauchy_schwarz_check(&phi, &psi, &h, conv);
            let outcome = if rep.holds { Outcome::Ok } else { Outcome::Negative };
            Ok(emit_json(&cfg, rep.to_json(), outcome))
        }

        Command::KernelBound { symbols, alpha, alpha_im, grid_m } => {
            let cfg = RunConfig { global, out: json_only("kernel-bound", global.out)? };
            let (phi, psi) = read_pair(symbols)?;
            let alpha = gaussian(alpha, alpha_im)?;
            if *grid_m < 8 {
                bail!("--grid-m must be at least 8");
            }
            let rep = kernel_bound_check(&phi, &psi, &alpha, n, *grid_m)?;
            let outcome = if rep.holds { Outcome::Ok } else { Outcome::Negative };
            let mut body = serde_json::to_value(&rep)?;
            body["alpha"] = complex_json(&alpha);
            body["kernel_convention"] = Value::String("circle".into());
            Ok(emit_json(&cfg, body, outcome))
        }

        Command::InvariantSubspace { symbols, w, c, c_im, order } => {
            let cfg = RunConfig { global, out: json_only("invariant-subspace", global.out)? };
            let (phi, psi) = read_pair(symbols)?;
            let w = weight(w)?;
            let c = gaussian(c, c_im)?;
            let residual = invariant_residual(&phi, &psi, &w, &c, *order, n)?;
            let within = residual <= global.tolerance;
            let body = json!({
                "w": complex_json(&w),
                "c": complex_json(&c),
                "order": order,
                "kernel_convention": "circle",
                "residual": residual,
                "within_tolerance": within,
            });
            Ok(emit_json(&cfg, body, if within { Outcome::Ok } else { Outcome::Negative }))
        }

        Command::ExpandSymbol { u, u_im, v, v_im } => {
            let cfg = RunConfig { global, out: json_only("expand-symbol", global.out)? };
            let spec = RationalSymbolSpec::new(gaussian(u, u_im)?, gaussian(v, v_im)?)?;
            let poly = expand_rational_symbol(&spec, n)?;
            Ok(emit_json(&cfg, poly_to_json(&poly), Outcome::Ok))
        }

        Command::CoeffCheck { u, v, s, t, alpha, alpha_im } => {
            let cfg = RunConfig { global, out: json_only("coeff-check", global.out)? };
            let real = |x: &str| gaussian(x, "0");
            let rep = theorem_coeff_check(&real(u)?, &real(v)?, &real(s)?, &real(t)?, &gaussian(alpha, alpha_im)?, n)?;
            let tails_ok = rep.tail_lhs.ok && rep.tail_rhs.ok;
            let body = serde_json::to_value(&rep)?;
            Ok(emit_json(&cfg, body, if tails_ok { Outcome::Ok } else { Outcome::Negative }))
        }

        Command::SymbolGrid { phi, grid_m } => {
            let cfg = RunConfig { global, out: json_only("symbol-grid", global.out)? };
            if *grid_m < 8 {
                bail!("--grid-m must be at least 8");
            }
            let phi = read_symbol(phi)?;
            let body = json!({
                "grid_m": grid_m,
                "sup_norm_lower_bound": sup_norm_estimate(&phi, *grid_m),
                "min_modulus_estimate": min_modulus(&phi, *grid_m),
            });
            Ok(emit_json(&cfg, body, Outcome::Ok))
        }

        Command::DumpMatrix { symbols, w } => {
            let cfg = RunConfig { global, out: json_only("dump-matrix", global.out)? };
            let (phi, psi) = read_pair(symbols)?;
            let form = form_matrix(&phi, &psi, &weight(w)?, n, conv);
            Ok(emit_json(&cfg, form_matrix_to_json(&form), Outcome::Ok))
        }

        Command::SelfCheck { cases } => {
            let cfg = RunConfig { global, out: json_only("self-check", global.out)? };
            let summary = selfcheck::run(global.seed, *cases);
            let outcome = if summary.all_passed() { Outcome::Ok } else { Outcome::Negative };
            Ok(emit_json(&cfg, serde_json::to_value(&summary)?, outcome))
        }
    }
}

fn load_ledger(path: Option<&Path>) -> Result<BTreeMap<String, Status>> {
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?,
        None => BUNDLED_LEDGER.to_string(),
    };
    let raw: BTreeMap<String, String> = serde_json::from_str(&text).context("ledger must map ids to statuses")?;
    raw.into_iter()
        .map(|(id, s)| match Status::parse(&s) {
            Some(status) => Ok((id, status)),
            None => bail!("unknown status {s:?} for {id}"),
        })
        .collect()
}

fn verify_examples(global: &GlobalArgs, ledger_path: Option<&Path>) -> Result<Output> {
    let ledger = load_ledger(ledger_path)?;
    let out = global.out.unwrap_or(OutFormat::Text);
    let cfg = RunConfig { global, out };
    let rows = worked_rows();
    let info = informational_lines();

    let mut agree = true;
    let expected: Vec<Option<Status>> = rows.iter().map(|r| ledger.get(r.id).copied()).collect();
    for (row, exp) in rows.iter().zip(&expected) {
        if *exp != Some(row.status) {
            agree = false;
        }
    }
    let unknown: Vec<&String> = ledger.keys().filter(|id| !rows.iter().any(|r| r.id == id.as_str())).collect();
    if !unknown.is_empty() {
        agree = false;
    }
    let outcome = if agree { Outcome::Ok } else { Outcome::Negative };
    let exp_str = |e: &Option<Status>| e.map_or("(missing)", Status::as_str);

    let text = match out {
        OutFormat::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .zip(&expected)
                .map(|(r, e)| {
                    let mut v = serde_json::to_value(r).expect("rows serialize");
                    v["expected"] = Value::String(exp_str(e).to_string());
                    v
                })
                .collect();
            to_pretty(&cfg.wrap(json!({
                "convention": "paper-disk",
                "rows": rows_json,
                "informational": info,
                "unknown_ledger_ids": unknown,
                "ledger_agrees": agree,
            })))
        }
        OutFormat::Csv => {
            let mut s = cfg.text_header();
            s.push_str("id,reference,computed,status,expected\n");
            for (r, e) in rows.iter().zip(&expected) {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.id,
                    csv_field(&r.reference),
                    csv_field(&r.computed),
                    r.status,
                    exp_str(e)
                ));
            }
            s
        }
        OutFormat::Text => {
            let mut s = cfg.text_header();
            s.push_str("# worked examples are always evaluated in the paper-disk convention\n");
            let w_id = rows.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
            let w_ref = rows.iter().map(|r| r.reference.chars().count()).max().unwrap_or(9).max(9);
            s.push_str(&format!("{:<w_id$}  {:<w_ref$}  {:<28}  {}\n", "id", "reference", "status", "computed"));
            for (r, e) in rows.iter().zip(&expected) {
                let flag = if *e == Some(r.status) { "" } else { "  <-- expected " };
                s.push_str(&format!(
                    "{:<w_id$}  {:<w_ref$}  {:<28}  {}{}{}\n",
                    r.id,
                    r.reference,
                    r.status.as_str(),
                    r.computed,
                    flag,
                    if flag.is_empty() { "" } else { exp_str(e) }
                ));
                if let Some(note) = &r.note {
                    s.push_str(&format!("{:<w_id$}  {:<w_ref$}  {:<28}  note: {note}\n", "", "", ""));
                }
            }
            for id in &unknown {
                s.push_str(&format!("ledger entry {id} has no matching row\n"));
            }
            for line in &info {
                s.push_str(&format!("info: {line}\n"));
            }
            s.push_str(if agree {
                "all statuses match the expected-status ledger\n"
            } else {
                "statuses differ from the expected-status ledger\n"
            });
            s
        }
    };
    Ok(Output { text, outcome })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
