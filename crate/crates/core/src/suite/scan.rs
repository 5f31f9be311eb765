//! Exact w-plane scanner.

use std::fmt::Write as _;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{
    format_decimal, format_rational, parse_decimal_rational, AnalyticPoly, Convention, GaussianRational, HarmonicSymbol,
};
use crate::error::{Error, Result};
use crate::forms::verdict::verdict_from_matrix;
use crate::forms::{hypo_verdict, FormBlocks, HypoVerdict};

/// One axis of a grid: `steps` points from `min` to `max` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis {
    pub min: BigRational,
    pub max: BigRational,
    pub steps: usize,
}

impl Axis {
    pub fn new(min: BigRational, max: BigRational, steps: usize) -> Result<Self> {
        if steps == 0 {
            return Err(Error::InvalidGrid("steps must be at least 1".into()));
        }
        Ok(Self { min, max, steps })
    }

    /// `min + (max − min)·i/(steps − 1)`, or `min` for a single step.
    pub fn point(&self, i: usize) -> BigRational {
        if self.steps == 1 {
            return self.min.clone();
        }
        let frac = BigRational::new(i.into(), (self.steps - 1).into());
        &self.min + (&self.max - &self.min) * frac
    }

    fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, steps] = parts.as_slice() else {
            return Err(Error::InvalidGrid(format!("expected min:max:steps, got {s:?}")));
        };
        let steps =
            steps.trim().parse::<usize>().map_err(|_| Error::InvalidGrid(format!("bad step count {steps:?}")))?;
        Self::new(parse_decimal_rational(lo)?, parse_decimal_rational(hi)?, steps)
    }
}

/// Rectangular grid in the w-plane, written `re0:re1:steps,im0:im1:steps`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub re: Axis,
    pub im: Axis,
}

impl GridSpec {
    pub fn new(re: Axis, im: Axis) -> Self {
        Self { re, im }
    }

    /// Symmetric square grid `[−r, r]²` with `steps` points per side.
    pub fn square(radius: BigRational, steps: usize) -> Result<Self> {
        let axis = Axis::new(-radius.clone(), radius, steps)?;
        Ok(Self { re: axis.clone(), im: axis })
    }

    pub fn len(&self) -> usize {
        self.re.steps * self.im.steps
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The point at `(row, col)`; rows run along the imaginary axis.
    pub fn point(&self, row: usize, col: usize) -> GaussianRational {
        GaussianRational::new(self.re.point(col), self.im.point(row))
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.im.steps).flat_map(move |r| (0..self.re.steps).map(move |c| (r, c)))
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| Error::InvalidGrid(format!("expected re0:re1:steps,im0:im1:steps, got {s:?}")))?;
        Ok(Self { re: Axis::parse(re)?, im: Axis::parse(im)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanPoint {
    pub row: usize,
    pub col: usize,
    pub w: GaussianRational,
    pub verdict: HypoVerdict,
}

impl ScanPoint {
    pub fn witness(&self) -> Option<&AnalyticPoly> {
        match &self.verdict {
            HypoVerdict::RefutedNotHyponormal { witness, .. } => Some(witness),
            HypoVerdict::PsdAtLevel { .. } => None,
        }
    }

    /// PSD with a vanishing Schur row.
    pub fn singular(&self) -> bool {
        matches!(self.verdict, HypoVerdict::PsdAtLevel { singular: true, .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WScanGrid {
    pub grid: GridSpec,
    pub truncation: usize,
    pub convention: Convention,
    /// Row-major by `(row, col)`, excluded points omitted.
    pub points: Vec<ScanPoint>,
    /// Cells where `w = 0`.
    pub excluded: Vec<(usize, usize)>,
}

impl WScanGrid {
    pub fn refuted_count(&self) -> usize {
        self.points.iter().filter(|p| p.verdict.is_refuted()).count()
    }

    pub fn psd_count(&self) -> usize {
        self.points.len() - self.refuted_count()
    }
}

/// Verdict at every nonzero grid point. Points are evaluated in parallel;
/// the output order is fixed.
pub fn w_scan(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    grid: &GridSpec,
    n: usize,
    conv: Convention,
) -> Result<WScanGrid> {
    let blocks = FormBlocks::new(phi, psi, n, conv);
    let cells: Vec<(usize, usize)> = grid.cells().collect();
    let excluded: Vec<(usize, usize)> = cells.iter().copied().filter(|&(r, c)| grid.point(r, c).is_zero()).collect();
    let points = cells
        .par_iter()
        .filter_map(|&(row, col)| {
            let w = grid.point(row, col);
            if w.is_zero() {
                return None;
            }
            Some(verdict_from_blocks(&blocks, &w, n).map(|verdict| ScanPoint { row, col, w, verdict }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WScanGrid { grid: grid.clone(), truncation: n, convention: conv, points, excluded })
}

fn verdict_from_blocks(blocks: &FormBlocks, w: &GaussianRational, n: usize) -> Result<HypoVerdict> {
    verdict_from_matrix(&blocks.combine(w), n)
}

/// Same result as [`w_scan`], one form matrix per point. Kept as a
/// reference path.
pub fn w_scan_direct(
    phi: &HarmonicSymbol,
    psi: &HarmonicSymbol,
    grid: &GridSpec,
    n: usize,
    conv: Convention,
) -> Result<WScanGrid> {
    let mut points = Vec::new();
    let mut excluded = Vec::new();
    for (row, col) in grid.cells() {
        let w = grid.point(row, col);
        if w.is_zero() {
            excluded.push((row, col));
            continue;
        }
        let verdict = hypo_verdict(phi, psi, &w, n, conv)?;
        points.push(ScanPoint { row, col, w, verdict });
    }
    Ok(WScanGrid { grid: grid.clone(), truncation: n, convention: conv, points, excluded })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsvOptions {
    /// Fractional digits for the decimal `re`/`im` columns.
    pub precision: usize,
    /// Add `re_exact`/`im_exact` columns with `p/q` strings.
    pub exact: bool,
    /// Add a `singular` column (PSD with a zero Schur pivot).
    pub diagnostics: bool,
}

impl Default for CsvOptions {
    fn default() -> Self {
        Self { precision: 6, exact: false, diagnostics: false }
    }
}

impl WScanGrid {
    /// CSV with `# key=value` comment lines for `header`, then the column
    /// header and one line per evaluated point.
    pub fn to_csv(&self, header: &[(String, String)], opts: &CsvOptions) -> String {
        let mut out = String::new();
        for (k, v) in header {
            let _ = writeln!(out, "# {k}={v}");
        }
        out.push_str("re,im,verdict,witness_available");
        if opts.exact {
            out.push_str(",re_exact,im_exact");
        }
        if opts.diagnostics {
            out.push_str(",singular");
        }
        out.push('\n');
        for p in &self.points {
            let _ = write!(
                out,
                "{},{},{},{}",
                format_decimal(p.w.re(), opts.precision),
                format_decimal(p.w.im(), opts.precision),
                p.verdict.label(),
                p.witness().is_some()
            );
            if opts.exact {
                let _ = write!(out, ",{},{}", format_rational(p.w.re()), format_rational(p.w.im()));
            }
            if opts.diagnostics {
                let _ = write!(out, ",{}", p.singular());
            }
            out.push('\n');
        }
        out
    }
}
