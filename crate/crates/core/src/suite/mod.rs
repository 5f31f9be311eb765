//! Checks built on the form machinery: the cross term, the Cauchy–Schwarz
//! inequality between brackets, and the w-plane scanner.

pub mod checks;
pub mod scan;

pub use checks::{cauchy_schwarz_check, cross_term, CsReport};
pub use scan::{w_scan, w_scan_direct, Axis, CsvOptions, GridSpec, ScanPoint, WScanGrid};
