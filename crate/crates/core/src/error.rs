use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (entry ({row}, {col}) differs from the conjugate of its transpose)")]
    NonHermitianInput { row: usize, col: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("kernel point must lie in the open unit disk (|alpha|^2 = {norm_sqr})")]
    AlphaOutsideDisk { norm_sqr: String },

    #[error("derivative order {order} exceeds truncation degree {truncation}")]
    OrderExceedsTruncation { order: usize, truncation: usize },

    #[error("symbol is not an analytic polynomial (term z^{s} conj(z)^{t})")]
    NonAnalyticSymbol { s: usize, t: usize },

    #[error("symbol does not map the disk into itself (sup-norm estimate {estimate})")]
    SymbolNotSelfMap { estimate: f64 },

    #[error("kernel vectors are numerically dependent (relative pivot {ratio:e})")]
    DegenerateSpan { ratio: f64 },

    #[error("geometric expansion does not converge (|u| >= |v|)")]
    NotConvergent,

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(&'static str),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
