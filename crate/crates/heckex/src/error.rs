use std::fmt;

/// Domain-precondition violations.
///
/// Every fallible operation in this crate reports one of these; none of them
/// are recoverable states, they all mean the caller passed arguments outside
/// the documented domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `w` must be an even integer with `w >= 2`.
    InvalidWeight { w: u32 },
    /// `n` must be odd and satisfy `0 < n < w`.
    InvalidExponent { w: u32, n: u32 },
    /// Symbol parameters require `0 < n < w` (any parity).
    InvalidSymbolExponent { w: u32, n: u32 },
    /// Hecke index `m` must be positive.
    InvalidHeckeIndex { m: u32 },
    /// Divisor sums are defined for positive arguments only.
    NonpositiveSigmaArgument,
    /// Symbol points live on `Z+ x Z`, so `h >= 1`.
    InvalidSymbolPoint { h: u64 },
    /// Inner products require both polynomials to have the same degree.
    DegreeMismatch { left: u32, right: u32 },
    /// Coefficient vector length must be `w + 1`.
    CoefficientLength { w: u32, len: usize },
    /// The operation needs a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Matrix construction with inconsistent entry count.
    EntryCount { rows: usize, cols: usize, len: usize },
    /// Principal submatrix size exceeds the matrix size.
    SubmatrixTooLarge { size: usize, requested: usize },
    /// Column selection is parametrized only for even `w >= 12`.
    WeightBelowSelectionRange { w: u32 },
    /// The power index `r` must be at least 1.
    InvalidPowerIndex { r: u32 },
    /// Transform on symbols is defined relative to an `m = 1` base symbol.
    BaseNotUnit { m: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWeight { w } => {
                write!(f, "w must be even and >= 2, got {w}")
            }
            Error::InvalidExponent { w, n } => {
                write!(f, "n must be odd with 0 < n < w, got n = {n}, w = {w}")
            }
            Error::InvalidSymbolExponent { w, n } => {
                write!(f, "n must satisfy 0 < n < w, got n = {n}, w = {w}")
            }
            Error::InvalidHeckeIndex { m } => {
                write!(f, "m must be >= 1, got {m}")
            }
            Error::NonpositiveSigmaArgument => {
                write!(f, "divisor sums are defined for n >= 1 only")
            }
            Error::InvalidSymbolPoint { h } => {
                write!(f, "symbol points require h >= 1, got h = {h}")
            }
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::CoefficientLength { w, len } => {
                write!(f, "degree-{w} polynomial needs {} coefficients, got {len}", w + 1)
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::EntryCount { rows, cols, len } => {
                write!(f, "{rows}x{cols} matrix needs {} entries, got {len}", rows * cols)
            }
            Error::SubmatrixTooLarge { size, requested } => {
                write!(f, "principal submatrix of size {requested} exceeds matrix size {size}")
            }
            Error::WeightBelowSelectionRange { w } => {
                write!(f, "column selection requires even w >= 12, got {w}")
            }
            Error::InvalidPowerIndex { r } => {
                write!(f, "power index r must be >= 1, got {r}")
            }
            Error::BaseNotUnit { m } => {
                write!(f, "transform base symbol must have m = 1, got m = {m}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
