use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure the core library can report.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A count, index or parameter fell outside its allowed range.
    Range { what: &'static str, detail: String },
    /// Two pictures (or a picture and a rectangle) do not fit together.
    Dimension { op: &'static str, detail: String },
    /// The banner font has no glyph for this character.
    UnsupportedChar(char),
    /// A picture cell or text was built from something that is not a single character.
    InvalidCell(String),
    /// A single word is longer than the tabulation column width.
    Overflow { word: String, width: usize },
    /// A computation produced NaN or an infinity.
    Numeric(&'static str),
    /// The moving circle can never fit inside the fixed circle.
    ImpossiblePlacement { outer: f64, inner: f64 },
    /// Rejection sampling gave up before finding a valid placement.
    PlacementExhausted { attempts: u64 },
    /// The requested size exceeds what can be enumerated or counted.
    Capacity { depth: u32, max: u32 },
    /// A benchmarked algorithm returned a wrong answer.
    Correctness { algorithm: &'static str, size: usize },
    /// A table row violates the table invariants.
    Table(String),
    /// Malformed textual input (CSV, picture text).
    Parse { line: usize, detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Range { what, detail } => write!(f, "{what} out of range: {detail}"),
            Error::Dimension { op, detail } => write!(f, "dimension mismatch in {op}: {detail}"),
            Error::UnsupportedChar(c) => write!(f, "unsupported character {c:?}"),
            Error::InvalidCell(s) => write!(f, "invalid picture cell {s:?}"),
            Error::Overflow { word, width } => {
                write!(f, "word {word:?} is longer than the column width {width}")
            }
            Error::Numeric(what) => write!(f, "non-finite value in {what}"),
            Error::ImpossiblePlacement { outer, inner } => write!(
                f,
                "a circle of radius {inner} cannot move inside a circle of radius {outer}"
            ),
            Error::PlacementExhausted { attempts } => {
                write!(f, "no valid placement found after {attempts} attempts")
            }
            Error::Capacity { depth, max } => {
                write!(f, "depth {depth} exceeds the supported maximum {max}")
            }
            Error::Correctness { algorithm, size } => {
                write!(f, "{algorithm} produced unsorted output at size {size}")
            }
            Error::Table(detail) => write!(f, "invalid sample table: {detail}"),
            Error::Parse { line, detail } => write!(f, "parse error on line {line}: {detail}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn range(what: &'static str, detail: impl Into<String>) -> Error {
    Error::Range { what, detail: detail.into() }
}

pub(crate) fn dimension(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Dimension { op, detail: detail.into() }
}
