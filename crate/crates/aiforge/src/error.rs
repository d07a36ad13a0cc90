use std::fmt;

/// Errors produced when building domain values from external input.
///
/// Internal contract violations (mismatched row widths, out-of-range degree
/// bounds handed to the certifier, ...) panic instead: they are caller bugs,
/// not data problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A value-vector string contained something other than '0' or '1'.
    BadBitChar { ch: char, pos: usize },
    /// A value vector needs at least two entries (one variable).
    VectorTooShort { len: usize },
    /// Dense truth-table expansion refused above [`crate::boolfun::MAX_TT_VARS`].
    TooManyVariables { n: usize, max: usize },
    /// A bit sequence had the wrong length for its role.
    BadBitLength {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    /// Construction parameters: d must satisfy 2 <= d <= k.
    DOutOfRange { k: usize, d: usize },
    /// Construction parameters: d must be a binary suffix of k.
    DNotSuffixOfK { k: usize, d: usize },
    /// The family size 2^e does not fit in the counting type.
    CountOverflow { exponent: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadBitChar { ch, pos } => {
                write!(
                    f,
                    "invalid character {ch:?} at position {pos}: expected '0' or '1'"
                )
            }
            Error::VectorTooShort { len } => {
                write!(
                    f,
                    "value vector of length {len} is too short: need n+1 >= 2 entries"
                )
            }
            Error::TooManyVariables { n, max } => {
                write!(
                    f,
                    "n = {n} exceeds the dense truth-table bound of {max} variables"
                )
            }
            Error::BadBitLength {
                what,
                expected,
                got,
            } => {
                write!(f, "{what} has length {got}, expected {expected}")
            }
            Error::DOutOfRange { k, d } => {
                write!(f, "d = {d} is out of range for k = {k}: need 2 <= d <= k")
            }
            Error::DNotSuffixOfK { k, d } => {
                write!(
                    f,
                    "d = {d} ({d:b} in binary) is not a binary suffix of k = {k} ({k:b})"
                )
            }
            Error::CountOverflow { exponent } => {
                write!(f, "family size 2^{exponent} overflows the counter")
            }
        }
    }
}

impl std::error::Error for Error {}
