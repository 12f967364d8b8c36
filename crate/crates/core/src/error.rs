use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutation degree must be positive")]
    ZeroDegree,
    #[error("point {point} out of range for degree {degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasigroupError {
    #[error("quasigroup order must be positive")]
    ZeroOrder,
    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry {value} at ({row}, {col}) out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("row {row} repeats symbol {value}")]
    DuplicateInRow { row: usize, value: usize },
    #[error("column {col} repeats symbol {value}")]
    DuplicateInColumn { col: usize, value: usize },
    #[error("isotopy components have unequal degrees")]
    IsotopyDegrees,
    #[error("degree {found} does not match quasigroup order {order}")]
    DegreeMismatch { order: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CipherError {
    #[error("symbol {symbol} at position {position} outside alphabet of order {order}")]
    SymbolOutOfRange {
        position: usize,
        symbol: usize,
        order: usize,
    },
    #[error("leader {leader} outside alphabet of order {order}")]
    LeaderOutOfRange { leader: usize, order: usize },
    #[error("symbol string has order {found}, quasigroup has order {order}")]
    OrderMismatch { order: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("exponent {0} must be at least 1")]
    ZeroExponent(&'static str),
    #[error(transparent)]
    Quasigroup(#[from] QuasigroupError),
    #[error(transparent)]
    Cipher(#[from] CipherError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicError {
    #[error("modulus must be at least 2")]
    SmallModulus,
    #[error("modulus is not prime")]
    NotPrime,
    #[error("base must satisfy 1 < g < p")]
    BaseOutOfRange,
    #[error("private exponent must satisfy 1 < c < p - 1")]
    PrivateOutOfRange,
    #[error("ephemeral exponent must satisfy 1 <= k <= p - 2")]
    EphemeralOutOfRange,
    #[error("message must be smaller than p")]
    MessageOutOfRange,
    #[error("ciphertext component must be smaller than p")]
    CiphertextOutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("alphabet order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("symbol count {len} is not a multiple of the group width {width}")]
    RaggedLength { len: usize, width: usize },
    #[error("digit group at offset {offset} encodes {value}, which exceeds a byte")]
    GroupOverflow { offset: usize, value: usize },
    #[error("symbol {symbol} at position {position} outside alphabet of order {order}")]
    SymbolOutOfRange {
        position: usize,
        symbol: usize,
        order: usize,
    },
}
