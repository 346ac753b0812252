use thiserror::Error;

use crate::field::poly_to_string;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("extension degree {0} outside supported range 2..=16")]
    DegreeOutOfRange(u32),
    #[error("modulus has degree {found}, expected {expected}")]
    ModulusDegree { expected: u32, found: i64 },
    #[error("{}", reducible_message(*factor))]
    Reducible { modulus: u32, factor: u32 },
    #[error("element {value:#x} not in GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("function table has {len} entries, expected {q}")]
    TableLength { len: usize, q: u32 },
}

fn reducible_message(factor: u32) -> String {
    match factor {
        0b10 => "reducible: root x=0".into(),
        0b11 => "reducible: root x=1".into(),
        f => format!("reducible: factor {}", poly_to_string(f)),
    }
}

#[derive(Debug, Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("generator rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
    #[error("enumerating q^k = {q}^{k} codewords exceeds the 2^34 guard; use the MacWilliams transform instead")]
    TooLarge { q: u32, k: usize },
    #[error("minimum distance of the zero code is undefined")]
    ZeroCode,
    #[error("inconsistent weight distribution: {0}")]
    InconsistentDistribution(String),
    #[error("expected dual distance 3, found {0}")]
    DualDistanceNotThree(String),
    #[error("code is not NMDS ({0})")]
    NotNmds(String),
    #[error("matrix text parse error: {0}")]
    Parse(String),
}
