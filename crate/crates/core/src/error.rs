use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fibonacci index {0} out of range (valid indices are 1..=92)")]
    FibIndex(u32),

    #[error("letter overflow: {letter} + {shift} does not fit in 32 bits")]
    LetterOverflow { letter: u32, shift: u32 },

    #[error("W_{k} has length {length}, above the length cap of {cap}")]
    LengthCap { k: u32, length: u64, cap: u64 },

    #[error("word index {k} is beyond the largest supported index {max}")]
    IndexLimit { k: u32, max: u32 },

    #[error("{op} requires index >= {min}, got {k}")]
    IndexTooSmall { op: &'static str, min: u32, k: u32 },

    #[error("suffix index {j} exceeds word index {k}")]
    SuffixIndex { k: u32, j: u32 },

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("division by 5 is not exact while evaluating {0}")]
    InexactDivision(&'static str),

    #[error("operation requires a non-empty word")]
    EmptyWord,

    #[error("boundary {boundary} outside 1..{len}")]
    Boundary { boundary: usize, len: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
