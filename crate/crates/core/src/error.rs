use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is outside the supported range 2..=65536")]
    InvalidAlphabet(u32),
    #[error("symbol {symbol} is out of range for alphabet size {q}")]
    SymbolOutOfRange { symbol: u32, q: u32 },
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: u32, right: u32 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("position {pos} is out of range for length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("word of length {len} is shorter than the duplication length {k}")]
    WordTooShort { len: usize, k: usize },
    #[error("value must be nonzero")]
    ZeroValue,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("enumeration exceeded the cap of {cap} words")]
    ResourceCap { cap: usize },
    #[error("alphabet size {0} is not prime")]
    NotPrime(u32),
    #[error("constraint block parameter {beta} is outside [0, {k})")]
    BetaOutOfRange { beta: usize, k: usize },
    #[error("word contains a run of {k} zeros")]
    NotRll { k: usize },
    #[error("parity system is singular for every column arrangement")]
    SingularParity,
}

pub type Result<T> = std::result::Result<T, Error>;
