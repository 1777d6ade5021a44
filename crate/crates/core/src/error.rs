use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("column letters must be strictly decreasing: {0:?}")]
    NotStrictlyDecreasing(Vec<i64>),

    #[error("component {comp} out of range for level {level}")]
    ComponentOutOfRange { comp: usize, level: usize },

    #[error("e must be at least 2, got {0}")]
    InvalidE(usize),

    #[error("residue {residue} out of range for e = {e}")]
    ResidueOutOfRange { residue: usize, e: usize },

    #[error("level mismatch: expected {expected}, got {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("level must be at least 1")]
    EmptyLevel,

    #[error("letter {letter} lies below the truncation depth {depth}")]
    LetterBelowDepth { letter: i64, depth: i64 },

    #[error("truncation depth {depth} too shallow: {reason}")]
    DepthTooShallow { depth: i64, reason: String },

    #[error("internal: R-matrix produced a repeated letter {0}")]
    DuplicateLetter(i64),

    #[error("swap position {position} out of range for level {level}")]
    PositionOutOfRange { position: usize, level: usize },

    #[error("generator index {index} out of range for level {level}")]
    GeneratorOutOfRange { index: usize, level: usize },

    #[error("multicharge outside the FLOTW range: {0}")]
    NotFlotwRange(String),

    #[error("multicharges {from:?} and {to:?} are not in the same orbit (e = {e})")]
    NotInOrbit {
        from: Vec<i64>,
        to: Vec<i64>,
        e: usize,
    },

    #[error("multipartition is not in the highest weight component of the empty multipartition")]
    NotUglov,

    #[error("lift {lift:?} has a consecutive gap of at most n - 1 for n = {n}")]
    LiftTooTight { lift: Vec<i64>, n: usize },

    #[error("rank {rank} exceeds the bound {bound}")]
    RankExceedsBound { rank: usize, bound: usize },

    #[error("path step {step} (content {content}) cannot be replayed")]
    PathBlocked { step: usize, content: i64 },
}
