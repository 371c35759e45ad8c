use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("expected {expected} coordinates, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("not in the fundamental cell: {0}")]
    NotInCell(String),
    #[error("zero vector is not a root")]
    ZeroRoot,
    #[error("unclassifiable diagram on vertices {0}")]
    UnclassifiableDiagram(String),
    #[error("weight index {0} is not minimal")]
    NotMinimalWeight(usize),
    #[error("weight tuple has {got} entries for {expected} components")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("vector lies outside the radical subspace")]
    OutsideRadical,
    #[error("empty input")]
    EmptyInput,
    #[error("central element: the centralizer is the whole group")]
    CentralBranch,
    #[error("sublattice does not have full rank")]
    RankDeficient,
    #[error("generated group has order {generated}, expected {expected}")]
    ClosureMismatch { generated: usize, expected: usize },
    #[error("kernel cross-check failed: enumeration {enumerated:?}, lattice quotient {lattice:?}")]
    CrossCheck {
        enumerated: Vec<u64>,
        lattice: Vec<u64>,
    },
    #[error("vertex index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
