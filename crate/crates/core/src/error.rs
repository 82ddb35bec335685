use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different towers")]
    TowerMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative element")]
    NegativeInput,
    #[error("invalid tower: {0}")]
    Tower(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("cos^2 + sin^2 != 1")]
    NotARotation,
    #[error("chord longer than the circle diameter")]
    ChordTooLong,
    #[error("rotation radius is zero")]
    ZeroRadius,

    #[error("vertices {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("second distance must satisfy d > 1")]
    DNotGreaterThanOne,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),

    #[error("invalid precoloring: {0}")]
    InvalidPrecolor(String),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(usize, usize),
    #[error("graph has {0} vertices, brute force is limited to {1}")]
    TooLarge(usize, usize),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),

    #[error("bridge length is neither 1 nor d")]
    BridgeNotForbidden,
    #[error("degenerate rotation: the moved vertex maps onto itself")]
    DegenerateRotation,
    #[error("anchor distance does not match the carrier length")]
    AnchorDistanceMismatch,

    #[error("closure undecided at the requested tolerance")]
    UncertifiedAtTolerance,
    #[error("resolution too coarse for the search interval")]
    ResolutionTooCoarse,
}

pub type Result<T> = std::result::Result<T, Error>;
