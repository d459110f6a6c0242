use thiserror::Error;

/// Errors raised by the weight combinatorics routines.
///
/// Every variant is a domain error: the inputs were well formed but the
/// requested operation is undefined for them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible rank: {0} vs {1}")]
    IncompatibleRank(usize, usize),
    #[error("rank too small: n = {0}, need n >= 2")]
    RankTooSmall(usize),
    #[error("not an odd simple root")]
    NotOddSimpleRoot,
    #[error("not integral")]
    NotIntegral,
    #[error("descent may not terminate: level must be positive")]
    NonPositiveLevel,
    #[error("level must be nonzero")]
    ZeroLevel,
    #[error("weight is not integrable at this set of simple roots")]
    NotIntegrable,
    #[error("typical modules have no adjacents")]
    TypicalHasNoAdjacent,
    #[error("typical module: block is a singleton keyed by its own weight")]
    TypicalBlock,
    #[error("typical formula requires regular λ")]
    SingularTypicalFormula,
    #[error("character frames differ")]
    FrameMismatch,
    #[error("DS target degenerates below rank 2")]
    DsRankTooSmall,
    #[error("invariant is zero")]
    DsInvariantZero,
    #[error("β must be atypical for λ")]
    NotAtypicalRoot,
    #[error("expected a singular module")]
    NotSingular,
    #[error("depth {0} exceeds the limit {1}")]
    DepthTooLarge(usize, usize),
    #[error("coefficient overflow in character arithmetic")]
    Overflow,
    #[error("weight has shifted level {0}, expected k + n − 1 = {1}")]
    LevelMismatch(String, String),
    #[error("search did not terminate within {0} steps")]
    NoTermination(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
