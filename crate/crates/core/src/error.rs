use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed type '{0}': expected FAMILY RANK [^TWIST], e.g. A2, D4^3, E6^2")]
    MalformedType(String),

    #[error("rank {rank} is out of range for family {family} (allowed: {allowed})")]
    RankOutOfRange { family: char, rank: usize, allowed: &'static str },

    #[error("twist {twist} is not available for {family}{rank}")]
    TwistUnavailable { family: char, rank: usize, twist: u8 },

    #[error("not a Cartan matrix of finite type: {0}")]
    NotCartan(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("root string requested for proportional roots (beta = +-alpha)")]
    ProportionalRoots,

    #[error("unknown root {0:?}")]
    UnknownRoot(Vec<i64>),

    #[error("permutation {0:?} does not preserve the Cartan matrix")]
    IncompatibleAutomorphism(Vec<usize>),

    #[error("elements belong to different root systems")]
    MismatchedRootSystem,

    #[error(
        "w composed with the diagram automorphism is not -1 on the roots of {0}; \
         this type is an exception in the classification (see `classify`)"
    )]
    ConditionVFails(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
