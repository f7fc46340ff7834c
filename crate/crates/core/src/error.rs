use alloc::string::String;

/// Which endpoint of a recolouring request an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Start,
    Target,
}

impl core::fmt::Display for Endpoint {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Endpoint::Start => f.write_str("start"),
            Endpoint::Target => f.write_str("target"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("colouring has {found} entries, digraph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has colour {colour} outside the palette")]
    ColourOutOfRange { vertex: usize, colour: usize },
    #[error("{0} colouring is not a valid dicolouring")]
    InvalidColouring(Endpoint),
    #[error("{0} dicolouring is frozen")]
    FrozenEndpoint(Endpoint),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertex {0} is not blocked")]
    NotBlocked(usize),
    #[error("dichromatic number {chi} is below the requested {k}")]
    ChiBelow { chi: usize, k: usize },
    #[error("search budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("instance on {n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("target colouring is unreachable")]
    Unreachable,
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

impl Error {
    /// Short stable identifier, suitable for machine-readable reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::SelfLoop(_) => "self-loop",
            Error::DuplicateArc(..) => "duplicate-arc",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::ColourOutOfRange { .. } => "colour-out-of-range",
            Error::InvalidColouring(_) => "invalid-colouring",
            Error::FrozenEndpoint(_) => "frozen-endpoint",
            Error::Precondition(_) => "precondition",
            Error::NotBlocked(_) => "not-blocked",
            Error::ChiBelow { .. } => "chi-below",
            Error::BudgetExceeded(_) => "budget-exceeded",
            Error::TooLarge { .. } => "too-large",
            Error::Unreachable => "unreachable",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = core::result::Result<T, Error>;
