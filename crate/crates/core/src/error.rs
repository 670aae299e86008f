use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidDegree,
    DegreeMismatch {
        left: usize,
        right: usize,
    },
    /// Malformed cycle notation; `position` is a byte offset into the input.
    Parse {
        position: usize,
        message: String,
    },
    EmptyGenerators,
    OrderCap {
        cap: usize,
    },
    SubgroupCap {
        order: usize,
        cap: usize,
    },
    NotSubgroup,
    PointOutOfRange {
        point: usize,
        degree: usize,
    },
    InvalidLabeling(String),
    TrivialGroup(&'static str),
    GraphTooLarge {
        vertices: usize,
        cap: usize,
    },
    InvalidGraph(String),
    Overflow,
    /// A motion set list contained the identity.
    IdentityInMotionList,
    /// A bound construction failed its own verification.
    ConstructionFailed(&'static str),
}

impl Error {
    /// Whether the error comes from a size cap rather than malformed input.
    pub fn is_capability(&self) -> bool {
        matches!(self, Error::OrderCap { .. } | Error::SubgroupCap { .. } | Error::GraphTooLarge { .. } | Error::Overflow)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDegree => write!(f, "degree must be at least 1"),
            Error::DegreeMismatch { left, right } => write!(f, "degree mismatch: {left} vs {right}"),
            Error::Parse { position, message } => write!(f, "parse error at position {position}: {message}"),
            Error::EmptyGenerators => write!(f, "generator list is empty"),
            Error::OrderCap { cap } => write!(f, "group order exceeds the closure cap of {cap}"),
            Error::SubgroupCap { order, cap } => {
                write!(f, "group order {order} exceeds the subgroup-enumeration cap of {cap}; supply the subgroups explicitly")
            }
            Error::NotSubgroup => write!(f, "not a subgroup of the given group"),
            Error::PointOutOfRange { point, degree } => {
                write!(f, "point {} is out of range for degree {degree}", point + 1)
            }
            Error::InvalidLabeling(msg) => write!(f, "invalid labeling: {msg}"),
            Error::TrivialGroup(what) => write!(f, "{what} requires a nontrivial group"),
            Error::GraphTooLarge { vertices, cap } => {
                write!(f, "graph has {vertices} vertices, above the cap of {cap}")
            }
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            Error::Overflow => write!(f, "arithmetic overflow"),
            Error::IdentityInMotionList => write!(f, "the identity has empty motion and cannot join a good partition"),
            Error::ConstructionFailed(what) => write!(f, "{what} construction failed verification"),
        }
    }
}

impl core::error::Error for Error {}
