use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index was outside its domain, e.g. `[k]_q` with `k < 1`.
    #[error("invalid index: {0}")]
    InvalidIndex(String),

    /// A triangle order below the minimum of 2.
    #[error("invalid order {0}: triangle families are defined for order >= 2")]
    InvalidOrder(u32),

    /// A step rule with no nonzero weights.
    #[error("invalid rule: a step rule needs at least one nonzero weight")]
    EmptyRule,

    /// An operation that needs a (anti)symmetric polynomial or row got one
    /// that is not.
    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),

    /// A representation sum with no components where one is required.
    #[error("empty representation sum")]
    EmptyRepresentation,

    /// A sequence name that does not match any known sequence.
    #[error("unknown sequence: {0}")]
    UnknownSequence(String),

    /// Textual input that does not match the grammar.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A path query running upward instead of downward.
    #[error("invalid direction: target row {to} lies above source row {from}")]
    InvalidDirection { from: usize, to: usize },

    /// Work that would exceed a stated cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A condition that genuine inputs can never trigger; seeing it means a
    /// bug in the engine itself.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
