use thiserror::Error;

/// Errors raised by the engine.
///
/// The variants map onto distinct failure classes so that front ends can
/// pick exit codes without string matching.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid root-system type, malformed subset, unparsable ring, ...
    #[error("configuration error: {0}")]
    Config(String),

    /// An enumeration would exceed its configured cap.
    #[error("resource limit exceeded: {what} (found at least {found}, cap {cap})")]
    ResourceLimit {
        what: String,
        found: usize,
        cap: usize,
    },

    /// A caller violated an operation's precondition, or an internal
    /// invariant (d^2 = 0, coset partition, ...) failed.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The coefficient ring does not supply a unit the computation needs.
    #[error("ring assumption violated: {0}")]
    RingAssumption(String),

    /// The two computation routes disagree.
    #[error("verification failure: {message}")]
    Verification { message: String, dump: String },

    /// Internal consistency tables disagree with computed data.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("degenerate ring: {0}")]
    DegenerateRing(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
