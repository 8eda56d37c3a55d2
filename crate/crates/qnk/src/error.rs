//! Shared error type for parameter validation and oracle plumbing.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Parameters outside the enhanced-hypercube family.
    #[error("invalid parameters n={n}, k={k}: require 1 <= k <= n-1, n >= 2")]
    InvalidParams { n: u32, k: u32 },

    /// Increment Kf(Q_{n,k+1}) - Kf(Q_{n,k}) needs a successor inside the family.
    #[error("invalid increment parameters n={n}, k={k}: require 1 <= k <= n-2, n >= 3")]
    InvalidIncrementParams { n: u32, k: u32 },

    /// Explicit bit-vector elements only exist up to one machine word.
    #[error("dimension n={n} outside the supported range 1..={max} for explicit group elements")]
    DimensionOutOfRange { n: u32, max: u32 },

    /// An element carries one-bits above its declared dimension.
    #[error("bit pattern {bits:#x} has ones above coordinate n={n}")]
    BitsAboveDimension { bits: u64, n: u32 },

    /// Two group-level objects with different dimensions were combined.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    /// A generating set failed construction-time validation.
    #[error("invalid generating set: {0}")]
    InvalidGeneratingSet(String),

    /// (t, r) outside 0 <= r <= t <= n.
    #[error("weight pair out of range: need 0 <= r <= t <= n, got t={t}, r={r}, n={n}")]
    WeightOutOfRange { t: u32, r: u32, n: u32 },

    /// Explicit-path work refused because it exceeds a cost cap.
    #[error(
        "n={n} exceeds the {what} cap of {cap}; the {what} path costs roughly {cost}. \
         Raise the cap with --max-n-oracle or QNK_MAX_ORACLE_N if that is acceptable"
    )]
    CapExceeded {
        n: u32,
        what: &'static str,
        cap: u32,
        cost: &'static str,
    },

    /// Laplacian-based Kf needs a connected graph (zero eigenvalue simple).
    #[error("spectrum describes a disconnected graph: eigenvalue 0 has multiplicity {zero_multiplicity}")]
    DisconnectedSpectrum { zero_multiplicity: String },

    /// The explicit graph is not connected, so effective resistances do not exist.
    #[error(
        "graph is disconnected: {reachable} of {total} vertices reachable from the ground vertex"
    )]
    DisconnectedGraph { reachable: usize, total: usize },

    /// An operation received a spectrum of the wrong kind.
    #[error("expected a {expected} spectrum, got {got}")]
    WrongSpectrumKind {
        expected: &'static str,
        got: &'static str,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
