//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by raster construction, pipeline stages, metrics and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Image or buffer dimensions are inconsistent or unsupported.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// CFA pattern is missing, unknown, or inconsistent with the data.
    #[error("CFA error: {0}")]
    Cfa(String),

    /// Input carries no usable signal (empty, all-zero, or single-atom).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// A pixel region that must be non-empty is empty.
    #[error("empty region")]
    EmptyRegion,

    /// Wrong number of images for a multi-input operation.
    #[error("input count error: {0}")]
    InputCount(String),

    /// Numerical failure that indicates a broken invariant upstream.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// File or stream I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed file contents.
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
