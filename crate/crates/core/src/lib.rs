//! Desk-scale simulator and estimation toolkit for a post-selected
//! single-photon cross-phase-shift measurement: coherent-state pulses through
//! an EIT medium, lossy click detection, Bayesian photon-number inference,
//! and shot-noise-limited interferometric phase estimation aggregated over
//! millions of shots.
//!
//! The crate is organized around the stages of the measurement:
//!
//! - [`inference`] — conditional photon-number statistics behind a lossy
//!   threshold or number-resolving detector with background counts.
//! - [`medium`] — deterministic EIT physics: ac-Stark shift, signal
//!   absorption, cross-phase-shift profiles and bounds.
//! - [`interferometry`] — two-tone beat synthesis, IQ demodulation,
//!   baseline subtraction and tag-spike detection.
//! - [`experiment`] — the shot loop, post-selected aggregation, curve
//!   fitting, and CSV emission.

pub mod experiment;
pub mod inference;
pub mod interferometry;
pub mod medium;
pub mod rng;
pub mod stats;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The conditioning event has probability zero under the given model.
    #[error("impossible event: {0}")]
    ImpossibleEvent(String),

    /// A single configuration value is unusable.
    #[error("config error: {0}")]
    Config(String),

    /// Configuration validation failed; every offending key is listed.
    #[error("invalid configuration:\n  {}", .0.join("\n  "))]
    Validation(Vec<String>),

    /// A shot-layout window falls outside the usable trace region.
    #[error("layout error: {0}")]
    Layout(String),

    /// The nonlinear fitter ran out of iterations.
    #[error("fit did not converge after {iterations} iterations (best residual {best_residual:e})")]
    FitDidNotConverge { iterations: usize, best_residual: f64 },

    /// The fit problem is degenerate or under-determined.
    #[error("fit error: {0}")]
    Fit(String),

    /// An estimator was handed statistics it cannot be applied to.
    #[error("estimation error: {0}")]
    Estimation(String),

    /// A CSV input file failed to parse.
    #[error("{path}:{line}: {msg}")]
    CsvParse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
