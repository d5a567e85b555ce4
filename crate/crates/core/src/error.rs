//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by the library.
///
/// `InvariantViolation` is special: it is raised when a finite computation
/// contradicts one of the inequalities the library exists to check (beyond the
/// configured tolerance). The CLI maps it to a distinct exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {0} out of supported range 2..=8")]
    DimensionOutOfRange(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("norm-square {0} exceeds the guarded range (E ≤ 2^60)")]
    NormSquareTooLarge(u64),

    #[error("zero vector not allowed here")]
    ZeroVector,

    #[error("shell has {0} points, need at least {1}")]
    TooFewPoints(usize, usize),

    #[error("value {0} is not within {1} of an integer")]
    NotAnInteger(f64, f64),

    #[error("spectral window [{c}, {lambda}] contains no eigenvalues")]
    EmptyWindow { c: f64, lambda: f64 },

    #[error("observable must be real-valued for this operation")]
    ComplexObservable,

    #[error("aliasing guard: grid_n = {grid_n} but max frequency is {max_freq}")]
    AliasingGuard { grid_n: usize, max_freq: i64 },

    #[error("radius {0} outside the embeddable range (0, π)")]
    RadiusOutOfRange(f64),

    #[error("quadrature did not reach tol {tol:.3e} within {max_panels} panels (last delta {last_delta:.3e})")]
    QuadratureDiverged {
        tol: f64,
        max_panels: usize,
        last_delta: f64,
    },

    #[error("degenerate parameterization: |γ'| = {0:.3e} at t = {1}")]
    DegenerateParameterization(f64, f64),

    #[error("decay metadata (α, C) required but absent on this measure")]
    MissingDecayMetadata,

    #[error("need at least {need} nonempty shells for a decay fit, found {found}")]
    TooFewShells { need: usize, found: usize },

    #[error("invariant violated: {context} (lhs {lhs:.6e} > rhs {rhs:.6e} + tol {tol:.1e})")]
    InvariantViolation {
        context: String,
        lhs: f64,
        rhs: f64,
        tol: f64,
    },

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("serialization: {0}")]
    Serde(String),
}

impl Error {
    /// Helper used by inequality checks throughout the crate.
    pub fn violation(context: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Error::InvariantViolation {
            context: context.into(),
            lhs,
            rhs,
            tol,
        }
    }
}
