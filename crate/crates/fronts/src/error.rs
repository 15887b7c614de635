use alloc::string::String;

/// Errors surfaced by model validation, shooting and threshold searches.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The model specification is empty or references an unknown preset.
    #[error("invalid model specification: {0}")]
    InvalidSpec(String),

    /// `q̇(0)` does not exist for this model, so every operation that relies
    /// on the endpoint slope equation at 0 must refuse to run.
    #[error("q̇(0) does not exist for this model; the slope equation at φ=0 has no root to select")]
    QdotAtZeroNonexistent,

    /// `q̇(1)` does not exist, so the endpoint slope at φ=1 is undefined.
    #[error("q̇(1) does not exist for this model; ż(1) is undefined")]
    QdotAtOneNonexistent,

    /// The slope discriminant at φ=0 is negative: the requested speed lies
    /// below the admissible range.
    #[error("speed c={c} is below the admissible range: (h(0)−c)² < 4q̇(0)")]
    SpeedBelowAdmissible { c: f64 },

    /// A forward shot from (0,0) with slope 0 is not locally unique.
    #[error("refusing forward shot with zero starting slope: the map from (0,0) with slope 0 is not locally unique")]
    ZeroSlopeStart,

    /// The requested operation is only defined for speeds above the critical
    /// threshold.
    #[error("speed c={c} is not above the critical speed c*={c_star}; no admissible boundary values exist there")]
    SubcriticalSpeed { c: f64, c_star: f64 },

    /// The bisection bracket does not straddle the transition it is meant to
    /// locate.
    #[error("invalid bisection bracket for {what}: indicator is not monotone across [{lo}, {hi}]")]
    BracketInvalid { what: &'static str, lo: f64, hi: f64 },

    /// An iteration budget was exhausted without meeting its tolerance.
    #[error("{what} failed to converge within {iters} iterations")]
    NonConvergence { what: &'static str, iters: usize },

    /// The model does not carry the function required by this operation.
    #[error("model does not provide {0}; the requested quantity is unavailable")]
    FunctionUnavailable(&'static str),

    /// Mismatched kinds or domains when checking an analytic fact.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// Three-ε₀ reference runs disagreed beyond tolerance.
    #[error("reference computation of {what} is unstable: runs disagree by {spread}")]
    UnstableReference { what: &'static str, spread: f64 },
}
