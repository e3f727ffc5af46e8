//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the numerical and structural layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Gamma evaluated at a nonpositive integer.
    #[error("gamma pole: z = {0} is within {1:e} of a nonpositive integer")]
    GammaPole(String, f64),
    /// A special-function value left the representable range.
    #[error("overflow while evaluating {0}")]
    Overflow(&'static str),
    /// Series or quadrature failed to converge.
    #[error("{0} did not converge after {1} steps")]
    NonConvergence(&'static str, usize),
    /// Hypergeometric parameter c at a nonpositive integer without earlier termination.
    #[error("hypergeometric parameter pole: c = {0}")]
    ParameterPole(String),
    /// A NaN or infinity appeared where a finite value is required.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    /// Sampled integrand magnitude on the truncation boundary exceeds the certified majorant.
    #[error("decay certificate violated on axis {axis}: sampled |f| = {sampled:e} > bound {bound:e}")]
    DecayCertificate { axis: usize, sampled: f64, bound: f64 },
    /// The certified tail estimate does not meet the requested target.
    #[error("truncation tail {tail:e} exceeds target {target:e}")]
    TailTooLarge { tail: f64, target: f64 },
    /// Two residue radii disagree: another pole intersects the disc.
    #[error("residue radii disagree by {0:e}: another pole inside the test disc")]
    ResidueRadius(f64),

    /// Catalog lookup failure.
    #[error("unknown catalog space `{0}`")]
    UnknownSpace(String),
    /// Catalog file problem.
    #[error("catalog: {0}")]
    Catalog(String),
    /// Root-system family not supported at this rank.
    #[error("unsupported family/rank: {0}")]
    UnsupportedFamily(String),
    /// Multiplicity parity constraint violated.
    #[error("multiplicity parity violation: {0}")]
    ParityViolation(String),
    /// Multiplicities not constant on root-length classes.
    #[error("multiplicities are not Weyl-invariant: {0}")]
    NonInvariantMultiplicities(String),
    /// Structural invariant failed during construction.
    #[error("root datum invariant failed: {0}")]
    InvariantFailure(String),
    /// Zero root passed where a root is required.
    #[error("zero root")]
    ZeroRoot,
    /// A coordinate vector has the wrong length.
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    /// Domain parameter (delta, eta) out of range.
    #[error("invalid domain parameter: {0}")]
    InvalidDomainParameter(String),

    /// Evaluation requested too close to a singular hyperplane.
    #[error("pole proximity: {0}")]
    PoleProximity(String),
    /// Removable-singularity extrapolation did not settle.
    #[error("extrapolation residual {residual:e} exceeds {tol:e} near a singular point")]
    UnresolvedSingularity { residual: f64, tol: f64 },
    /// Operation requires an evaluator the space does not have.
    #[error("space `{0}` has no {1} evaluator")]
    UnsupportedSpace(String, &'static str),
    /// Point outside the domain an operation is defined on.
    #[error("domain violation: {0}")]
    DomainViolation(String),
    /// Hardy evaluator failed inside its claimed domain.
    #[error("hardy evaluator failure: {0}")]
    HardyEvaluator(String),
    /// A spherical-function convention self-check failed at construction.
    #[error("spherical convention self-check failed: {0}")]
    ConventionCheck(String),
    /// weyl_dim produced a value too far from an integer.
    #[error("dimension value {value} is not integral (residual {residual:e})")]
    NonIntegralDimension { value: f64, residual: f64 },
    /// Plancherel positivity assertion failed.
    #[error("plancherel density not positive on the tempered spectrum: {0}")]
    PositivityFailure(String),
}

/// Crate-wide result alias.
pub type Result<V> = std::result::Result<V, Error>;
