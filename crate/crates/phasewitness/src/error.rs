use thiserror::Error;

/// Errors produced by state construction, phase-space evaluation, witness
/// combination, optimization, and sampling.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Fock cutoffs must retain at least the vacuum and one-photon levels.
    #[error("invalid Fock cutoff: dim_per_mode = {dim}, must be >= 2")]
    InvalidCutoff { dim: usize },

    /// The truncated two-mode squeezed state would lose more trace than the
    /// configured tolerance allows.
    #[error(
        "cutoff too small: dim_per_mode = {dim} leaves truncation deficit \
         {deficit:.3e} > {tol:.3e} (need dim >= {required})"
    )]
    CutoffTooSmall {
        dim: usize,
        required: usize,
        deficit: f64,
        tol: f64,
    },

    #[error("squeezing parameter must be finite and >= 0, got {0}")]
    InvalidSqueezing(f64),

    #[error("detection efficiency must lie in (0, 1], got {0}")]
    InvalidEfficiency(f64),

    #[error("estimated efficiency must lie in (1/2, 1], got {0}")]
    InvalidEpsilon(f64),

    #[error("phase-space point must have finite real and imaginary parts")]
    NonFinitePhasePoint,

    #[error("density matrix is not Hermitian: max |rho - rho^dagger| = {residual:.3e}")]
    NotHermitian { residual: f64 },

    #[error("density matrix trace {trace} outside [1 - {tol:.3e}, 1]")]
    TraceOutOfRange { trace: f64, tol: f64 },

    #[error("density matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("density matrix entry ({row}, {col}) outside dim^2 = {max} bound")]
    EntryOutOfBounds { row: usize, col: usize, max: usize },

    #[error("duplicate density matrix entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },

    /// A displacement was requested whose padded basis would not keep the
    /// retained columns normalized, or would exceed the hard size cap.
    #[error(
        "displacement padding insufficient for |alpha| = {abs_alpha}: \
         worst retained column norm deviates by {norm_defect:.3e}"
    )]
    PaddingInsufficient { abs_alpha: f64, norm_defect: f64 },

    /// Probabilities below -1e-12 indicate real truncation failure rather
    /// than roundoff.
    #[error("probability {value:.3e} below the roundoff clamp threshold")]
    NegativeProbability { value: f64 },

    #[error("count distribution sums to {sum}, outside [{min}, {max}]")]
    DistributionSumOutOfRange { sum: f64, min: f64, max: f64 },

    #[error("measured Wigner value {value} exceeds the {bound} bound for its kind")]
    WignerOutOfBounds { value: f64, bound: f64 },

    /// Witness combination requires all Wigner inputs measured at one
    /// efficiency.
    #[error("Wigner inputs measured at different efficiencies ({first} vs {second})")]
    MixedEfficiency { first: f64, second: f64 },

    #[error("expected a {expected} Wigner value")]
    WignerKindMismatch { expected: &'static str },

    /// Closed-form expressions exist only for the built-in model states.
    #[error("closed-form evaluation is not available for custom states")]
    UnsupportedModel,

    #[error("optimization budget {budget} below the minimum grid size {minimum}")]
    BudgetTooSmall { budget: usize, minimum: usize },

    #[error("no efficiency in the scanned range produces a violation")]
    NoViolationFound,

    #[error("sweep parameters must be strictly increasing")]
    NonIncreasingSweep,

    #[error("count histogram is empty")]
    EmptyHistogram,

    #[error("histogram counts sum to {total} but shots = {shots}")]
    ShotMismatch { total: u64, shots: u64 },

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures of the numerical machinery (truncation, padding,
    /// clamping) as opposed to invalid configuration.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::CutoffTooSmall { .. }
                | Error::PaddingInsufficient { .. }
                | Error::NegativeProbability { .. }
                | Error::DistributionSumOutOfRange { .. }
                | Error::WignerOutOfBounds { .. }
        )
    }
}
