//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong when building grids, states, or running the
/// phase-space operations.
#[derive(Debug, Error)]
pub enum WignerError {
    #[error("{name} must be a power of two, got {value}")]
    NotPowerOfTwo { name: &'static str, value: usize },

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("fields live on different grids")]
    GridMismatch,

    #[error("array shape {got:?} does not match grid shape {expected:?}")]
    ShapeMismatch { expected: (usize, usize), got: (usize, usize) },

    #[error("non-finite entry encountered")]
    NonFinite,

    #[error("wavefunction is not normalized: |psi|^2 integrates to {norm}")]
    NotNormalized { norm: f64 },

    #[error("density matrix is not Hermitian (max asymmetry {max_asymmetry:e})")]
    NotHermitian { max_asymmetry: f64 },

    #[error("density matrix trace is {trace}, expected 1")]
    BadTrace { trace: f64 },

    #[error("non-admissible density matrix: eigenvalue {eigenvalue} below tolerance")]
    NonAdmissible { eigenvalue: f64 },

    #[error("not a classical probability density: minimum entry {min}")]
    NegativeDensity { min: f64 },

    #[error("field integrates to {norm}, expected 1")]
    NotUnitMass { norm: f64 },

    #[error("mixture weights sum to {sum}, expected 1")]
    WeightSum { sum: f64 },

    #[error("mixture has {weights} weights but {states} states")]
    MixtureLength { weights: usize, states: usize },

    #[error("q = 1 is the Shannon limit; use the Shannon formula instead")]
    TsallisShannonLimit,

    #[error("negative probability {alpha} with non-integer q = {q} is outside the Tsallis domain")]
    TsallisDomain { alpha: f64, q: f64 },

    #[error("state is not resolved by the grid: boundary leakage {leakage:e}")]
    UnderResolved { leakage: f64 },

    #[error("oscillator quantum number {n} exceeds the supported maximum {max}")]
    QuantumNumberTooLarge { n: u32, max: u32 },

    #[error("oscillator hbar {params} disagrees with grid hbar {grid}")]
    HbarMismatch { params: f64, grid: f64 },

    #[error("phase-space area {omega} is smaller than one grid cell {cell}")]
    OmegaTooSmall { omega: f64, cell: f64 },

    #[error("phase-space area {omega} exceeds the grid box area {box_area}")]
    OmegaTooLarge { omega: f64, box_area: f64 },

    #[error("equilibrium support is empty: beta {beta} forbids every grid cell")]
    EmptySupport { beta: f64 },

    #[error("malformed witness '{name}': |F|^2 integrates to {purity}, expected 1/(2*pi*hbar)")]
    MalformedWitness { name: String, purity: f64 },

    #[error("need at least 3 snapshots for a centered time derivative, got {got}")]
    TooFewSnapshots { got: usize },

    #[error("time step must be nonzero")]
    ZeroTimeStep,

    #[error("numerical blow-up detected at step {step}")]
    NumericalBlowup { step: usize },

    #[error("custom potential has {got} samples but the grid has {expected}")]
    PotentialLength { expected: usize, got: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("bad field dump: {0}")]
    BadDump(String),
}

pub type Result<T> = std::result::Result<T, WignerError>;
