use thiserror::Error;

pub type Result<T> = std::result::Result<T, JbError>;

#[derive(Debug, Error)]
pub enum JbError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("matrix not symmetric: max asymmetry {max_asymmetry:.3e}")]
    NotSymmetric { max_asymmetry: f64 },

    #[error("non-finite entry encountered in {0}")]
    NonFinite(&'static str),

    #[error("degenerate triple system: {0}")]
    Degenerate(String),

    #[error("tripotent residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotATripotent { residual: f64, tol: f64 },

    #[error("eigenvalue clusters fail to separate: {0}")]
    ClusterSeparation(String),

    #[error("tripotents not compatible: max projection commutator {0:.3e}")]
    Incompatible(f64),

    #[error("subspace is not closed under the triple product: residual {0:.3e}")]
    NotClosed(f64),

    #[error("axiom verification failed for {label}: {detail}")]
    AxiomFailure { label: String, detail: String },

    #[error("invalid conjugation: {0}")]
    BadConjugation(String),

    #[error("invalid algebra data: {0}")]
    BadAlgebra(String),

    #[error("zero functional has no support tripotent")]
    ZeroFunctional,

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("model spec parse error: {0}")]
    ModelSpec(String),

    #[error("ideal decomposition did not stabilize: {0}")]
    DecompositionUnstable(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
