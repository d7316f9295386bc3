use thiserror::Error;

/// Errors produced by the photon library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("direction must be a unit vector (|k| = {norm})")]
    NonUnitDirection { norm: f64 },

    #[error("{name} must be positive (got {value})")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be finite")]
    NonFinite { name: &'static str },

    #[error("beta magnitude must be < 1 (got {beta})")]
    Superluminal { beta: f64 },

    #[error("helicity must be +1 or -1 (got {0})")]
    InvalidHelicity(i32),

    #[error("not a photon tensor: {0}")]
    NotAPhoton(String),

    #[error("unknown symmetry operation `{0}` (expected P, T, C or D)")]
    UnknownSymmetry(String),

    #[error("not a proper rotation: {0}")]
    InvalidRotation(String),

    #[error("invalid momentum grid: {0}")]
    InvalidGrid(String),

    #[error("expected a state in the {expected} representation, found {found}")]
    WrongRepresentation {
        expected: crate::schrodinger::Representation,
        found: crate::schrodinger::Representation,
    },

    #[error("wave packet is not representable: {0}")]
    InvalidPacket(String),

    #[error("state has zero norm")]
    NullState,

    #[error("state is not transverse (defect {defect:e} exceeds {limit:e})")]
    NotTransverse { defect: f64, limit: f64 },

    #[error("energy {energy} lies outside the momentum grid (|p| < {limit})")]
    EnergyOutsideGrid { energy: f64, limit: f64 },

    #[error("radius must be non-negative (got {0})")]
    NegativeRadius(f64),

    #[error("integral did not converge: {0}")]
    NotIntegrable(String),

    #[error("shape has vanishing moments and cannot be calibrated")]
    DegenerateShape,

    #[error("need at least {needed} points (got {got})")]
    TooFewPoints { needed: usize, got: usize },

    #[error("malformed state file: {0}")]
    StateFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
