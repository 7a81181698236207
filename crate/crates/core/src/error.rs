use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero ideal has no finite quotient")]
    ZeroIdeal,
    #[error("ideal norm {norm} exceeds the supported maximum {max}")]
    NormTooLarge { norm: String, max: u32 },
    #[error("inadmissible ideal {ideal}: {reason}")]
    Inadmissible { ideal: String, reason: String },
    #[error("group order exceeds the limit of {limit} elements")]
    GroupTooLarge { limit: usize },
    #[error("non-uniform incidence between dimensions {lo} and {hi}: multiplicities {min}..{max}")]
    NonUniformIncidence { lo: usize, hi: usize, min: u32, max: u32 },
    #[error("H_X·H_Zᵀ ≠ 0: X-check {x_check} and Z-check {z_check} overlap on an odd number of qubits")]
    NonCommuting { x_check: usize, z_check: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("code too large for brute force: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("cache format: {0}")]
    Cache(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
