//! Check matrices, ranks and parameters of the codes built on a
//! tessellation.

pub mod css;
pub mod distance;
pub mod euler;
pub mod export;
pub mod gf2;
pub mod sparse;

pub use css::{build_css_code, build_toric_code, css_from_tessellation, ChainComplex, CssCode, Provenance, WeightSummary};
pub use distance::{min_distance_brute, DistanceReport, MAX_BRUTE_FORCE_QUBITS};
pub use euler::{euler_characteristic, orbifold_euler_characteristic, rate_lower_bound, RateBound};
pub use export::{export_matrix, import_matrix, CodeMetadata, MatrixFormat};
pub use gf2::{gf2_rank, RankOutcome};
pub use sparse::SparseBinaryMatrix;
