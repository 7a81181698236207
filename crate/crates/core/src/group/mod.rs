//! Finite quotients of the reflection group and the tessellations they
//! carry.

pub mod ball;
pub mod cache;
pub mod cell120;
pub mod combinatorial;
pub mod disk;
pub mod enumerate;
pub mod quotient;
pub mod tessellation;
pub mod toric;

pub use enumerate::{closure, enumerate_group, enumerate_group_bounded, GroupIndex, DEFAULT_GROUP_LIMIT};
pub use quotient::{reduced_generators, MatrixRing, QuotientMatrix, RightAction};
pub use tessellation::{face_partition, incidence, FacePartition, Incidence, Tessellation};
pub use toric::toric_group;
pub use cache::{read_cache, write_cache, CachedTessellation};
pub use cell120::{build_120cell_skeleton, cell120_group, H4_ORDER};
pub use combinatorial::{CombinatorialComplex, UNREACHABLE};
pub use ball::{local_ball, LocalBall};
pub use disk::{build_h2_disk, tiling_disk};
