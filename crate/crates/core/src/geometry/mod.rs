//! Hyperboloid model, the `{4,3,3,5}` reflections and exact identity checks.

pub mod bounds;
pub mod cone;
pub mod coxeter;
pub mod generators;
pub mod lorentz;
pub mod matrix;

pub use bounds::{dihedral_angle, displacement_lower_bound, distance_bound_chain, DistanceBound};
pub use generators::{
    conjugate_by_p, coxeter_generators, coxeter_order, golden_generators, translation_generators,
    verify_coxeter_relations, RelationCheck, RelationReport, DIAGRAM_4335,
};
pub use lorentz::{lorentz_inner, LorentzVector, Metric, Scalar};
pub use matrix::{bilinear, Matrix, Ring};
pub use coxeter::{CoxeterSystem, Curvature};
pub use cone::{cone_contains, Cone, Containment, LorentzForm};
