//! Golden codes: quantum LDPC codes built from finite quotients of the
//! regular `{4,3,3,5}` tessellation of hyperbolic 4-space.
//!
//! The pipeline runs exact arithmetic in `Z[φ]` ([`arith`]), the Coxeter
//! generators and Lorentzian checks ([`geometry`]), enumeration of the
//! quotient group and its coset faces ([`group`]), the CSS code built from
//! the chain complex ([`code`]) and the local decoders ([`decode`]).

pub mod arith;
pub mod code;
pub mod decode;
pub mod error;
pub mod geometry;
pub mod group;

pub use arith::{GoldenInt, PrincipalIdeal, QuarticInt};
pub use error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
