//! Shared fixtures for the benchmarks.

use golden_core::decode::{CellComplex, DecoderConfig, DecodingContext};
use golden_core::group::{toric_group, Tessellation};

/// Decoder over the toric code on a `p × p` torus.
pub fn toric_context(p: usize) -> DecodingContext {
    let t = Tessellation::from_group(&toric_group(p).expect("p ≥ 2"));
    let complex = CellComplex::from_tessellation(&t).expect("valid complex");
    DecodingContext::new(complex, 1, DecoderConfig::default()).expect("toric decoder")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toric_fixture() {
        assert_eq!(toric_context(4).qubit_count(), 32);
    }
}
