//! Syndromes, local decoders, residual checks and decoding trials.

pub mod complex;
pub mod decoder;
pub mod fill;
pub mod lemma;
pub mod monte_carlo;
pub mod syndrome;

pub use complex::{CellComplex, Csr};
pub use decoder::{DecoderConfig, DecoderReport, DecodingContext, Verdict};
pub use fill::{boundary_of, FillLimits, FillSpace};
pub use monte_carlo::{monte_carlo, run_trial, summarize, to_csv, MonteCarloSummary, NoiseModel, TrialRecord, CSV_HEADER};
pub use syndrome::{syndrome_of, ErrorChain, Pauli, Syndrome};
pub use lemma::{verify_lemma_120cell, verify_lemma_2d, LemmaReport};
