//! Exhaustive checks of the path-shortening lemmas behind the decoders.

pub mod cell120;
pub mod explorer;
pub mod plane;
pub mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

pub use cell120::verify_lemma_120cell;
pub use explorer::VertexGraph;
pub use plane::verify_lemma_2d;
pub use search::{search_lemma_4d, SearchConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub checked: u64,
    /// Offending configurations as vertex sequences.
    pub counterexamples: Vec<Vec<u32>>,
    pub budget_exhausted: bool,
    /// Extra counters, reported as-is.
    pub details: BTreeMap<String, u64>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && !self.budget_exhausted
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.counterexamples.is_empty(), self.budget_exhausted) {
            (false, _) => "FAIL",
            (true, true) => "no counterexample within budget",
            (true, false) => "pass",
        };
        writeln!(f, "lemma {}: {verdict}", self.lemma)?;
        writeln!(f, "  checked: {}", self.checked)?;
        for (k, v) in &self.details {
            writeln!(f, "  {k}: {v}")?;
        }
        for c in self.counterexamples.iter().take(10) {
            writeln!(f, "  counterexample: {c:?}")?;
        }
        Ok(())
    }
}
