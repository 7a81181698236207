use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Result;
use serde::Serialize;

/// Record of one invocation. Everything except `timing` is a function of
/// the inputs.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    pub versions: BTreeMap<String, String>,
    pub seeds: Vec<u64>,
    pub timing: Timing,
    pub cache_paths: Vec<PathBuf>,
    pub exit_code: i32,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub wall_seconds: f64,
    pub threads: usize,
}

impl RunManifest {
    pub fn new(command: &str, parameters: serde_json::Value) -> Self {
        let versions = BTreeMap::from([
            ("golden-cli".to_string(), env!("CARGO_PKG_VERSION").to_string()),
            ("golden-core".to_string(), golden_core::VERSION.to_string()),
        ]);
        RunManifest {
            command: command.to_string(),
            parameters,
            versions,
            seeds: Vec::new(),
            timing: Timing { wall_seconds: 0.0, threads: rayon::current_num_threads() },
            cache_paths: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }
}
