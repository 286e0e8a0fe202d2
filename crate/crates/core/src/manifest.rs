//! Run provenance embedded in persisted artifacts.

use std::collections::BTreeMap;

use serde::Serialize;

/// Everything needed to reproduce a run: the command line, the seed, the
/// tolerances in force, and the code version. Identical manifest and seed
/// give identical outputs; the timestamp records when, not what.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub seed: Option<u64>,
    pub tolerances: BTreeMap<String, f64>,
    pub versions: BTreeMap<String, String>,
    pub timestamp: String,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: impl Into<String>, seed: Option<u64>) -> Self {
        let mut versions = BTreeMap::new();
        versions.insert("qmax".to_string(), env!("CARGO_PKG_VERSION").to_string());
        RunManifest {
            command: command.into(),
            seed,
            tolerances: BTreeMap::new(),
            versions,
            timestamp: chrono::Utc::now().to_rfc3339(),
            outputs: Vec::new(),
        }
    }

    pub fn with_tolerance(mut self, name: &str, value: f64) -> Self {
        self.tolerances.insert(name.to_string(), value);
        self
    }

    pub fn with_output(mut self, path: &str) -> Self {
        self.outputs.push(path.to_string());
        self
    }
}
