use std::collections::BTreeMap;
use std::path::Path;

use evohab_core::GaConfig;
use serde::{Deserialize, Serialize};

use crate::output::{json_bytes, write_atomic};

/// File-name suffix shared by every manifest.
pub const MANIFEST_SUFFIX: &str = "-manifest.json";

/// Reproducibility record written next to the artifacts of a run.
///
/// `outputs` are file names relative to the manifest's own directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub target: String,
    pub config: GaConfig,
    pub seed: u64,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    /// Headline numbers of the run, keyed by name.
    #[serde(default)]
    pub metrics: BTreeMap<String, f64>,
    pub wall_time_seconds: f64,
}

impl RunManifest {
    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        write_atomic(path, &json_bytes(self)?)?;
        Ok(())
    }

    pub fn read(path: &Path) -> anyhow::Result<Self> {
        Ok(serde_json::from_slice(&std::fs::read(path)?)?)
    }
}
