use std::path::PathBuf;

use chrono::{DateTime, SecondsFormat, Utc};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use qbus_core::scenarios::ScenarioConfig;

/// Provenance of one run: what was computed, by which version, when, and
/// where the outputs went.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub config_digest: String,
    pub tool_version: String,
    pub started: String,
    pub finished: String,
    pub output_paths: Vec<String>,
    pub config: ScenarioConfig,
}

/// SHA-256 of the compact JSON serialization of the resolved config.
pub fn config_digest(cfg: &ScenarioConfig) -> String {
    let canonical = serde_json::to_string(cfg).expect("config serializes");
    Sha256::digest(canonical.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl RunManifest {
    pub fn new(cfg: &ScenarioConfig, started: DateTime<Utc>, finished: DateTime<Utc>, outputs: &[PathBuf]) -> Self {
        Self {
            config_digest: config_digest(cfg),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            started: started.to_rfc3339_opts(SecondsFormat::Millis, true),
            finished: finished.to_rfc3339_opts(SecondsFormat::Millis, true),
            output_paths: outputs.iter().map(|p| p.display().to_string()).collect(),
            config: cfg.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qbus_core::scenarios::preset;

    #[test]
    fn digest_is_stable_and_sensitive() {
        let a = preset("fig7").unwrap().remove(0);
        let mut b = a.clone();
        assert_eq!(config_digest(&a), config_digest(&b));
        assert_eq!(config_digest(&a).len(), 64);
        b.time_max += 1.0;
        assert_ne!(config_digest(&a), config_digest(&b));
    }
}
