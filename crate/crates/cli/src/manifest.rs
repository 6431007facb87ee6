//! Reproducibility manifest written next to every command's outputs.

use std::fs;
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};
use hbayes::mcmc::SamplerConfig;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::Failure;

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    /// The invocation, verbatim (minus the binary name).
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<SamplerConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub likelihood: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    pub output_dir: PathBuf,
    pub timestamp: String,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data_sha256: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chains: Option<usize>,
}

impl RunManifest {
    pub fn new(argv: &[String], out_dir: &Path) -> Self {
        Self {
            command: argv.join(" "),
            config: None,
            model: None,
            likelihood: None,
            input: None,
            output_dir: out_dir.to_path_buf(),
            timestamp: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            data_sha256: None,
            chains: None,
        }
    }

    pub fn write(&self, path: &Path) -> Result<(), Failure> {
        let json = serde_json::to_string_pretty(self)
            .map_err(|e| Failure::Internal(format!("manifest serialization failed: {e}")))?;
        fs::write(path, json + "\n")
            .map_err(|e| Failure::User(format!("cannot write {}: {e}", path.display())))
    }
}

/// Hex SHA-256 of a file's raw bytes, used to tie fit outputs to their input.
pub fn sha256_hex(path: &Path) -> Result<String, Failure> {
    let bytes = fs::read(path)
        .map_err(|e| Failure::User(format!("cannot read {}: {e}", path.display())))?;
    let digest = Sha256::digest(&bytes);
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}
