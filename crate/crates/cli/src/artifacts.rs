//! Artifact writing: everything lands atomically (temp file + rename) and
//! carries the run's seed and config hash.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::config::RunConfig;
use crate::error::CliError;

/// Metadata block embedded in every JSON artifact.
#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub tool: String,
    pub seed: u64,
    pub config_sha256: String,
}

impl Meta {
    pub fn from_config(config: &RunConfig) -> Self {
        Meta {
            tool: format!("gibnet {}", env!("CARGO_PKG_VERSION")),
            seed: config.seed,
            config_sha256: config.config_sha256.clone(),
        }
    }
}

/// Write bytes to `path` via a temp file in the same directory, creating
/// parent directories as needed.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let parent = path
        .parent()
        .ok_or_else(|| CliError::Internal(format!("no parent for {}", path.display())))?;
    fs::create_dir_all(parent)?;
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Serialize as pretty JSON and write atomically.
pub fn write_json_atomic<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut bytes = serde_json::to_vec_pretty(value)
        .map_err(|e| CliError::Internal(format!("json: {e}")))?;
    bytes.push(b'\n');
    write_atomic(path, &bytes)
}

/// Build a CSV with `# key = value` comment lines, a header, and rows.
pub fn csv_with_comments(
    comments: &[(&str, String)],
    header: &str,
    rows: impl IntoIterator<Item = String>,
) -> Vec<u8> {
    let mut out = String::new();
    for (key, value) in comments {
        out.push_str(&format!("# {key} = {value}\n"));
    }
    out.push_str(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out.into_bytes()
}
