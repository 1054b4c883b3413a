//! Report envelopes and output files.

use std::io::Write as _;
use std::path::Path;

use anyhow::{Context as _, Result};
use lcd_rough::EmptyCover;
use serde::Serialize;

pub const TOOL: &str = "lcd-rough";

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    /// SHA-256 of the canonical space encoding; absent for sweeps.
    pub space_digest: Option<String>,
    pub seed: Option<u64>,
    pub empty_cover: EmptyCover,
    pub payload: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &'static str, space_digest: Option<String>, seed: Option<u64>, empty_cover: EmptyCover, payload: T) -> Self {
        Envelope {
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            command,
            space_digest,
            seed,
            empty_cover,
            payload,
        }
    }

    pub fn line(&self) -> String {
        serde_json::to_string(self).expect("report payloads serialize") + "\n"
    }
}

pub fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report payloads serialize") + "\n"
}

/// Writes `contents` through a sibling temporary file and a rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().context("output path has no file name")?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
        std::fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
    result.with_context(|| format!("writing {}", path.display()))
}
