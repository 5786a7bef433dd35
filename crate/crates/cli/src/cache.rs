//! Content-addressed report cache: one JSON file per key under a directory.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::report::Report;

/// Bumped whenever report contents change meaning.
pub const CACHE_SCHEMA: u32 = 1;

pub fn tool_version() -> String {
    format!("{}+{}", env!("CARGO_PKG_VERSION"), CACHE_SCHEMA)
}

pub const CACHE_ENV: &str = "INVAR_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub version: String,
    /// SHA-256 of the serialized value, to catch truncated or edited files.
    pub checksum: String,
    pub value: Report,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
    version: String,
}

/// Digest of the parts that determine a command's result.
pub fn cache_key(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())
}

fn checksum(value: &Report) -> String {
    hex::encode(Sha256::digest(serde_json::to_vec(value).expect("reports serialize")))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_version(dir, tool_version())
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: impl Into<String>) -> Self {
        Self { dir: dir.into(), version: version.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// The stored entry, if present, intact and from this version. Anything
    /// else is removed and reported as a miss.
    pub fn get(&self, key: &str) -> Option<CacheEntry> {
        let path = self.path(key);
        let bytes = fs::read(&path).ok()?;
        let entry: Option<CacheEntry> = serde_json::from_slice(&bytes).ok();
        match entry {
            Some(e) if e.key == key && e.version == self.version && e.checksum == checksum(&e.value) => Some(e),
            Some(e) if e.version != self.version && e.key == key => None,
            _ => {
                let _ = fs::remove_file(&path);
                None
            }
        }
    }

    /// Writes through a temporary file and a rename, so readers never see a
    /// partial entry. Failures are ignored: the cache is an optimisation.
    pub fn put(&self, key: &str, value: &Report) {
        let entry = CacheEntry {
            key: key.to_string(),
            version: self.version.clone(),
            checksum: checksum(value),
            value: value.clone(),
        };
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        let Ok(bytes) = serde_json::to_vec(&entry) else { return };
        if fs::write(&tmp, bytes).is_ok() && fs::rename(&tmp, self.path(key)).is_err() {
            let _ = fs::remove_file(&tmp);
        }
    }
}
