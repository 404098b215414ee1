//! Optional on-disk cache for expensive intermediate results.
//!
//! The cache lives in the directory named by the `JACKCC_CACHE_DIR`
//! environment variable; when the variable is unset nothing is persisted.
//! Entries are single files containing a version header with a SHA-256
//! digest of the payload, so stale or corrupted entries are treated as
//! misses rather than trusted. Writes go through a temporary file and a
//! rename, so readers never observe partial entries.

use std::env;
use std::io::Write;
use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

const HEADER_PREFIX: &str = "jackcc-cache-v1 ";

pub fn cache_dir() -> Option<PathBuf> {
    env::var_os("JACKCC_CACHE_DIR").map(PathBuf::from)
}

fn entry_path(key: &str) -> Option<PathBuf> {
    debug_assert!(key.chars().all(|c| c.is_ascii_alphanumeric() || c == '-'));
    Some(cache_dir()?.join(format!("{key}.cache")))
}

fn digest(payload: &str) -> String {
    let out = Sha256::digest(payload.as_bytes());
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Returns the cached payload for `key`, or `None` on any miss, version
/// mismatch, or digest mismatch.
pub fn get(key: &str) -> Option<String> {
    let path = entry_path(key)?;
    let text = std::fs::read_to_string(path).ok()?;
    let (header, payload) = text.split_once('\n')?;
    let expected = header.strip_prefix(HEADER_PREFIX)?;
    if digest(payload) != expected {
        return None;
    }
    Some(payload.to_string())
}

/// Stores `payload` under `key`. A no-op when the cache is disabled.
pub fn put(key: &str, payload: &str) -> Result<()> {
    let Some(path) = entry_path(key) else {
        return Ok(());
    };
    let dir = path.parent().expect("cache entry has a parent directory");
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    write!(tmp, "{}{}\n{}", HEADER_PREFIX, digest(payload), payload)?;
    tmp.persist(&path)
        .map_err(|e| Error::Cache(format!("persisting {}: {}", path.display(), e.error)))?;
    Ok(())
}
