//! On-disk result cache: one JSON file per (q, artifact kind), wrapped in
//! a versioned envelope that also pins the seed and budget the payload
//! was computed under. Writes go through a temp file and an atomic
//! rename, so interrupted runs never leave corrupt state behind.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::{Path, PathBuf};

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Envelope<T> {
    version: u32,
    q: u64,
    seed: u64,
    budget_nodes: u64,
    payload: T,
}

/// Cache identity for one lookup: payloads computed under a different
/// seed or budget never match.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheKey {
    pub q: u64,
    pub seed: u64,
    pub budget_nodes: u64,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Cache {
            dir: Some(dir.to_path_buf()),
        }
    }

    /// A cache that never hits and never writes.
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    fn file(&self, key: CacheKey, kind: &str) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("q{}_{kind}.json", key.q)))
    }

    pub fn load<T: DeserializeOwned>(&self, key: CacheKey, kind: &str) -> Option<T> {
        let path = self.file(key, kind)?;
        let text = fs::read_to_string(path).ok()?;
        let envelope: Envelope<T> = serde_json::from_str(&text).ok()?;
        (envelope.version == CACHE_VERSION
            && envelope.q == key.q
            && envelope.seed == key.seed
            && envelope.budget_nodes == key.budget_nodes)
            .then_some(envelope.payload)
    }

    pub fn store<T: Serialize>(&self, key: CacheKey, kind: &str, payload: &T) {
        let Some(path) = self.file(key, kind) else {
            return;
        };
        let Some(dir) = path.parent() else { return };
        if fs::create_dir_all(dir).is_err() {
            return;
        }
        let envelope = Envelope {
            version: CACHE_VERSION,
            q: key.q,
            seed: key.seed,
            budget_nodes: key.budget_nodes,
            payload,
        };
        let Ok(text) = serde_json::to_string(&envelope) else {
            return;
        };
        // unique temp name per writer, then atomic rename
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        if fs::write(&tmp, text).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
}
