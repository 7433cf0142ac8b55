//! Optional on-disk memo cache, enabled by `QFOCK_CACHE_DIR`.
//!
//! Entries live under `<dir>/v<FORMAT_VERSION>/<sha256 of key>.json` and
//! carry their key, so a hash collision or a stale file reads as a miss.
//! Bumping [`FORMAT_VERSION`] orphans every older entry.

use std::fs;
use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;
pub const ENV_VAR: &str = "QFOCK_CACHE_DIR";

pub struct Cache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    key: String,
    value: T,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        std::env::var_os(ENV_VAR).filter(|d| !d.is_empty()).map(Cache::new)
    }

    pub fn path(&self, key: &str) -> PathBuf {
        let digest = hex::encode(Sha256::digest(key.as_bytes()));
        self.dir.join(format!("v{FORMAT_VERSION}")).join(format!("{digest}.json"))
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: Entry<T> = serde_json::from_str(&text).ok()?;
        (entry.key == key).then_some(entry.value)
    }

    /// Best effort: a failed write leaves the cache unchanged.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) {
        let path = self.path(key);
        let Some(parent) = path.parent() else { return };
        if fs::create_dir_all(parent).is_err() {
            return;
        }
        let Ok(text) = serde_json::to_string(&Entry { key: key.to_string(), value }) else { return };
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        if fs::write(&tmp, text).is_ok() && fs::rename(&tmp, &path).is_err() {
            let _ = fs::remove_file(&tmp);
        }
    }
}
