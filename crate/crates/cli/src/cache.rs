//! On-disk memo of computed Demazure dimensions.
//!
//! Entries are keyed by (target label, sha256 of the word, weight). A hit
//! must byte-compare the stored word against the requested one — the hash
//! alone is never trusted. Corrupt files or entries are ignored with a
//! warning and simply behave like misses.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    pub word: Vec<usize>,
    pub dim: String,
    pub weight_count: String,
}

#[derive(Debug)]
pub struct DimCache {
    path: PathBuf,
    entries: Mutex<BTreeMap<String, CacheEntry>>,
    dirty: Mutex<bool>,
}

pub fn word_hash(word: &[usize]) -> String {
    let mut h = Sha256::new();
    for &l in word {
        h.update((l as u64).to_le_bytes());
    }
    let digest = h.finalize();
    let mut s = String::with_capacity(64);
    for b in digest {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

fn key(target: &str, hash: &str, weight: &[i64]) -> String {
    let w: Vec<String> = weight.iter().map(|c| c.to_string()).collect();
    format!("{target}|{hash}|{}", w.join(","))
}

impl DimCache {
    /// Loads the cache at `path`, tolerating a missing or corrupt file.
    pub fn open(path: &Path) -> Self {
        let entries = match std::fs::read_to_string(path) {
            Ok(text) => match serde_json::from_str::<BTreeMap<String, CacheEntry>>(&text) {
                Ok(map) => map,
                Err(e) => {
                    eprintln!(
                        "warning: ignoring corrupt cache file {}: {e}",
                        path.display()
                    );
                    BTreeMap::new()
                }
            },
            Err(_) => BTreeMap::new(),
        };
        DimCache {
            path: path.to_path_buf(),
            entries: Mutex::new(entries),
            dirty: Mutex::new(false),
        }
    }

    pub fn lookup(&self, target: &str, word: &[usize], weight: &[i64]) -> Option<CacheEntry> {
        let hash = word_hash(word);
        let map = self.entries.lock().unwrap();
        let entry = map.get(&key(target, &hash, weight))?;
        if entry.word != word {
            eprintln!("warning: cache word mismatch under hash {hash}; recomputing");
            return None;
        }
        if entry.dim.is_empty() || !entry.dim.bytes().all(|b| b.is_ascii_digit()) {
            eprintln!("warning: ignoring corrupt cache entry for {target}");
            return None;
        }
        Some(entry.clone())
    }

    pub fn insert(&self, target: &str, word: &[usize], weight: &[i64], dim: &str, weight_count: &str) {
        let hash = word_hash(word);
        let mut map = self.entries.lock().unwrap();
        map.insert(
            key(target, &hash, weight),
            CacheEntry {
                word: word.to_vec(),
                dim: dim.to_string(),
                weight_count: weight_count.to_string(),
            },
        );
        *self.dirty.lock().unwrap() = true;
    }

    /// Persists the cache if anything changed since `open`.
    pub fn flush(&self) -> std::io::Result<()> {
        if !*self.dirty.lock().unwrap() {
            return Ok(());
        }
        let map = self.entries.lock().unwrap();
        let text = serde_json::to_string_pretty(&*map).expect("cache serialization");
        std::fs::write(&self.path, text)
    }
}
