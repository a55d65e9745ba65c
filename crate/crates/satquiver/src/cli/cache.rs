//! Persistent multiplicity cache: append-only line-delimited JSON, one
//! record per line, loaded fully at startup, duplicate keys resolved
//! last-line-wins. Whole lines are appended atomically through a single
//! writer, so a crash or interrupt never corrupts earlier records.

use crate::error::Result;
use crate::lietypes::{GroupType, Weight};
use dashmap::DashMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Mutex;

#[derive(Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: String,
    pub value: String,
    pub engine: String,
    pub timestamp: u64,
}

pub struct Cache {
    map: DashMap<String, BigInt>,
    writer: Option<Mutex<File>>,
    pub hits: std::sync::atomic::AtomicU64,
}

impl Cache {
    /// In-memory only; nothing is persisted (--no-cache).
    pub fn disabled() -> Cache {
        Cache {
            map: DashMap::new(),
            writer: None,
            hits: Default::default(),
        }
    }

    pub fn open(path: &PathBuf) -> Result<Cache> {
        let map = DashMap::new();
        if path.exists() {
            let file = File::open(path)?;
            for line in BufReader::new(file).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                // tolerate torn trailing lines from interrupted runs
                let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) else {
                    continue;
                };
                if let Ok(v) = BigInt::from_str(&rec.value) {
                    map.insert(rec.key, v);
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Cache {
            map,
            writer: Some(Mutex::new(file)),
            hits: Default::default(),
        })
    }

    /// Canonical key: group tag plus the lexicographically sorted weight
    /// list.
    pub fn key(g: &GroupType, weights: &[Weight]) -> String {
        let mut parts: Vec<String> = weights.iter().map(|w| w.coord_string()).collect();
        parts.sort();
        format!("{}|{}", g.tag(), parts.join(";"))
    }

    pub fn get(&self, key: &str) -> Option<BigInt> {
        let hit = self.map.get(key).map(|v| v.clone());
        if hit.is_some() {
            self.hits
                .fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        hit
    }

    pub fn put(&self, key: String, value: &BigInt) {
        if self.map.contains_key(&key) {
            return;
        }
        self.map.insert(key.clone(), value.clone());
        if let Some(writer) = &self.writer {
            let rec = CacheRecord {
                key,
                value: value.to_string(),
                engine: env!("CARGO_PKG_VERSION").to_string(),
                timestamp: std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
            };
            let line = serde_json::to_string(&rec).expect("record serializes");
            let mut file = writer.lock().expect("cache writer lock");
            let _ = writeln!(file, "{line}");
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_canonical() {
        let g = GroupType::b(2);
        let a = Weight::from_ints(&[2, 0]);
        let b = Weight::from_ints(&[1, 1]);
        assert_eq!(
            Cache::key(&g, &[a.clone(), b.clone()]),
            Cache::key(&g, &[b, a])
        );
    }

    #[test]
    fn round_trip_and_last_wins() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        {
            let cache = Cache::open(&path).unwrap();
            cache.put("k1".into(), &BigInt::from(7));
            cache.put("k2".into(), &BigInt::from(9));
        }
        // append a manual override line: last one wins on reload
        {
            use std::io::Write;
            let mut f = OpenOptions::new().append(true).open(&path).unwrap();
            writeln!(
                f,
                "{}",
                serde_json::to_string(&CacheRecord {
                    key: "k1".into(),
                    value: "42".into(),
                    engine: "test".into(),
                    timestamp: 0,
                })
                .unwrap()
            )
            .unwrap();
            // and a torn line that must be skipped
            writeln!(f, "{{\"key\": \"torn").unwrap();
        }
        let cache = Cache::open(&path).unwrap();
        assert_eq!(cache.get("k1"), Some(BigInt::from(42)));
        assert_eq!(cache.get("k2"), Some(BigInt::from(9)));
        assert_eq!(cache.get("k3"), None);
    }
}
