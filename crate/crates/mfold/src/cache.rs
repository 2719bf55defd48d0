//! Persistent memo store for computed counts.
//!
//! The on-disk format is a single JSON object
//!
//! ```json
//! {"version":1,"entries":[{"d":3,"m":2,"r":8,"theta":0,"count":"12"}, ...]}
//! ```
//!
//! with counts serialized as decimal strings so that no width limit applies.
//! Entries are written sorted by `(d, m, r, theta)`, which makes the file a
//! deterministic function of the stored keys. Unknown versions are rejected.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curve::CurveClass;
use crate::error::Error;
use crate::recursion::CountQuery;
use crate::scalar::ExactInt;

/// The cache file format understood by this build.
pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    d: i64,
    m: i64,
    r: i64,
    theta: i64,
    count: String,
}

/// A map from queries to exact counts, with at most one value per key.
#[derive(Debug, Clone, Default)]
pub struct MemoStore<T> {
    entries: HashMap<CountQuery, T>,
}

impl<T: ExactInt> MemoStore<T> {
    pub fn new() -> Self {
        MemoStore {
            entries: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, q: &CountQuery) -> Option<&T> {
        self.entries.get(q)
    }

    /// Insert a value. Re-inserting a key must reproduce the stored value;
    /// a disagreement means the engine is no longer deterministic, which is
    /// unrecoverable, so it panics.
    pub fn insert(&mut self, q: CountQuery, value: T) {
        if let Some(old) = self.entries.insert(q, value) {
            assert_eq!(
                Some(&old),
                self.entries.get(&q),
                "conflicting values memoized for {q}"
            );
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CountQuery, &T)> {
        self.entries.iter()
    }

    /// Entries sorted by `(d, m, r, theta)`, the serialization order.
    pub fn sorted_entries(&self) -> Vec<(CountQuery, T)> {
        let mut out: Vec<_> = self.entries.iter().map(|(q, v)| (*q, v.clone())).collect();
        out.sort_by_key(|(q, _)| *q);
        out
    }

    /// Serialize to the versioned JSON format, deterministically.
    pub fn to_json(&self) -> String {
        let entries = self
            .sorted_entries()
            .into_iter()
            .map(|(q, v)| CacheEntry {
                d: q.class().d,
                m: q.class().m,
                r: q.points(),
                theta: q.codim(),
                count: v.to_string(),
            })
            .collect();
        let file = CacheFile {
            version: CACHE_FORMAT_VERSION,
            entries,
        };
        serde_json::to_string(&file).expect("cache serialization cannot fail")
    }

    /// Parse the JSON format, rejecting unknown versions and malformed
    /// entries.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let file: CacheFile = serde_json::from_str(text)?;
        if file.version != CACHE_FORMAT_VERSION {
            return Err(Error::CacheVersion(file.version));
        }
        let mut store = MemoStore::new();
        for e in file.entries {
            let q = CountQuery::new(CurveClass::new(e.d, e.m), e.r, e.theta)?;
            let v = e.count.parse::<T>().map_err(|_| Error::BadCount(e.count))?;
            store.insert(q, v);
        }
        Ok(store)
    }

    pub fn write_file(&self, path: &Path) -> Result<(), Error> {
        Ok(std::fs::write(path, self.to_json())?)
    }

    pub fn read_file(path: &Path) -> Result<Self, Error> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}
