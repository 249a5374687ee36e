//! On-disk cache of ideal powers, shared between runs.
//!
//! One JSON file holds a list of records `{ideal_hash, chars, m, generators}`.
//! Powers of a monomial ideal do not depend on the field, so `chars` only
//! records which characteristics have read the entry. Writes go through a
//! temporary file and a rename.

use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::monomial::{ExpVec, MonomialIdeal};
use crate::CoreError;

pub const CACHE_ENV: &str = "REGULUS_CACHE";
const FILE_NAME: &str = "powers.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRecord {
    pub ideal_hash: String,
    pub chars: Vec<u32>,
    pub m: u32,
    pub generators: Vec<ExpVec>,
}

#[derive(Debug)]
pub struct PowerCache {
    path: PathBuf,
    records: Mutex<Vec<PowerRecord>>,
}

impl PowerCache {
    /// Directory from `REGULUS_CACHE`, else `explicit`, else `.regulus-cache`.
    pub fn resolve_dir(explicit: Option<&Path>) -> PathBuf {
        if let Some(v) = std::env::var_os(CACHE_ENV) {
            return PathBuf::from(v);
        }
        explicit
            .map(Path::to_path_buf)
            .unwrap_or_else(|| PathBuf::from(".regulus-cache"))
    }

    pub fn open(dir: &Path) -> Result<Self, CoreError> {
        let path = dir.join(FILE_NAME);
        let records = if path.exists() {
            let text = std::fs::read_to_string(&path).map_err(|e| CoreError::Cache(e.to_string()))?;
            serde_json::from_str(&text).map_err(|e| CoreError::Cache(format!("{}: {e}", path.display())))?
        } else {
            Vec::new()
        };
        Ok(PowerCache {
            path,
            records: Mutex::new(records),
        })
    }

    pub fn len(&self) -> usize {
        self.records.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `I^m`, from the cache when present. New entries stay in memory until
    /// [`PowerCache::flush`].
    pub fn power(&self, i: &MonomialIdeal, m: u32) -> Result<MonomialIdeal, CoreError> {
        let hash = i.hash();
        let p = i.ring().char();
        {
            let mut recs = self.records.lock().unwrap();
            if let Some(r) = recs.iter_mut().find(|r| r.ideal_hash == hash && r.m == m) {
                if !r.chars.contains(&p) {
                    r.chars.push(p);
                    r.chars.sort_unstable();
                }
                return MonomialIdeal::new(i.ring(), r.generators.clone());
            }
        }
        let pw = i.power(m)?;
        let mut recs = self.records.lock().unwrap();
        if !recs.iter().any(|r| r.ideal_hash == hash && r.m == m) {
            recs.push(PowerRecord {
                ideal_hash: hash,
                chars: vec![p],
                m,
                generators: pw.gens().to_vec(),
            });
        }
        Ok(pw)
    }

    pub fn flush(&self) -> Result<(), CoreError> {
        let err = |e: std::io::Error| CoreError::Cache(e.to_string());
        if let Some(dir) = self.path.parent() {
            std::fs::create_dir_all(dir).map_err(err)?;
        }
        let mut recs = self.records.lock().unwrap().clone();
        recs.sort_by(|a, b| a.ideal_hash.cmp(&b.ideal_hash).then(a.m.cmp(&b.m)));
        let text = serde_json::to_string(&recs).map_err(|e| CoreError::Cache(e.to_string()))?;
        let tmp = self.path.with_extension("json.tmp");
        std::fs::write(&tmp, text).map_err(err)?;
        std::fs::rename(&tmp, &self.path).map_err(err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use regulus_gb::Ring;

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let r = Ring::standard(&["x", "y"], 32003).unwrap();
        let i = MonomialIdeal::new(&r, vec![vec![2, 0], vec![0, 3]]).unwrap();
        let c = PowerCache::open(dir.path()).unwrap();
        let p3 = c.power(&i, 3).unwrap();
        assert_eq!(p3, i.power(3).unwrap());
        c.flush().unwrap();
        let again = PowerCache::open(dir.path()).unwrap();
        assert_eq!(again.len(), 1);
        assert_eq!(again.power(&i, 3).unwrap(), p3);
        let r7 = Ring::standard(&["x", "y"], 7).unwrap();
        let i7 = MonomialIdeal::new(&r7, i.gens().to_vec()).unwrap();
        again.power(&i7, 3).unwrap();
        again.flush().unwrap();
        let text = std::fs::read_to_string(dir.path().join(FILE_NAME)).unwrap();
        let recs: Vec<PowerRecord> = serde_json::from_str(&text).unwrap();
        assert_eq!(recs[0].chars, vec![7, 32003]);
        assert_eq!(recs[0].m, 3);
    }

    #[test]
    fn corrupt_file_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join(FILE_NAME), "not json").unwrap();
        assert!(PowerCache::open(dir.path()).is_err());
    }
}
