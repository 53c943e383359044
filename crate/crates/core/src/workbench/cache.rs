//! On-disk JSON cache of named series, one file per `(name, order)`.
//!
//! A hit returns the stored bytes verbatim; they are exactly what the
//! computation would render, so cached and uncached runs print the same.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::modular::SeriesName;
use crate::series::PuiseuxSeries;

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, name: &SeriesName, order: usize) -> PathBuf {
        self.dir.join(format!("{}-{order}.json", name.key()))
    }

    /// The stored JSON, if present and parseable as a series.
    pub fn get(&self, name: &SeriesName, order: usize) -> Option<String> {
        let text = fs::read_to_string(self.path(name, order)).ok()?;
        serde_json::from_str::<PuiseuxSeries>(&text).ok()?;
        Some(text)
    }

    /// Writes to a temporary file in the same directory and renames it into
    /// place, so readers never observe a partial file.
    pub fn put(&self, name: &SeriesName, order: usize, json: &str) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let dest = self.path(name, order);
        let tmp = self
            .dir
            .join(format!(".{}-{order}.{}.tmp", name.key(), std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(json.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &dest)?;
        Ok(())
    }

    /// Cached JSON for `name`, computing and storing it on a miss.
    pub fn get_or_compute(&self, name: &SeriesName, order: usize) -> Result<String> {
        if let Some(hit) = self.get(name, order) {
            return Ok(hit);
        }
        let json = render(name, order)?;
        self.put(name, order, &json)?;
        Ok(json)
    }
}

/// Compact JSON of `name` to `order` rows.
pub fn render(name: &SeriesName, order: usize) -> Result<String> {
    let s = crate::modular::named(name, order).series;
    Ok(serde_json::to_string(&*s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hit_equals_recomputation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let name = SeriesName::HauptT;
        let first = cache.get_or_compute(&name, 12).unwrap();
        assert!(cache.path(&name, 12).is_file());
        let second = cache.get_or_compute(&name, 12).unwrap();
        assert_eq!(first, second);
        assert_eq!(first, render(&name, 12).unwrap());
    }

    #[test]
    fn corrupt_file_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        fs::write(cache.path(&SeriesName::E4, 3), "{not json").unwrap();
        assert!(cache.get(&SeriesName::E4, 3).is_none());
        let json = cache.get_or_compute(&SeriesName::E4, 3).unwrap();
        assert!(json.starts_with("{\"ram\":1,\"lead\":0"));
    }
}
