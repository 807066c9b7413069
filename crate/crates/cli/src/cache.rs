//! On-disk cache of affine Bruhat windows.
//!
//! One JSON file per `(type, lattice, length bound)`. Files carry the window
//! format version; a mismatched or unreadable file is deleted and rebuilt.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use lm_atlas_core::affine_weyl::{WindowData, WINDOW_FORMAT_VERSION};
use lm_atlas_core::{AffineWeylGroup, BoundedWindow};
use serde::Serialize;

pub const CACHE_DIR_ENV: &str = "LM_ATLAS_CACHE_DIR";

pub struct Cache {
    dir: PathBuf,
}

#[derive(Debug, Serialize)]
pub struct EntryStat {
    pub file: String,
    pub bytes: u64,
    pub format_version: Option<u32>,
    pub current: bool,
    pub elements: Option<usize>,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$LM_ATLAS_CACHE_DIR`, else `$XDG_CACHE_HOME/lm-atlas`, else
    /// `~/.cache/lm-atlas`.
    pub fn from_env() -> Self {
        if let Some(d) = std::env::var_os(CACHE_DIR_ENV) {
            return Cache::new(d);
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
            return Cache::new(Path::new(&d).join("lm-atlas"));
        }
        if let Some(h) = std::env::var_os("HOME") {
            return Cache::new(Path::new(&h).join(".cache").join("lm-atlas"));
        }
        Cache::new(".lm-atlas-cache")
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, aff: &AffineWeylGroup, bound: usize) -> PathBuf {
        let d = aff.datum();
        self.dir
            .join(format!("window-{}-{}-L{bound}.json", d.cartan_type(), d.lattice()))
    }

    /// Loads a window, discarding stale or corrupt files.
    pub fn load(&self, aff: &AffineWeylGroup, bound: usize) -> Option<BoundedWindow> {
        let path = self.path(aff, bound);
        let text = fs::read_to_string(&path).ok()?;
        let parsed = serde_json::from_str::<WindowData>(&text)
            .ok()
            .filter(|d| d.bound == bound)
            .and_then(|d| BoundedWindow::from_data(aff, d).ok());
        if parsed.is_none() {
            let _ = fs::remove_file(&path);
        }
        parsed
    }

    pub fn store(&self, aff: &AffineWeylGroup, window: &BoundedWindow) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let path = self.path(aff, window.bound());
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec(&window.to_data(aff))?)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Returns the window and whether it came from disk.
    pub fn get_or_build(
        &self,
        aff: &AffineWeylGroup,
        bound: usize,
        budget: usize,
    ) -> Result<(BoundedWindow, bool)> {
        if let Some(w) = self.load(aff, bound) {
            return Ok((w, true));
        }
        let w = BoundedWindow::build(aff, bound, budget)?;
        // a read-only cache location only costs the rebuild next time
        let _ = self.store(aff, &w);
        Ok((w, false))
    }

    fn entries(&self) -> Result<Vec<PathBuf>> {
        if !self.dir.exists() {
            return Ok(Vec::new());
        }
        let mut out: Vec<PathBuf> = fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(|n| n.starts_with("window-") && n.ends_with(".json"))
            })
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn clear(&self) -> Result<usize> {
        let entries = self.entries()?;
        for p in &entries {
            fs::remove_file(p)?;
        }
        Ok(entries.len())
    }

    pub fn stat(&self) -> Result<Vec<EntryStat>> {
        #[derive(serde::Deserialize)]
        struct Header {
            format_version: u32,
            elements: Vec<serde::de::IgnoredAny>,
        }
        self.entries()?
            .into_iter()
            .map(|p| {
                let bytes = fs::metadata(&p)?.len();
                let header = fs::read_to_string(&p)
                    .ok()
                    .and_then(|t| serde_json::from_str::<Header>(&t).ok());
                Ok(EntryStat {
                    file: p.file_name().unwrap().to_string_lossy().into_owned(),
                    bytes,
                    format_version: header.as_ref().map(|h| h.format_version),
                    current: header
                        .as_ref()
                        .is_some_and(|h| h.format_version == WINDOW_FORMAT_VERSION),
                    elements: header.map(|h| h.elements.len()),
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lm_atlas_core::RootDatum;

    #[test]
    fn round_trip_and_invalidation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let aff = AffineWeylGroup::from_datum(&RootDatum::adjoint("A2").unwrap()).unwrap();
        let (built, hit) = cache.get_or_build(&aff, 4, 10_000).unwrap();
        assert!(!hit);
        let (loaded, hit) = cache.get_or_build(&aff, 4, 10_000).unwrap();
        assert!(hit);
        assert_eq!(built.elements(), loaded.elements());
        assert_eq!(built.covers(), loaded.covers());
        let stats = cache.stat().unwrap();
        assert_eq!(stats.len(), 1);
        assert!(stats[0].current);

        // stale version is dropped on load
        let path = cache.path(&aff, 4);
        let text = fs::read_to_string(&path).unwrap().replacen(
            &format!("\"format_version\":{WINDOW_FORMAT_VERSION}"),
            "\"format_version\":0",
            1,
        );
        fs::write(&path, text).unwrap();
        assert!(cache.load(&aff, 4).is_none());
        assert!(!path.exists());
        assert_eq!(cache.clear().unwrap(), 0);
    }
}
