use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use super::func::Basis;
use super::transition::{compute_transition, TransitionMatrix};
use crate::error::{Error, Result};

/// A directory of transition matrices, one JSON file per `(from, to, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir })
    }

    /// `$CHROMA_CACHE_DIR`, else `$XDG_CACHE_HOME/chroma`, else
    /// `$HOME/.cache/chroma`, else `.chroma-cache`.
    pub fn default_dir() -> PathBuf {
        let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        env("CHROMA_CACHE_DIR")
            .or_else(|| env("XDG_CACHE_HOME").map(|d| d.join("chroma")))
            .or_else(|| env("HOME").map(|d| d.join(".cache").join("chroma")))
            .unwrap_or_else(|| PathBuf::from(".chroma-cache"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn file_name(from: Basis, to: Basis, d: usize) -> String {
        format!("transition-{from}-{to}-{d}.json")
    }

    fn path(&self, from: Basis, to: Basis, d: usize) -> PathBuf {
        self.dir.join(Self::file_name(from, to, d))
    }

    /// `Ok(None)` when absent; `CacheCorrupt` when present but unreadable,
    /// tampered with, or filed under the wrong key.
    pub fn load(&self, from: Basis, to: Basis, d: usize) -> Result<Option<TransitionMatrix>> {
        let path = self.path(from, to, d);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|_| Error::CacheCorrupt(path.display().to_string()))?;
        let m = TransitionMatrix::from_json(&value)?;
        if (m.from_basis(), m.to_basis(), m.degree()) != (from, to, d) {
            return Err(Error::CacheCorrupt(format!("{} holds the wrong key", path.display())));
        }
        Ok(Some(m))
    }

    /// Writes to a temporary file in the same directory, then renames it into
    /// place so readers never observe a partial file.
    pub fn store(&self, m: &TransitionMatrix) -> Result<()> {
        static COUNTER: AtomicU64 = AtomicU64::new(0);
        let target = self.path(m.from_basis(), m.to_basis(), m.degree());
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            Self::file_name(m.from_basis(), m.to_basis(), m.degree()),
            std::process::id(),
            COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        fs::write(&tmp, serde_json::to_string_pretty(&m.to_json())?)?;
        fs::rename(&tmp, &target).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })?;
        Ok(())
    }

    /// Keys of the cached files, sorted.
    pub fn entries(&self) -> Result<Vec<(Basis, Basis, usize)>> {
        let mut out = Vec::new();
        if !self.dir.exists() {
            return Ok(out);
        }
        for entry in fs::read_dir(&self.dir)? {
            let name = entry?.file_name();
            let Some(stem) =
                name.to_str().and_then(|n| n.strip_prefix("transition-")).and_then(|n| n.strip_suffix(".json"))
            else {
                continue;
            };
            let parts: Vec<&str> = stem.split('-').collect();
            if let [from, to, d] = parts[..] {
                if let (Ok(from), Ok(to), Ok(d)) = (from.parse(), to.parse(), d.parse()) {
                    out.push((from, to, d));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes every cached matrix; returns how many files were deleted.
    pub fn clear(&self) -> Result<usize> {
        let keys = self.entries()?;
        for &(from, to, d) in &keys {
            fs::remove_file(self.path(from, to, d))?;
        }
        Ok(keys.len())
    }

    /// Recomputes and stores every basis pair for degrees `1..=max_degree`.
    pub fn rebuild(&self, max_degree: usize) -> Result<usize> {
        let mut written = 0;
        for d in 1..=max_degree {
            for from in Basis::ALL {
                for to in Basis::ALL {
                    self.store(&compute_transition(from, to, d)?)?;
                    written += 1;
                }
            }
        }
        Ok(written)
    }
}
