//! On-disk cache of Schubert polynomials keyed by one-line word.
//!
//! The file is JSON with a format version; any mismatch or parse failure
//! discards the contents (with a warning) and the caller recomputes.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use schubert_core::poly::Exponent;
use schubert_core::{Monomial, Polynomial};
use serde::{Deserialize, Serialize};

pub const CACHE_FORMAT_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "SCHUBERT_CACHE_DIR";
const FILE_NAME: &str = "schubert-polynomials.json";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    /// word -> list of (exponents, coefficient)
    entries: BTreeMap<String, Vec<(Vec<Exponent>, i64)>>,
}

#[derive(Debug, Default)]
pub struct SchubertCache {
    path: Option<PathBuf>,
    entries: BTreeMap<String, Polynomial>,
    dirty: bool,
    warnings: Vec<String>,
}

/// `$SCHUBERT_CACHE_DIR`, else `$XDG_CACHE_HOME/schubert`, else
/// `$HOME/.cache/schubert`.
pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
        return Some(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("schubert"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("schubert"))
}

impl SchubertCache {
    /// A cache that never touches the filesystem.
    pub fn disabled() -> Self {
        Self::default()
    }

    /// Loads the cache file in `dir`. A missing file is a cold start; a
    /// corrupt or outdated one is discarded with a warning.
    pub fn open(dir: &Path) -> Self {
        let path = dir.join(FILE_NAME);
        let mut cache = Self {
            path: Some(path.clone()),
            ..Self::default()
        };
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return cache,
            Err(e) => {
                cache.warn(format!("cannot read cache {}: {e}; recomputing", path.display()));
                return cache;
            }
        };
        match serde_json::from_str::<CacheFile>(&text) {
            Ok(file) if file.format_version == CACHE_FORMAT_VERSION => {
                for (word, terms) in file.entries {
                    let terms = terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c));
                    match Polynomial::from_terms(terms) {
                        Ok(p) => {
                            cache.entries.insert(word, p);
                        }
                        Err(e) => {
                            cache.warn(format!("cache entry {word} is invalid ({e}); dropping it"));
                        }
                    }
                }
            }
            Ok(file) => cache.warn(format!(
                "cache format version {} != {CACHE_FORMAT_VERSION}; recomputing",
                file.format_version
            )),
            Err(e) => cache.warn(format!("corrupt cache {}: {e}; recomputing", path.display())),
        }
        cache
    }

    fn warn(&mut self, msg: String) {
        eprintln!("warning: {msg}");
        self.warnings.push(msg);
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn is_enabled(&self) -> bool {
        self.path.is_some()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, word: &str) -> Option<&Polynomial> {
        self.entries.get(word)
    }

    pub fn insert(&mut self, word: String, p: Polynomial) {
        if !self.is_enabled() {
            return;
        }
        if self.entries.get(&word) != Some(&p) {
            self.entries.insert(word, p);
            self.dirty = true;
        }
    }

    /// Writes the cache if anything changed (temp file, then rename).
    pub fn commit(&mut self) -> std::io::Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if !self.dirty {
            return Ok(());
        }
        let file = CacheFile {
            format_version: CACHE_FORMAT_VERSION,
            entries: self
                .entries
                .iter()
                .map(|(w, p)| {
                    let terms = p.terms().map(|(m, c)| (m.exponents().to_vec(), c)).collect();
                    (w.clone(), terms)
                })
                .collect(),
        };
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("json.tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(&file)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        self.dirty = false;
        Ok(())
    }
}
