//! On-disk cache of `H̃` tables, one JSON file per degree.
//!
//! Each entry stores `⟨H̃_μ, H̃_μ⟩_*` next to the polynomial. Loading
//! recomputes all star products, compares the diagonal with both the stored
//! value and `w_μ`, and requires the off-diagonal ones to vanish.

use super::{MacdonaldBasis, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qt::QTRat;
use crate::symfunc::SymFunc;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

pub const CACHE_ENV: &str = "DELTASQ_CACHE_DIR";
pub const FORMAT_VERSION: u64 = 1;
const FORMAT_NAME: &str = "deltasq-htilde";

static OVERRIDE: RwLock<Option<Option<PathBuf>>> = RwLock::new(None);

/// Overrides the cache directory for this process; `None` disables the disk cache.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *OVERRIDE.write().unwrap() = Some(dir);
}

/// The configured directory: the override if set, else the environment variable.
pub fn cache_dir() -> Option<PathBuf> {
    if let Some(d) = OVERRIDE.read().unwrap().as_ref() {
        return d.clone();
    }
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

pub fn cache_path(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("htilde-v{FORMAT_VERSION}-{n}.json"))
}

fn corrupt(path: &Path, what: impl std::fmt::Display) -> Error {
    Error::Cache(format!("{}: {what}", path.display()))
}

pub fn write(dir: &Path, basis: &MacdonaldBasis) -> Result<()> {
    fs::create_dir_all(dir)?;
    let entries: Vec<Value> = basis
        .partitions()
        .iter()
        .zip(&basis.w)
        .map(|(mu, w)| {
            json!({
                "partition": mu,
                "htilde": basis.htilde(mu).to_json_value(),
                "norm": QTRat::from_poly(w.clone()).to_json_value(),
            })
        })
        .collect();
    let doc = json!({
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "degree": basis.degree(),
        "entries": entries,
    });
    let path = cache_path(dir, basis.degree());
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_vec(&doc)?)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

/// Reads and validates the table of degree `n`; `None` if there is no file.
pub fn read(dir: &Path, n: u32) -> Result<Option<MacdonaldBasis>> {
    let path = cache_path(dir, n);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let doc: Value = serde_json::from_slice(&bytes).map_err(|e| corrupt(&path, e))?;
    if doc["format"] != FORMAT_NAME || doc["version"] != FORMAT_VERSION || doc["degree"] != n {
        return Err(corrupt(&path, "unexpected format, version or degree"));
    }
    let entries = doc["entries"].as_array().ok_or_else(|| corrupt(&path, "missing entries"))?;
    let mut table = BTreeMap::new();
    let mut norms = BTreeMap::new();
    for e in entries {
        let mu: Partition = serde_json::from_value(e["partition"].clone()).map_err(|err| corrupt(&path, err))?;
        let f =
            SymFunc::from_json_value(&e["htilde"]).map_err(|err| corrupt(&path, format!("partition {mu}: {err}")))?;
        let norm =
            QTRat::from_json_value(&e["norm"]).map_err(|err| corrupt(&path, format!("partition {mu}: {err}")))?;
        norms.insert(mu.clone(), norm);
        table.insert(mu, f);
    }
    let basis = MacdonaldBasis::from_table(n, table).map_err(|e| corrupt(&path, e))?;
    for (mu, w) in basis.partitions().iter().zip(&basis.w) {
        if norms[mu] != QTRat::from_poly(w.clone()) {
            return Err(corrupt(&path, format!("partition {mu}: stored norm differs from w")));
        }
    }
    basis.check_orthogonality().map_err(|e| corrupt(&path, e))?;
    Ok(Some(basis))
}

/// Computes and writes the tables of degrees `1..=max_n`.
pub fn build(dir: &Path, max_n: u32) -> Result<Vec<u32>> {
    if max_n > MAX_DEGREE {
        return Err(Error::Bound(max_n as usize, MAX_DEGREE as usize));
    }
    (1..=max_n)
        .map(|n| {
            write(dir, &MacdonaldBasis::compute(n)?)?;
            Ok(n)
        })
        .collect()
}

/// Validates every cached degree up to `max_n`; returns the degrees found.
pub fn check(dir: &Path, max_n: u32) -> Result<Vec<u32>> {
    let mut found = Vec::new();
    for n in 0..=max_n.min(MAX_DEGREE) {
        if read(dir, n)?.is_some() {
            found.push(n);
        }
    }
    Ok(found)
}

/// Removes all cache files; returns how many were deleted.
pub fn clear(dir: &Path) -> Result<usize> {
    let mut removed = 0;
    let Ok(listing) = fs::read_dir(dir) else {
        return Ok(0);
    };
    for entry in listing {
        let path = entry?.path();
        let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("");
        if name.starts_with("htilde-v") && name.ends_with(".json") {
            fs::remove_file(&path)?;
            removed += 1;
        }
    }
    Ok(removed)
}
