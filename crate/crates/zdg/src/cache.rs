//! Append-only JSONL cache of invariant rows keyed by canonical spec.
//!
//! Each line is `{"version": .., "spec": .., "row": {..}}`. Lines from other
//! versions or that fail to parse are ignored; the last matching line wins.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use zdg_core::InvariantRow;

pub const CACHE_FILE: &str = "invariants.jsonl";
pub const ENV_CACHE_DIR: &str = "ZDG_CACHE_DIR";

/// Changes whenever row contents could differ for the same spec.
pub const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+rows1");

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    spec: String,
    row: InvariantRow,
}

/// `explicit`, else `$ZDG_CACHE_DIR`, else `$XDG_CACHE_HOME/zdg`, else
/// `$HOME/.cache/zdg`, else `.zdg-cache`.
pub fn resolve_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    let env = |k| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    env(ENV_CACHE_DIR)
        .or_else(|| env("XDG_CACHE_HOME").map(|p| p.join("zdg")))
        .or_else(|| env("HOME").map(|p| p.join(".cache").join("zdg")))
        .unwrap_or_else(|| PathBuf::from(".zdg-cache"))
}

pub struct Cache {
    path: PathBuf,
    rows: HashMap<String, InvariantRow>,
}

impl Cache {
    /// Reads the cache in `dir`; a missing directory is an empty cache.
    pub fn open(dir: &Path) -> io::Result<Cache> {
        let path = dir.join(CACHE_FILE);
        let mut rows = HashMap::new();
        match File::open(&path) {
            Ok(f) => {
                for line in BufReader::new(f).lines() {
                    let line = line?;
                    if let Ok(e) = serde_json::from_str::<Entry>(&line) {
                        if e.version == VERSION {
                            rows.insert(e.spec, e.row);
                        }
                    }
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => return Err(e),
        }
        Ok(Cache { path, rows })
    }

    pub fn get(&self, spec: &str) -> Option<&InvariantRow> {
        self.rows.get(spec)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Appends one line, creating the directory on first use.
    pub fn insert(&mut self, row: InvariantRow) -> io::Result<()> {
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        let entry = Entry {
            version: VERSION.to_string(),
            spec: row.spec.clone(),
            row,
        };
        let mut line = serde_json::to_string(&entry).map_err(io::Error::other)?;
        line.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(line.as_bytes())?;
        self.rows.insert(entry.spec, entry.row);
        Ok(())
    }
}
