//! Committed Leech witnesses, one JSON file per table row.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::pair::{PairError, PairRecord, Witness};
use super::table::TableRow;
use crate::leech::WordStep;

pub const FIXTURES_ENV: &str = "NREE8_FIXTURES";

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: replayed N differs from the stored basis")]
    Replay { path: PathBuf },
    #[error(transparent)]
    Pair(#[from] PairError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub frame_octad: u32,
    pub generator_word: Vec<WordStep>,
    /// Hermite bases, scale-8 Leech coordinates.
    pub m_basis: Vec<Vec<i64>>,
    pub n_basis: Vec<Vec<i64>>,
    pub expected: TableRow,
    pub seed: u64,
    pub candidate: usize,
}

impl Fixture {
    pub fn from_record(rec: &PairRecord, row: &TableRow, seed: u64, candidate: usize) -> Option<Fixture> {
        let w = rec.witness.as_ref()?;
        Some(Fixture {
            name: row.name.clone(),
            frame_octad: w.frame_octad,
            generator_word: w.word.clone(),
            m_basis: rec.m.canonical().basis().to_i64_rows(),
            n_basis: rec.n.canonical().basis().to_i64_rows(),
            expected: row.clone(),
            seed,
            candidate,
        })
    }

    /// Rebuilds the pair from the word and checks `M` and `N` against the
    /// stored bases coordinate for coordinate.
    pub fn replay(&self, path: &Path) -> Result<PairRecord, FixtureError> {
        let rec = PairRecord::from_witness(
            &self.name,
            Witness {
                frame_octad: self.frame_octad,
                word: self.generator_word.clone(),
            },
        )?;
        let same = rec.m.canonical().basis().to_i64_rows() == self.m_basis
            && rec.n.canonical().basis().to_i64_rows() == self.n_basis;
        if !same {
            return Err(FixtureError::Replay { path: path.to_path_buf() });
        }
        Ok(rec)
    }
}

pub fn fixtures_dir() -> PathBuf {
    std::env::var_os(FIXTURES_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")))
}

/// `DIH8(16,DD4)` -> `dih8_16_dd4.json`.
pub fn file_name(row: &str) -> String {
    let mut s: String = row
        .to_ascii_lowercase()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    while s.contains("__") {
        s = s.replace("__", "_");
    }
    format!("{}.json", s.trim_matches('_'))
}

pub fn load(dir: &Path, row: &str) -> Result<Option<(Fixture, PathBuf)>, FixtureError> {
    let path = dir.join(file_name(row));
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path).map_err(|source| FixtureError::Io {
        path: path.clone(),
        source,
    })?;
    let fx = serde_json::from_str(&text).map_err(|source| FixtureError::Json {
        path: path.clone(),
        source,
    })?;
    Ok(Some((fx, path)))
}

pub fn save(dir: &Path, fx: &Fixture) -> Result<PathBuf, FixtureError> {
    let path = dir.join(file_name(&fx.name));
    let io = |source| FixtureError::Io {
        path: path.clone(),
        source,
    };
    fs::create_dir_all(dir).map_err(io)?;
    let text = serde_json::to_string_pretty(fx).expect("fixtures serialize");
    fs::write(&path, text + "\n").map_err(io)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_names() {
        assert_eq!(file_name("DIH8(16,DD4)"), "dih8_16_dd4.json");
        assert_eq!(file_name("DIH4(12)"), "dih4_12.json");
    }
}
