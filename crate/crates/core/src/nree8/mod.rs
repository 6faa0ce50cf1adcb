//! Pairs of `EE8` lattices whose sum is integral and rootless, and the
//! driver that checks each table row.

pub mod builders;
pub mod data;
pub mod fixtures;
pub mod pair;
pub mod search;
pub mod table;
pub mod verify;

use rayon::prelude::*;

pub use builders::{build_dih4_15_glue, build_dih4_16, build_dih6_14, build_dih6_16};
pub use pair::{PairError, PairInvariants, PairRecord, Witness};
pub use search::{search_in_leech, SearchConfig, SearchOutcome};
pub use table::{row, table, Relation, TableRow};
pub use verify::{verify_pair, Check, VerificationReport};

use std::path::Path;

/// How a row's pair was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builder,
    Fixture(String),
    Missing,
}

pub struct TableEntry {
    pub row: TableRow,
    pub record: Option<PairRecord>,
    pub report: VerificationReport,
    pub source: Source,
}

/// Explicit construction for the rows that have one.
pub fn builder_for(name: &str) -> Option<fn() -> pair::Result<PairRecord>> {
    match name {
        "DIH6(16)" => Some(build_dih6_16),
        "DIH6(14)" => Some(build_dih6_14),
        "DIH4(16)" => Some(build_dih4_16),
        "DIH4(15)" => Some(build_dih4_15_glue),
        _ => None,
    }
}

fn failed(row: &TableRow, what: &str, detail: String) -> VerificationReport {
    VerificationReport {
        row: row.name.clone(),
        checks: vec![Check {
            name: what.to_string(),
            expected: "present".to_string(),
            computed: detail,
            pass: false,
            flagged: false,
            note: None,
        }],
    }
}

/// Builds or replays one row and verifies it.
pub fn run_row(row: &TableRow, fixtures: &Path) -> TableEntry {
    let (record, source) = if let Some(build) = builder_for(&row.name) {
        (build().map_err(|e| e.to_string()), Source::Builder)
    } else {
        match fixtures::load(fixtures, &row.name) {
            Ok(Some((fx, path))) => (
                fx.replay(&path).map_err(|e| e.to_string()),
                Source::Fixture(path.display().to_string()),
            ),
            Ok(None) => (Err("no witness".to_string()), Source::Missing),
            Err(e) => (Err(e.to_string()), Source::Missing),
        }
    };
    match record {
        Ok(rec) => {
            let report = verify_pair(&rec, row);
            TableEntry {
                row: row.clone(),
                record: Some(rec),
                report,
                source,
            }
        }
        Err(e) => TableEntry {
            row: row.clone(),
            record: None,
            report: failed(row, "witness", e),
            source,
        },
    }
}

/// All eleven rows, in table order.
pub fn full_table(fixtures: &Path) -> Vec<TableEntry> {
    table().par_iter().map(|r| run_row(r, fixtures)).collect()
}
