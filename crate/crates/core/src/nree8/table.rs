//! The eleven rows of the classification table.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::CatalogId;
use crate::exact::SmithSequence;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TableError {
    #[error("unknown row name '{0}'")]
    UnknownRow(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `L` is isometric to the descriptor.
    Isometric,
    /// `L` contains a sublattice isometric to the descriptor.
    Contains,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub name: String,
    pub dihedral_order: u32,
    pub rank: usize,
    /// `P = ann_M(N)` for the `DIH8(16, P)` rows.
    pub ann: Option<String>,
    /// Discriminant sequence as printed in the table.
    pub smith: String,
    /// Replacement value when the printed sequence is known to be off.
    pub smith_authoritative: Option<String>,
    /// Why the printed sequence is not trusted.
    pub smith_note: Option<String>,
    pub relation: Relation,
    /// Orthogonal summands of the isometry-type column, as catalog ids.
    pub components: Vec<String>,
    pub in_leech: bool,
}

impl TableRow {
    pub fn order_of_g(&self) -> u32 {
        self.dihedral_order / 2
    }

    pub fn components(&self) -> Vec<CatalogId> {
        self.components
            .iter()
            .map(|c| c.parse().expect("table ids are valid"))
            .collect()
    }

    /// Sequence the computed value is compared against.
    pub fn expected_smith(&self) -> SmithSequence {
        let s = self.smith_authoritative.as_deref().unwrap_or(&self.smith);
        SmithSequence::parse(s).expect("table sequences parse")
    }

    pub fn printed_smith(&self) -> SmithSequence {
        SmithSequence::parse(&self.smith).expect("table sequences parse")
    }

    pub fn descriptor(&self) -> String {
        let rel = match self.relation {
            Relation::Isometric => "=",
            Relation::Contains => ">=",
        };
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.components.len() {
            let c = &self.components[i];
            let run = self.components[i..].iter().take_while(|x| *x == c).count();
            parts.push(if run > 1 { format!("{c}^{run}") } else { c.clone() });
            i += run;
        }
        format!("{rel} {}", parts.join(" + "))
    }

    /// Parses `DIHr(s)` / `DIHr(s,P)` back into `(r, s, P)`.
    pub fn parse_name(name: &str) -> Option<(u32, usize, Option<String>)> {
        let rest = name.strip_prefix("DIH")?;
        let (r, rest) = rest.split_once('(')?;
        let inner = rest.strip_suffix(')')?;
        let (s, p) = match inner.split_once(',') {
            Some((s, p)) => (s, Some(p.trim().to_string())),
            None => (inner, None),
        };
        Some((r.parse().ok()?, s.trim().parse().ok()?, p))
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<14} Dih{:<3} {:<28} {:<14} {}",
            self.name,
            self.dihedral_order,
            self.descriptor(),
            self.smith,
            if self.in_leech { "Yes" } else { "No" }
        )
    }
}

struct RowData {
    name: &'static str,
    smith: &'static str,
    relation: Relation,
    components: &'static [&'static str],
    in_leech: bool,
}

const ROWS: [RowData; 11] = [
    RowData { name: "DIH4(12)", smith: "1^4 2^6 4^2", relation: Relation::Contains, components: &["DD4", "DD4", "DD4"], in_leech: true },
    RowData { name: "DIH4(14)", smith: "1^4 2^8 4^2", relation: Relation::Contains, components: &["AA1", "AA1", "DD6", "DD6"], in_leech: true },
    RowData { name: "DIH4(15)", smith: "1^2 2^14", relation: Relation::Contains, components: &["AA1", "EE7", "EE7"], in_leech: false },
    RowData { name: "DIH4(16)", smith: "2^16", relation: Relation::Isometric, components: &["EE8", "EE8"], in_leech: true },
    RowData { name: "DIH6(14)", smith: "1^7 3^3 6^2", relation: Relation::Contains, components: &["AA2", "A2xE6"], in_leech: true },
    RowData { name: "DIH6(16)", smith: "1^8 3^8", relation: Relation::Isometric, components: &["A2xE8"], in_leech: true },
    RowData { name: "DIH8(15)", smith: "1^10 4^5", relation: Relation::Contains, components: &["AA1", "AA1", "AA1", "AA1", "AA1", "AA1", "AA1", "EE8"], in_leech: true },
    RowData { name: "DIH8(16,DD4)", smith: "1^8 2^4 4^4", relation: Relation::Contains, components: &["DD4", "DD4", "EE8"], in_leech: true },
    RowData { name: "DIH8(16,0)", smith: "1^8 2^8", relation: Relation::Isometric, components: &["BW16"], in_leech: true },
    RowData { name: "DIH10(16)", smith: "1^12 5^4", relation: Relation::Contains, components: &["A4xA4"], in_leech: true },
    RowData { name: "DIH12(16)", smith: "1^12 6^4", relation: Relation::Contains, components: &["AA2", "AA2", "A2xE6"], in_leech: true },
];

/// All eleven rows in table order.
pub fn table() -> Vec<TableRow> {
    ROWS.iter()
        .map(|s| {
            let (r, rank, ann) = TableRow::parse_name(s.name).expect("row names parse");
            let (auth, note) = match s.name {
                "DIH6(14)" => (
                    Some("1^9 3^3 6^2".to_string()),
                    Some("printed sequence has 12 entries for a rank 14 lattice; the worked example gives 1^9 3^3 6^2".to_string()),
                ),
                "DIH4(15)" => (
                    None,
                    Some("printed sequence has 16 entries for a rank 15 lattice".to_string()),
                ),
                _ => (None, None),
            };
            TableRow {
                name: s.name.to_string(),
                dihedral_order: r,
                rank,
                ann,
                smith: s.smith.to_string(),
                smith_authoritative: auth,
                smith_note: note,
                relation: s.relation,
                components: s.components.iter().map(|c| c.to_string()).collect(),
                in_leech: s.in_leech,
            }
        })
        .collect()
}

/// Accepts `DIH6(16)`, `DIH6_16`, `dih8_16_dd4` and similar spellings.
pub fn normalize_name(name: &str) -> String {
    let up = name.trim().to_ascii_uppercase().replace(' ', "");
    if up.contains('(') {
        return up;
    }
    let mut parts = up.split('_');
    let head = parts.next().unwrap_or_default().to_string();
    let rest: Vec<&str> = parts.collect();
    if rest.is_empty() {
        head
    } else {
        format!("{head}({})", rest.join(","))
    }
}

pub fn row(name: &str) -> Result<TableRow, TableError> {
    let n = normalize_name(name);
    table()
        .into_iter()
        .find(|r| r.name == n)
        .ok_or_else(|| TableError::UnknownRow(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse_back() {
        for r in table() {
            let (order, rank, ann) = TableRow::parse_name(&r.name).unwrap();
            assert_eq!((order, rank, ann), (r.dihedral_order, r.rank, r.ann.clone()));
            assert!([4, 6, 8, 10, 12].contains(&r.dihedral_order));
            assert!([12, 14, 15, 16].contains(&r.rank));
            r.components();
        }
        assert_eq!(table().iter().filter(|r| r.in_leech).count(), 10);
    }

    #[test]
    fn smith_lengths_match_rank_except_flagged_rows() {
        for r in table() {
            let printed = r.printed_smith();
            if r.smith_note.is_some() {
                assert_ne!(printed.len(), r.rank, "{}", r.name);
            } else {
                assert_eq!(printed.len(), r.rank, "{}", r.name);
            }
            assert_eq!(r.expected_smith().len() == r.rank, r.name != "DIH4(15)");
        }
    }

    #[test]
    fn lookup_spellings() {
        assert_eq!(row("DIH6_16").unwrap().name, "DIH6(16)");
        assert_eq!(row("dih8_16_dd4").unwrap().name, "DIH8(16,DD4)");
        assert_eq!(row("DIH8(16,0)").unwrap().ann.as_deref(), Some("0"));
        assert!(row("DIH7(16)").is_err());
    }
}
