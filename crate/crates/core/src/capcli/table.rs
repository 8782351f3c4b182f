//! The 28 imaginary quadratic fields with 5-rank 2 and their capitulation
//! patterns, embedded with a SHA-256 checksum of the source text.

use std::fmt;

use sha2::{Digest, Sha256};

use super::CapCliError;
use crate::quadform::{class_group_structure, Discriminant};

const TABLE_TEXT: &str = include_str!("../../data/capitulation_table.txt");

/// SHA-256 of `data/capitulation_table.txt`.
pub const TABLE_SHA256: &str = "e3d739e5e35c346f981df09452d49574290a3935079be3c4dd45813011b77d27";

/// Prime whose rank the table is about.
pub const TABLE_PRIME: u32 = 5;

pub const TABLE_ROWS: usize = 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapitulationPatternRow {
    /// 1-based.
    pub row: usize,
    pub discriminant: i64,
    /// `P_K(L_1), ..., P_K(L_6)`, entries in `1..=6`.
    pub pattern: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternClass {
    /// The pattern is a permutation.
    OneOne,
    /// Exactly p entries coincide.
    PCapitulation,
    Other,
}

impl fmt::Display for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternClass::OneOne => "1-1",
            PatternClass::PCapitulation => "p-capitulation",
            PatternClass::Other => "other",
        })
    }
}

/// Classifies a pattern of length `p + 1` with entries in `1..=p+1`.
pub fn classify_capitulation_pattern(pattern: &[u32], p: u32) -> Result<PatternClass, CapCliError> {
    let n = p as usize + 1;
    if pattern.len() != n {
        return Err(CapCliError::BadPattern(format!(
            "expected {n} entries, got {}",
            pattern.len()
        )));
    }
    let mut counts = vec![0usize; n];
    for &x in pattern {
        if x == 0 || x as usize > n {
            return Err(CapCliError::BadPattern(format!("entry {x} outside 1..={n}")));
        }
        counts[x as usize - 1] += 1;
    }
    Ok(if counts.iter().all(|&c| c == 1) {
        PatternClass::OneOne
    } else if counts.contains(&(p as usize)) {
        PatternClass::PCapitulation
    } else {
        PatternClass::Other
    })
}

pub fn table_checksum() -> String {
    hex::encode(Sha256::digest(TABLE_TEXT.as_bytes()))
}

fn parse_table(text: &str) -> Result<Vec<CapitulationPatternRow>, CapCliError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |detail: &str| CapCliError::Fixture(format!("line {}: {detail}", i + 1));
        let fields: Vec<&str> = line.split('\t').collect();
        let [row, d, pat] = fields[..] else {
            return Err(bad("expected 3 tab-separated fields"));
        };
        let pattern = pat
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<u32>, _>>()
            .map_err(|_| bad("bad pattern"))?;
        rows.push(CapitulationPatternRow {
            row: row.parse().map_err(|_| bad("bad row number"))?,
            discriminant: d.parse().map_err(|_| bad("bad discriminant"))?,
            pattern,
        });
    }
    Ok(rows)
}

/// The embedded rows, after checksum and shape validation.
pub fn fixture_rows() -> Result<Vec<CapitulationPatternRow>, CapCliError> {
    let sum = table_checksum();
    if sum != TABLE_SHA256 {
        return Err(CapCliError::Fixture(format!(
            "checksum {sum} does not match {TABLE_SHA256}"
        )));
    }
    let rows = parse_table(TABLE_TEXT)?;
    if rows.len() != TABLE_ROWS {
        return Err(CapCliError::Fixture(format!("{} rows, expected {TABLE_ROWS}", rows.len())));
    }
    for (i, r) in rows.iter().enumerate() {
        if r.row != i + 1 {
            return Err(CapCliError::Fixture(format!("row {} out of sequence", r.row)));
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug)]
pub struct RowVerdict {
    pub row: CapitulationPatternRow,
    pub class_group: String,
    pub rank: usize,
    pub class: PatternClass,
}

impl RowVerdict {
    pub fn rank_ok(&self) -> bool {
        self.rank == 2
    }

    /// Diagnostic for a rank mismatch.
    pub fn conflict(&self) -> Option<String> {
        (!self.rank_ok()).then(|| {
            format!(
                "fixture conflict in row {}: D = {} is listed with 5-rank 2, computed 5-rank {} ({})",
                self.row.row, self.row.discriminant, self.rank, self.class_group
            )
        })
    }
}

/// Recomputes the 5-rank of every row and classifies its pattern.
pub fn verify_table() -> Result<Vec<RowVerdict>, CapCliError> {
    fixture_rows()?
        .into_iter()
        .map(|row| {
            let cg = class_group_structure(Discriminant::new(row.discriminant)?)?;
            let class = classify_capitulation_pattern(&row.pattern, TABLE_PRIME)?;
            Ok(RowVerdict {
                rank: cg.p_rank(TABLE_PRIME as i64),
                class_group: cg.describe(),
                class,
                row,
            })
        })
        .collect()
}
