//! Append-only scan store: one tab-separated record per line,
//! `D  h  d1,d2,...  p  rank  timestamp`, `#` for comments.

use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use chrono::{DateTime, SecondsFormat, Utc};

use super::CapCliError;
use crate::quadform::{class_group_structure, Discriminant};

const HEADER: &str = "# D\th\tinvariant factors\tp\tp-rank\ttimestamp";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub discriminant: i64,
    pub class_number: u64,
    /// Empty for the trivial group, written `1`.
    pub invariant_factors: Vec<i64>,
    pub prime: u32,
    pub rank: usize,
    pub timestamp: DateTime<Utc>,
}

impl ScanRecord {
    pub fn compute(discriminant: i64, prime: u32, timestamp: DateTime<Utc>) -> Result<Self, CapCliError> {
        let cg = class_group_structure(Discriminant::new(discriminant)?)?;
        Ok(ScanRecord {
            discriminant,
            class_number: cg.order,
            rank: cg.p_rank(prime as i64),
            invariant_factors: cg.invariant_factors,
            prime,
            timestamp,
        })
    }

    /// Equality of everything except the timestamp.
    pub fn same_data(&self, other: &ScanRecord) -> bool {
        self.discriminant == other.discriminant
            && self.class_number == other.class_number
            && self.invariant_factors == other.invariant_factors
            && self.prime == other.prime
            && self.rank == other.rank
    }

    pub fn factors_field(&self) -> String {
        if self.invariant_factors.is_empty() {
            "1".to_string()
        } else {
            let parts: Vec<String> = self.invariant_factors.iter().map(i64::to_string).collect();
            parts.join(",")
        }
    }
}

impl fmt::Display for ScanRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.discriminant,
            self.class_number,
            self.factors_field(),
            self.prime,
            self.rank,
            self.timestamp.to_rfc3339_opts(SecondsFormat::Secs, true)
        )
    }
}

impl FromStr for ScanRecord {
    type Err = String;

    fn from_str(line: &str) -> Result<Self, String> {
        let fields: Vec<&str> = line.split('\t').collect();
        let [d, h, factors, p, rank, ts] = fields[..] else {
            return Err(format!("expected 6 tab-separated fields, got {}", fields.len()));
        };
        let num = |name: &str, s: &str| -> Result<i64, String> {
            s.parse().map_err(|_| format!("bad {name} {s:?}"))
        };
        let invariant_factors = if factors == "1" {
            Vec::new()
        } else {
            factors
                .split(',')
                .map(|x| num("invariant factor", x))
                .collect::<Result<Vec<_>, _>>()?
        };
        if invariant_factors.iter().any(|&x| x < 2) {
            return Err(format!("bad invariant factors {factors:?}"));
        }
        let timestamp = DateTime::parse_from_rfc3339(ts)
            .map_err(|e| format!("bad timestamp {ts:?}: {e}"))?
            .with_timezone(&Utc);
        Ok(ScanRecord {
            discriminant: num("discriminant", d)?,
            class_number: h.parse().map_err(|_| format!("bad class number {h:?}"))?,
            invariant_factors,
            prime: p.parse().map_err(|_| format!("bad prime {p:?}"))?,
            rank: rank.parse().map_err(|_| format!("bad rank {rank:?}"))?,
            timestamp,
        })
    }
}

/// A line that failed to parse; 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorruptLine {
    pub line: usize,
    pub detail: String,
}

impl fmt::Display for CorruptLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.detail)
    }
}

#[derive(Clone, Debug, Default)]
pub struct StoreContents {
    pub records: Vec<ScanRecord>,
    pub corrupt: Vec<CorruptLine>,
}

#[derive(Clone, Debug)]
pub struct Store {
    path: PathBuf,
}

impl Store {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Store { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All parseable records; a missing file reads as empty.
    pub fn read(&self) -> Result<StoreContents, CapCliError> {
        let text = match std::fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(StoreContents::default()),
            Err(e) => return Err(self.io_error(e)),
        };
        let mut out = StoreContents::default();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            match line.parse() {
                Ok(r) => out.records.push(r),
                Err(detail) => out.corrupt.push(CorruptLine { line: i + 1, detail }),
            }
        }
        Ok(out)
    }

    /// Opens for appending, writing the header to a new file.
    pub fn writer(&self) -> Result<StoreWriter, CapCliError> {
        let fresh = std::fs::metadata(&self.path).map(|m| m.len() == 0).unwrap_or(true);
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| self.io_error(e))?;
        let mut w = StoreWriter {
            out: BufWriter::new(file),
            path: self.path.clone(),
        };
        if fresh {
            w.line(HEADER)?;
            w.flush()?;
        }
        Ok(w)
    }

    fn io_error(&self, e: std::io::Error) -> CapCliError {
        CapCliError::Store {
            path: self.path.display().to_string(),
            detail: e.to_string(),
        }
    }
}

/// The single writer of a store.
pub struct StoreWriter {
    out: BufWriter<File>,
    path: PathBuf,
}

impl StoreWriter {
    pub fn append(&mut self, record: &ScanRecord) -> Result<(), CapCliError> {
        self.line(&record.to_string())
    }

    pub fn flush(&mut self) -> Result<(), CapCliError> {
        let path = self.path.display().to_string();
        self.out
            .flush()
            .map_err(|e| CapCliError::Store { path, detail: e.to_string() })
    }

    fn line(&mut self, s: &str) -> Result<(), CapCliError> {
        let path = self.path.display().to_string();
        writeln!(self.out, "{s}").map_err(|e| CapCliError::Store { path, detail: e.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::TimeZone;

    fn ts() -> DateTime<Utc> {
        Utc.with_ymd_and_hms(2024, 1, 2, 3, 4, 5).unwrap()
    }

    #[test]
    fn record_round_trip() {
        for d in [-3, -23, -84, -12451] {
            let r = ScanRecord::compute(d, 5, ts()).unwrap();
            let back: ScanRecord = r.to_string().parse().unwrap();
            assert_eq!(back, r);
        }
        let r = ScanRecord::compute(-3, 5, ts()).unwrap();
        assert_eq!(r.to_string(), "-3\t1\t1\t5\t0\t2024-01-02T03:04:05Z");
    }

    #[test]
    fn rejects_malformed_lines() {
        for bad in [
            "",
            "-23\t3\t3\t5\t0",
            "-23\tx\t3\t5\t0\t2024-01-02T03:04:05Z",
            "-23\t3\t0\t5\t0\t2024-01-02T03:04:05Z",
            "-23\t3\t3\t5\t0\tyesterday",
        ] {
            assert!(bad.parse::<ScanRecord>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn missing_store_is_empty_and_corruption_is_located() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::new(dir.path().join("s.tsv"));
        assert!(store.read().unwrap().records.is_empty());
        let mut w = store.writer().unwrap();
        w.append(&ScanRecord::compute(-23, 3, ts()).unwrap()).unwrap();
        w.line("garbage").unwrap();
        w.append(&ScanRecord::compute(-47, 5, ts()).unwrap()).unwrap();
        w.flush().unwrap();
        drop(w);
        let c = store.read().unwrap();
        assert_eq!(c.records.len(), 2);
        assert_eq!(c.corrupt.len(), 1);
        assert_eq!(c.corrupt[0].line, 3);
    }
}
