//! Resumable discriminant scanner. Workers compute class groups in
//! parallel per block; the calling thread is the only store writer.

use std::collections::{BTreeMap, HashSet};

use chrono::{DateTime, Utc};
use rayon::prelude::*;

use super::store::{CorruptLine, ScanRecord, Store};
use super::table::{fixture_rows, TABLE_PRIME};
use super::CapCliError;
use crate::quadform::{is_fundamental, is_prime};

/// Discriminants computed between store flushes.
const BLOCK: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanParams {
    /// Inclusive bounds; either order.
    pub from: i64,
    pub to: i64,
    pub prime: u32,
    pub min_rank: usize,
    pub jobs: usize,
}

#[derive(Clone, Debug, Default)]
pub struct ScanSummary {
    /// Fundamental discriminants in range.
    pub total: usize,
    pub added: usize,
    pub skipped: usize,
    /// Records in range with rank at least `min_rank`, by decreasing D.
    pub matches: Vec<ScanRecord>,
    /// Rank histogram over all records in range.
    pub by_rank: BTreeMap<usize, usize>,
    pub corrupt: Vec<CorruptLine>,
    /// Rank-2 discriminants inside the table's range but absent from it.
    pub untabulated: Vec<i64>,
}

/// Negative fundamental discriminants in `[lo, hi]`, by decreasing value.
pub fn fundamental_range(from: i64, to: i64) -> Vec<i64> {
    let (lo, hi) = (from.min(to), from.max(to).min(-1));
    (lo..=hi).rev().filter(|&d| is_fundamental(d)).collect()
}

pub fn scan(params: &ScanParams, store: &Store) -> Result<ScanSummary, CapCliError> {
    scan_at(params, store, Utc::now)
}

/// As [`scan`] with an explicit clock.
pub fn scan_at(
    params: &ScanParams,
    store: &Store,
    clock: impl Fn() -> DateTime<Utc>,
) -> Result<ScanSummary, CapCliError> {
    if !is_prime(params.prime as i64) {
        return Err(CapCliError::NotPrime(params.prime as i64));
    }
    let existing = store.read()?;
    let mut summary = ScanSummary {
        corrupt: existing.corrupt,
        ..ScanSummary::default()
    };
    let discs = fundamental_range(params.from, params.to);
    summary.total = discs.len();
    let wanted: HashSet<i64> = discs.iter().copied().collect();

    let mut have: BTreeMap<i64, ScanRecord> = BTreeMap::new();
    for r in existing.records {
        if r.prime == params.prime && wanted.contains(&r.discriminant) {
            have.entry(r.discriminant).or_insert(r);
        }
    }
    summary.skipped = have.len();

    let todo: Vec<i64> = discs.iter().copied().filter(|d| !have.contains_key(d)).collect();
    if !todo.is_empty() {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(params.jobs.max(1))
            .build()
            .map_err(|e| CapCliError::Usage(e.to_string()))?;
        let mut writer = store.writer()?;
        for block in todo.chunks(BLOCK) {
            let now = clock();
            let records = pool.install(|| {
                block
                    .par_iter()
                    .map(|&d| ScanRecord::compute(d, params.prime, now))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            for r in records {
                writer.append(&r)?;
                summary.added += 1;
                have.insert(r.discriminant, r);
            }
            writer.flush()?;
        }
    }

    let tabulated: HashSet<i64> = fixture_rows()?.iter().map(|r| r.discriminant).collect();
    let (tlo, thi) = tabulated
        .iter()
        .fold((i64::MAX, i64::MIN), |(lo, hi), &d| (lo.min(d), hi.max(d)));
    for r in have.values().rev() {
        *summary.by_rank.entry(r.rank).or_default() += 1;
        if r.rank >= params.min_rank {
            summary.matches.push(r.clone());
        }
        if params.prime == TABLE_PRIME
            && r.rank == 2
            && (tlo..=thi).contains(&r.discriminant)
            && !tabulated.contains(&r.discriminant)
        {
            summary.untabulated.push(r.discriminant);
        }
    }
    Ok(summary)
}

/// Stored records that differ from a fresh computation, ignoring timestamps.
pub fn audit(records: &[ScanRecord]) -> Result<Vec<i64>, CapCliError> {
    records
        .par_iter()
        .map(|r| {
            let fresh = ScanRecord::compute(r.discriminant, r.prime, r.timestamp)?;
            Ok((!fresh.same_data(r)).then_some(r.discriminant))
        })
        .filter_map(Result::transpose)
        .collect()
}
