//! Context database: logs of derived results, newest-first retrieval.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::TimeMs;

/// Per-job cap on retained records; the oldest by `produced_at` is evicted
/// first.
pub const MAX_RECORDS_PER_JOB: usize = 100;

/// One stored task result.
#[derive(Debug, Clone, PartialEq)]
pub struct ContextRecord {
    pub job_name: String,
    /// Opaque result payload (label text).
    pub result: String,
    pub produced_at: TimeMs,
    pub input_size_kb: f64,
}

/// Bounded per-job result log. Records may arrive in any order; retrieval
/// is always by maximum `produced_at`, with the most recently appended
/// record winning a timestamp tie.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ContextDb {
    records: BTreeMap<String, Vec<ContextRecord>>,
}

impl ContextDb {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn append(&mut self, record: ContextRecord) {
        let entries = self.records.entry(record.job_name.clone()).or_default();
        entries.push(record);
        if entries.len() > MAX_RECORDS_PER_JOB {
            // Evict the oldest by produced_at; first occurrence breaks ties
            // so the earliest-inserted of equal timestamps goes first.
            let oldest = entries
                .iter()
                .enumerate()
                .min_by(|(ia, a), (ib, b)| {
                    a.produced_at.total_cmp(&b.produced_at).then(ia.cmp(ib))
                })
                .map(|(i, _)| i)
                .expect("non-empty after push");
            entries.remove(oldest);
        }
    }

    /// The record with maximum `produced_at` for `job_name`, if any.
    pub fn latest(&self, job_name: &str) -> Option<&ContextRecord> {
        self.records.get(job_name)?.iter().reduce(|best, r| {
            if r.produced_at >= best.produced_at {
                r
            } else {
                best
            }
        })
    }

    pub fn records(&self, job_name: &str) -> &[ContextRecord] {
        self.records.get(job_name).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn total_records(&self) -> usize {
        self.records.values().map(Vec::len).sum()
    }
}

impl ContextRecord {
    pub fn new(job_name: &str, result: &str, produced_at: TimeMs, input_size_kb: f64) -> Self {
        Self {
            job_name: job_name.to_string(),
            result: result.to_string(),
            produced_at,
            input_size_kb,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latest_picks_max_produced_at() {
        let mut db = ContextDb::new();
        db.append(ContextRecord::new("job", "old", 100.0, 1.0));
        db.append(ContextRecord::new("job", "new", 200.0, 1.0));
        assert_eq!(db.latest("job").unwrap().result, "new");
    }

    #[test]
    fn latest_absent_when_no_records() {
        let db = ContextDb::new();
        assert!(db.latest("job").is_none());
    }

    #[test]
    fn latest_matches_linear_scan_for_random_insertion_order() {
        // Oracle: linear scan over the raw record list.
        let mut rng = crate::hash::SplitMix64::new(11);
        let mut db = ContextDb::new();
        let mut raw = alloc::vec::Vec::new();
        for i in 0..50 {
            let t = (rng.next_u64() % 10_000) as f64;
            let rec = ContextRecord::new("job", &alloc::format!("r{i}"), t, 1.0);
            raw.push(rec.clone());
            db.append(rec);
        }
        let expected = raw
            .iter()
            .fold(None::<&ContextRecord>, |best, r| match best {
                Some(b) if b.produced_at > r.produced_at => Some(b),
                _ => Some(r),
            })
            .unwrap();
        assert_eq!(db.latest("job").unwrap().produced_at, expected.produced_at);
    }

    #[test]
    fn eviction_keeps_newest_hundred() {
        let mut db = ContextDb::new();
        for i in 0..(MAX_RECORDS_PER_JOB + 20) {
            db.append(ContextRecord::new("job", "r", i as f64, 1.0));
        }
        let records = db.records("job");
        assert_eq!(records.len(), MAX_RECORDS_PER_JOB);
        // Oldest 20 evicted.
        assert!(records.iter().all(|r| r.produced_at >= 20.0));
        assert_eq!(db.latest("job").unwrap().produced_at, 119.0);
    }

    #[test]
    fn jobs_are_isolated() {
        let mut db = ContextDb::new();
        db.append(ContextRecord::new("a", "ra", 10.0, 1.0));
        db.append(ContextRecord::new("b", "rb", 20.0, 1.0));
        assert_eq!(db.latest("a").unwrap().result, "ra");
        assert_eq!(db.latest("b").unwrap().result, "rb");
    }
}
