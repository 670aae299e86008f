//! Parallel audit over catalog entries.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use dng_core::audit::{audit_entry, audit_global, sort_records, AuditConfig, AuditRecord, Clock};
use dng_core::catalog::CatalogEntry;

pub struct SystemClock {
    start: Instant,
}

impl SystemClock {
    pub fn new() -> Self {
        SystemClock { start: Instant::now() }
    }
}

impl Default for SystemClock {
    fn default() -> Self {
        Self::new()
    }
}

impl Clock for SystemClock {
    fn now_ms(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }
}

/// `DNG_THREADS` when set to a positive integer, else the available parallelism.
pub fn thread_count() -> usize {
    std::env::var("DNG_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, NonZeroUsize::get))
}

/// Same records as [`dng_core::audit::run_audit`], computed on up to
/// `threads` workers and returned in canonical order.
pub fn run_audit_parallel(entries: &[CatalogEntry], config: &AuditConfig, threads: usize) -> Vec<AuditRecord> {
    // job i < entries.len() audits entry i; the last job is the cross-entry one
    let jobs = entries.len() + 1;
    let next = AtomicUsize::new(0);
    let done: Mutex<Vec<AuditRecord>> = Mutex::new(Vec::new());
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= jobs {
            return;
        }
        let records = if i < entries.len() { audit_entry(&entries[i], config) } else { audit_global(entries, config) };
        done.lock().expect("worker panicked").extend(records);
    };
    let workers = threads.clamp(1, jobs);
    std::thread::scope(|s| {
        for _ in 1..workers {
            s.spawn(work);
        }
        work();
    });
    let mut records = done.into_inner().expect("worker panicked");
    sort_records(&mut records);
    records
}

#[cfg(test)]
mod tests {
    use super::*;
    use dng_core::audit::run_audit;
    use dng_core::catalog::build_catalog;

    #[test]
    fn parallel_matches_sequential() {
        let entries: Vec<_> =
            build_catalog(false).into_iter().filter(|e| ["S3-natural", "C4-rotation", "C2-on-4"].contains(&e.name.as_str())).collect();
        let config = AuditConfig::default();
        assert_eq!(run_audit_parallel(&entries, &config, 3), run_audit(&entries, &config));
        assert_eq!(run_audit_parallel(&entries, &config, 1), run_audit(&entries, &config));
    }
}
