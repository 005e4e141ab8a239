//! Batch verification with a bounded worker pool.
//!
//! Entries are distributed to workers through a shared cursor and the
//! results are aggregated back in registry order, so the output is
//! independent of the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rrverify_core::error::Error;
use rrverify_core::registry::{registry, verify, IdentityReport, Params, Status, VerifyOptions};

/// Outcome of one entry in a batch run: a report, or the error that kept the
/// builders from running at all.
pub type BatchResult = (String, Result<IdentityReport, Error>);

/// Verify every registry entry at its default parameters.
///
/// `order` overrides each entry's default order when given. Reports carry
/// wall-clock timings and come back in registry order regardless of `jobs`.
pub fn run_all(order: Option<i64>, jobs: usize, opts: &VerifyOptions) -> Vec<BatchResult> {
    let entries: Vec<(String, i64)> = registry()
        .iter()
        .map(|spec| (spec.id.to_string(), order.unwrap_or(spec.default_order)))
        .collect();
    let jobs = jobs.max(1).min(entries.len().max(1));

    let cursor = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<BatchResult>>> = Mutex::new(vec![None; entries.len()]);

    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let index = cursor.fetch_add(1, Ordering::Relaxed);
                if index >= entries.len() {
                    break;
                }
                let (id, order) = &entries[index];
                let start = Instant::now();
                let outcome = verify(id, &Params::new(), *order, opts).map(|mut report| {
                    report.elapsed = Some(start.elapsed());
                    report
                });
                results.lock().unwrap()[index] = Some((id.clone(), outcome));
            });
        }
    });

    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|slot| slot.expect("every entry visited"))
        .collect()
}

/// True when every report in the batch is a MATCH.
pub fn all_matched(results: &[BatchResult]) -> bool {
    results
        .iter()
        .all(|(_, outcome)| matches!(outcome, Ok(report) if report.status == Status::Match))
}
