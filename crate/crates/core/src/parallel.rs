//! Deterministic range partitioning over scoped threads.

use std::ops::Range;
use std::thread;

/// Splits `0..total` into `workers` contiguous chunks, runs `work` on each
/// in its own thread and returns the results in chunk order.
pub fn partitioned<T, F>(total: u64, workers: usize, work: F) -> Vec<T>
where
    F: Fn(Range<u64>) -> T + Sync,
    T: Send,
{
    let chunks = chunk_ranges(total, workers);
    if chunks.len() <= 1 {
        return chunks.into_iter().map(&work).collect();
    }
    let work = &work;
    thread::scope(|s| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|r| s.spawn(move || work(r)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    })
}

/// `workers` near-equal contiguous ranges covering `0..total`.
pub fn chunk_ranges(total: u64, workers: usize) -> Vec<Range<u64>> {
    let w = (workers.max(1) as u64).min(total.max(1));
    let base = total / w;
    let extra = total % w;
    let mut start = 0;
    (0..w)
        .map(|i| {
            let len = base + u64::from(i < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}

/// Default worker count: the machine's available parallelism.
pub fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}
