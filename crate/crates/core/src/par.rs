//! Deterministic parallel tallies over integer ranges.

use rayon::prelude::*;

const CHUNK: u64 = 1 << 12;

/// Tallies `f(b)` over `lo..hi` into a histogram indexed by the returned
/// bucket. Buckets are merged by integer addition, so the result does not
/// depend on the thread count.
pub(crate) fn tally<F>(lo: u64, hi: u64, buckets: usize, f: F) -> Vec<u64>
where
    F: Fn(u64) -> Option<usize> + Sync,
{
    if hi <= lo {
        return vec![0; buckets];
    }
    let chunks = (hi - lo).div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = lo + c * CHUNK;
            let end = (start + CHUNK).min(hi);
            let mut local = vec![0u64; buckets];
            for b in start..end {
                if let Some(k) = f(b) {
                    local[k] += 1;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; buckets],
            |mut acc, part| {
                for (a, p) in acc.iter_mut().zip(part) {
                    *a += p;
                }
                acc
            },
        )
}
