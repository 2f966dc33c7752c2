//! Feature-gated data-parallel helpers.
//!
//! With the `parallel` feature the closures run on rayon; without it the
//! same call sites degrade to plain sequential iteration. Results are
//! collected in index order either way, so both builds produce identical
//! output.

#[cfg(feature = "parallel")]
pub fn indexed_map<U, F>(count: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn indexed_map<U, F>(count: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    (0..count).map(f).collect()
}

/// Runs `op` on a pool of `workers` threads when parallelism is enabled
/// (0 means the rayon default); sequential builds just invoke `op`.
#[cfg(feature = "parallel")]
pub fn with_workers<R: Send>(workers: usize, op: impl FnOnce() -> R + Send) -> R {
    if workers == 0 {
        return op();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("failed to build thread pool");
    pool.install(op)
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<R: Send>(_workers: usize, op: impl FnOnce() -> R + Send) -> R {
    op()
}
