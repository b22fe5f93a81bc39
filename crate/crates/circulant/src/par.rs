//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the sweep helpers fan out on rayon and collect
//! in index order, so results are deterministic regardless of thread count.
//! Without the feature they degrade to plain iterators with the same
//! signatures and the same output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Ordered map over a slice.
#[cfg(feature = "parallel")]
pub(crate) fn map_slice<T: Sync, U: Send, F: Fn(&T) -> U + Sync + Send>(items: &[T], f: F) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_slice<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Runs `f` on a dedicated pool of `workers` threads when requested; `None`
/// uses the global pool. Without the `parallel` feature the closure runs on
/// the calling thread either way.
#[cfg(feature = "parallel")]
pub fn with_workers<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match workers {
        Some(w) if w >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("failed to build thread pool")
            .install(f),
        _ => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<R>(workers: Option<usize>, f: impl FnOnce() -> R) -> R {
    let _ = workers;
    f()
}
