//! Data-parallel map over work items, with a sequential fallback when the
//! `parallel` feature is disabled. The rayon path inherits the ambient
//! thread pool, so callers control the worker count by installing one.

#[cfg(feature = "parallel")]
pub(crate) fn map_items<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_items<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}
