//! Data-parallel map/reduce with a sequential fallback.
//!
//! With the `parallel` feature (on by default) work items are spread over the rayon
//! pool; without it everything runs on the calling thread. Reductions must be
//! associative and commutative so results do not depend on scheduling.

/// How a scan should be executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise sequential.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub(crate) fn map_reduce<I, T, M, R>(exec: Execution, items: Vec<I>, identity: fn() -> T, map: M, reduce: R) -> T
where
    I: Send,
    T: Send,
    M: Fn(I) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(map).reduce(identity, reduce);
    }
    let _ = exec;
    items.into_iter().map(map).fold(identity(), reduce)
}

/// Maps every item, preserving input order in the output.
pub(crate) fn map_collect<I, T, M>(exec: Execution, items: Vec<I>, map: M) -> Vec<T>
where
    I: Send,
    T: Send,
    M: Fn(I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(map).collect();
    }
    let _ = exec;
    items.into_iter().map(map).collect()
}
