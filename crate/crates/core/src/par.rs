//! Execution strategy for the enumeration loops.
//!
//! Work is split into independent chunks (message prefixes, first indices of
//! column triples) whose partial results merge associatively. With the
//! `parallel` feature the chunks run on the rayon pool; without it, or when
//! [`Execution::Sequential`] is requested, they run in order on the caller's
//! thread. Both paths produce identical results.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Whether this strategy actually fans out in the current build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Folds `fold` over chunk indices `0..chunks`, merging partial states with `merge`.
pub(crate) fn fold_chunks<T, I, F, M>(
    exec: Execution,
    chunks: usize,
    identity: I,
    fold: F,
    merge: M,
) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, usize) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return (0..chunks)
            .into_par_iter()
            .fold(&identity, &fold)
            .reduce(&identity, &merge);
    }
    let _ = (&merge, exec);
    (0..chunks).fold(identity(), fold)
}
