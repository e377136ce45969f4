//! Thin data-parallel layer.
//!
//! With the `parallel` feature these helpers fan work out over rayon's
//! global pool; without it they run the same closures sequentially. All
//! callers reduce with exact integer arithmetic, so results are identical
//! in both modes and for every thread count.

use std::iter::Sum;
use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Number of worker threads the helpers will use.
pub fn num_threads() -> usize {
    #[cfg(feature = "parallel")]
    return rayon::current_num_threads();

    #[cfg(not(feature = "parallel"))]
    return 1;
}

/// `range.map(f).collect()`, order preserved.
pub fn map_range<T, F>(range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    return range.into_par_iter().map(f).collect();

    #[cfg(not(feature = "parallel"))]
    return range.map(f).collect();
}

/// `items.iter().map(f).collect()`, order preserved.
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).collect();

    #[cfg(not(feature = "parallel"))]
    return items.iter().map(f).collect();
}

/// `range.map(f).sum()`.
pub fn sum_range<T, F>(range: Range<usize>, f: F) -> T
where
    T: Send + Sum<T>,
    F: Fn(usize) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    return range.into_par_iter().map(f).sum();

    #[cfg(not(feature = "parallel"))]
    return range.map(f).sum();
}

/// True iff `pred` holds for every index in `range`.
pub fn all_range<F>(range: Range<usize>, pred: F) -> bool
where
    F: Fn(usize) -> bool + Send + Sync,
{
    #[cfg(feature = "parallel")]
    return range.into_par_iter().all(pred);

    #[cfg(not(feature = "parallel"))]
    return range.into_iter().all(pred);
}
