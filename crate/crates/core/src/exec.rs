//! Tiny execution shim: map a job index range to results, optionally on rayon.
//!
//! Results are always collected in index order, so callers that fold them
//! sequentially get the same bytes whether or not work was stolen across
//! threads.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Run `f` for every index in `0..n`, in parallel when `parallel` is set and
/// the `parallel` feature is compiled in. Output order is always `0..n`.
pub(crate) fn map_indexed<R, F>(parallel: bool, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_stable() {
        let seq = map_indexed(false, 100, |i| i * 3);
        let par = map_indexed(true, 100, |i| i * 3);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 21);
    }
}
