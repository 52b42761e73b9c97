//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over rayon's pool;
//! without it, or with [`Execution::Sequential`], the same closures run in
//! index order. Callers derive per-index randomness from the index, so both
//! paths produce identical results.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
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

/// `(0..n).map(f)` collected in index order.
pub fn map_indexed<R, F>(exec: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

/// Lowest index `i` for which `f(i)` is `Some`, with its value.
pub fn find_first<R, F>(exec: Execution, n: usize, f: F) -> Option<(usize, R)>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().find_map_first(|i| f(i).map(|r| (i, r)))
        }
        _ => (0..n).find_map(|i| f(i).map(|r| (i, r))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_paths_agree() {
        let f = |i: usize| i * i;
        assert_eq!(
            map_indexed(Execution::Sequential, 100, f),
            map_indexed(Execution::Parallel, 100, f)
        );
        let g = |i: usize| (i % 17 == 16 && i > 20).then_some(i);
        assert_eq!(find_first(Execution::Sequential, 200, g), Some((33, 33)));
        assert_eq!(find_first(Execution::Parallel, 200, g), Some((33, 33)));
        assert_eq!(find_first(Execution::Parallel, 10, |_| None::<u8>), None);
    }
}
