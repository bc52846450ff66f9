//! Execution strategy for the enumeration kernels.
//!
//! Parallel and sequential runs return identical results: work is split into
//! independent chunks whose outputs are merged in chunk order.

/// How an enumeration is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    /// Rayon work-stealing; silently sequential without the `parallel` feature.
    #[default]
    Parallel,
}

impl Strategy {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

/// Order-preserving map over `items`.
pub fn map<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

/// Order-preserving map over `0..len`.
pub fn map_range<R, F>(strategy: Strategy, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = strategy;
    (0..len).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_preserve_order() {
        let items: Vec<u32> = (0..1000).collect();
        let a = map(Strategy::Sequential, &items, |x| x * 3);
        let b = map(Strategy::Parallel, &items, |x| x * 3);
        assert_eq!(a, b);
        assert_eq!(map_range(Strategy::Parallel, 5, |i| i * i), vec![0, 1, 4, 9, 16]);
    }
}
