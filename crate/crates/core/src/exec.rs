//! Choice between sequential and data-parallel evaluation.
//!
//! Without the `parallel` feature, [`Exec::Parallel`] silently runs sequentially.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Maps `f` over `items`, keeping input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Maps `f` over `0..n` and folds the results with an associative `combine`.
    pub fn map_reduce<R, F, C>(self, n: u64, identity: R, f: F, combine: C) -> R
    where
        R: Send + Sync + Clone,
        F: Fn(u64) -> R + Sync + Send,
        C: Fn(R, R) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return (0..n)
                .into_par_iter()
                .map(f)
                .reduce(|| identity.clone(), &combine);
        }
        (0..n).map(f).fold(identity, combine)
    }
}
