//! Execution strategy for the exhaustive loops.
//!
//! Every parallel path has a sequential twin with identical results: searches
//! return the lowest-ranked hit and maps preserve input order, so output does
//! not depend on scheduling. The `parallel` feature (default) enables rayon.

use std::cell::Cell;
use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Range items (one subset each) are cheap; split ranges no finer than this.
#[cfg(feature = "parallel")]
const RANGE_CHUNK: usize = 1024;

/// Ranges here are subset masks, at most `2^ENUMERATION_CAP` long, so `usize` holds them.
#[cfg(feature = "parallel")]
fn indexed(range: Range<u64>) -> rayon::iter::MinLen<rayon::range::Iter<usize>> {
    (range.start as usize..range.end as usize)
        .into_par_iter()
        .with_min_len(RANGE_CHUNK)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

thread_local! {
    static DEFAULT_OVERRIDE: Cell<Option<Strategy>> = const { Cell::new(None) };
}

/// The compiled-in default, unless [`Strategy::as_default`] is active on this thread.
impl Default for Strategy {
    fn default() -> Self {
        if let Some(s) = DEFAULT_OVERRIDE.with(Cell::get) {
            return s;
        }
        #[cfg(feature = "parallel")]
        {
            Strategy::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Every strategy compiled into this build.
    pub fn available() -> Vec<Strategy> {
        vec![
            Strategy::Sequential,
            #[cfg(feature = "parallel")]
            Strategy::Parallel,
        ]
    }

    /// Runs `f` with `self` as the default strategy on the current thread.
    /// Used to keep per-instance work sequential inside an outer parallel loop.
    pub fn as_default<R>(self, f: impl FnOnce() -> R) -> R {
        struct Restore(Option<Strategy>);
        impl Drop for Restore {
            fn drop(&mut self) {
                DEFAULT_OVERRIDE.with(|c| c.set(self.0));
            }
        }
        let _restore = Restore(DEFAULT_OVERRIDE.with(|c| c.replace(Some(self))));
        f()
    }

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Sequential => "sequential",
            #[cfg(feature = "parallel")]
            Strategy::Parallel => "parallel",
        }
    }

    /// First `Some` in index order.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().find_map(f),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().find_map_first(f),
        }
    }

    /// First `Some` over an integer range, lowest value first.
    pub fn find_map_first_in<R, F>(self, range: Range<u64>, f: F) -> Option<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        match self {
            Strategy::Sequential => range.into_iter().find_map(f),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => indexed(range).find_map_first(|x| f(x as u64)),
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().map(f).collect(),
        }
    }

    pub fn map_range<R, F>(self, range: Range<u64>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        match self {
            Strategy::Sequential => range.map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => indexed(range).map(|x| f(x as u64)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_on_first_hit() {
        let items: Vec<u32> = (0..10_000).collect();
        for s in Strategy::available() {
            let hit = s.find_map_first(&items, |&x| (x % 977 == 976).then_some(x));
            assert_eq!(hit, Some(976), "{}", s.name());
            let hit = s.find_map_first_in(0..5000, |x| (x > 10 && x % 7 == 0).then_some(x));
            assert_eq!(hit, Some(14));
            assert_eq!(s.map(&items[..5], |x| x * 2), vec![0, 2, 4, 6, 8]);
            assert_eq!(s.map_range(0..3, |x| x + 1), vec![1, 2, 3]);
        }
    }

    #[test]
    fn scoped_default_is_restored() {
        let outer = Strategy::default();
        let inner = Strategy::Sequential.as_default(|| {
            let nested = Strategy::default();
            assert_eq!(nested, Strategy::Sequential);
            nested
        });
        assert_eq!(inner, Strategy::Sequential);
        assert_eq!(Strategy::default(), outer);
        let caught = std::panic::catch_unwind(|| Strategy::Sequential.as_default(|| panic!("x")));
        assert!(caught.is_err());
        assert_eq!(Strategy::default(), outer);
    }
}
