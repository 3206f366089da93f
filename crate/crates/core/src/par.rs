//! Data-parallel helpers.
//!
//! With the `parallel` feature (default) these run on the rayon global pool;
//! without it, or under [`Mode::Sequential`], they are plain iterator loops.
//! Results are always returned in input order, so output never depends on
//! scheduling.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Mode::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Mode::Sequential
        }
    }
}

// 0 = default, 1 = forced sequential.
static FORCE_SEQUENTIAL: AtomicU8 = AtomicU8::new(0);

/// Current process-wide mode.
pub fn mode() -> Mode {
    if FORCE_SEQUENTIAL.load(Ordering::Relaxed) == 1 {
        Mode::Sequential
    } else {
        Mode::default()
    }
}

/// Switches the process-wide mode. Used by benchmarks and the CLI.
pub fn set_mode(m: Mode) {
    FORCE_SEQUENTIAL.store(u8::from(m == Mode::Sequential), Ordering::Relaxed);
}

/// `items.map(f)` collected in order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode() {
        Mode::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
    }
}

/// `(0..len).map(f)` collected in order.
pub fn map_range<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match mode() {
        Mode::Sequential => (0..len).map(f).collect(),
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            (0..len).into_par_iter().map(f).collect()
        }
    }
}

/// Runs two closures, possibly concurrently.
pub fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    match mode() {
        Mode::Sequential => (a(), b()),
        #[cfg(feature = "parallel")]
        Mode::Parallel => rayon::join(a, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let xs: Vec<u64> = (0..1000).collect();
        let ys = map(&xs, |x| x * x);
        assert_eq!(ys, xs.iter().map(|x| x * x).collect::<Vec<_>>());
        assert_eq!(map_range(5, |i| i + 1), vec![1, 2, 3, 4, 5]);
        assert_eq!(join(|| 1, || 2), (1, 2));
    }
}
