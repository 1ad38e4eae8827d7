//! Order-preserving map over a slice of independent tasks.
//!
//! All batch drivers in this workspace (grid scans, bound sweeps, random
//! polynomial sweeps, candidate evolutions) funnel through [`map`]. The
//! output is a `Vec` in input order regardless of execution mode, so results
//! are byte-for-byte reproducible whether or not work is farmed out to
//! threads.
//!
//! The `parallel` feature (on by default) pulls in rayon. Without it the
//! crate still compiles and every mode degrades to the sequential path.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a batch of independent tasks should be executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExecMode {
    /// Run tasks one after another on the calling thread.
    Sequential,
    /// Run tasks on the rayon pool. Falls back to sequential when the
    /// `parallel` feature is disabled.
    Parallel,
    /// Pick automatically: parallel for batches of at least
    /// [`AUTO_THRESHOLD`] tasks, sequential below that.
    #[default]
    Auto,
}

/// Batch size at which `ExecMode::Auto` switches to the parallel path.
pub const AUTO_THRESHOLD: usize = 16;

impl ExecMode {
    /// Parse a mode name as used by CLI flags and config files.
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "seq" | "sequential" => Some(Self::Sequential),
            "par" | "parallel" => Some(Self::Parallel),
            "auto" => Some(Self::Auto),
            _ => None,
        }
    }

    fn runs_parallel(self, task_count: usize) -> bool {
        if !cfg!(feature = "parallel") {
            return false;
        }
        match self {
            Self::Sequential => false,
            Self::Parallel => true,
            Self::Auto => task_count >= AUTO_THRESHOLD,
        }
    }
}

/// Apply `f` to every item, returning results in input order.
pub fn map<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.runs_parallel(items.len()) {
        return items.par_iter().map(&f).collect();
    }
    let _ = mode;
    items.iter().map(&f).collect()
}

/// Apply `f` to every index in `0..count`, returning results in index order.
///
/// Convenience for drivers that generate their work items from an index
/// rather than materializing an input slice.
pub fn map_indexed<U, F>(mode: ExecMode, count: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.runs_parallel(count) {
        return (0..count).into_par_iter().map(&f).collect();
    }
    let _ = mode;
    (0..count).map(&f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_input_order() {
        let items: Vec<u64> = (0..1000).collect();
        for mode in [ExecMode::Sequential, ExecMode::Parallel, ExecMode::Auto] {
            let out = map(mode, &items, |&x| x * x);
            assert!(out.iter().enumerate().all(|(i, &v)| v == (i as u64).pow(2)));
        }
    }

    #[test]
    fn modes_agree() {
        let items: Vec<f64> = (0..257).map(|i| i as f64 * 0.25).collect();
        let seq = map(ExecMode::Sequential, &items, |&x| (x.sin(), x.exp()));
        let par = map(ExecMode::Parallel, &items, |&x| (x.sin(), x.exp()));
        assert_eq!(seq, par);
    }

    #[test]
    fn indexed_matches_slice_form() {
        let items: Vec<usize> = (0..100).collect();
        let a = map(ExecMode::Auto, &items, |&i| i + 7);
        let b = map_indexed(ExecMode::Auto, 100, |i| i + 7);
        assert_eq!(a, b);
    }

    #[test]
    fn parse_names() {
        assert_eq!(ExecMode::parse("seq"), Some(ExecMode::Sequential));
        assert_eq!(ExecMode::parse("parallel"), Some(ExecMode::Parallel));
        assert_eq!(ExecMode::parse("auto"), Some(ExecMode::Auto));
        assert_eq!(ExecMode::parse("bogus"), None);
    }

    #[test]
    fn empty_input() {
        let out: Vec<u8> = map(ExecMode::Parallel, &[] as &[u8], |&x| x);
        assert!(out.is_empty());
    }
}
