//! Search budgets and run options shared by the guessing stages.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

/// Environment variable read by the CLI as a default for `--budget`.
pub const BUDGET_ENV: &str = "P5HOM_BUDGET";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of guess branches explored in one top-level solve.
    /// `None` searches exhaustively.
    pub budget: Option<u64>,
    /// Worker threads; `0` and `1` both mean sequential.
    pub parallel: usize,
}

impl SolveOptions {
    pub fn exhaustive() -> Self {
        SolveOptions::default()
    }

    pub fn with_parallel(mut self, workers: usize) -> Self {
        self.parallel = workers;
        self
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    /// Runs `f` on a dedicated pool when more than one worker is requested.
    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.parallel > 1 {
            match rayon::ThreadPoolBuilder::new().num_threads(self.parallel).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            }
        } else {
            f()
        }
    }
}

/// Shared branch counter. Once the limit is hit every stage stops
/// enumerating and the result is reported as non-exhaustive.
#[derive(Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    spent: AtomicU64,
    exceeded: AtomicBool,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Budget { limit, spent: AtomicU64::new(0), exceeded: AtomicBool::new(false) }
    }

    pub fn unlimited() -> Self {
        Budget::new(None)
    }

    /// Records one branch; returns `false` once the budget is spent.
    pub fn charge(&self) -> bool {
        let spent = self.spent.fetch_add(1, Ordering::Relaxed) + 1;
        match self.limit {
            Some(limit) if spent > limit => {
                self.exceeded.store(true, Ordering::Relaxed);
                false
            }
            _ => true,
        }
    }

    pub fn is_exceeded(&self) -> bool {
        self.exceeded.load(Ordering::Relaxed)
    }

    pub fn spent(&self) -> u64 {
        self.spent.load(Ordering::Relaxed)
    }
}

/// A result plus whether the search behind it ran to completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome<T> {
    pub value: T,
    pub exhaustive: bool,
    pub branches: u64,
}
