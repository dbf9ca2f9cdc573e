//! Multi-threaded exact search.
//!
//! Each level is split into restricted-growth prefixes that rayon searches
//! independently. Prefixes are taken in lexicographic order and the first
//! one with a hit wins, so the certificate agrees with the single-threaded
//! search.

use std::sync::atomic::{AtomicU64, Ordering};

use idindex_core::solver::{LevelOutcome, LevelReport, LevelSearch, NodeBudget};
use idindex_core::{id_index_with, Graph, IdIndexCertificate, Limits, SolveError};
use rayon::prelude::*;

const MIN_BRANCHES: usize = 64;

/// Node budget shared between threads.
#[derive(Debug)]
pub struct AtomicBudget {
    used: AtomicU64,
    limit: u64,
}

impl AtomicBudget {
    /// Allows `limit` nodes in total.
    pub fn new(limit: u64) -> Self {
        AtomicBudget {
            used: AtomicU64::new(0),
            limit,
        }
    }
}

impl NodeBudget for AtomicBudget {
    fn charge(&self, nodes: u64) -> bool {
        self.used.fetch_add(nodes, Ordering::Relaxed) + nodes <= self.limit
    }

    fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    fn granularity(&self) -> u64 {
        1024
    }
}

fn run_level(level: &LevelSearch, budget: &AtomicBudget) -> LevelReport {
    let before = budget.used();
    let mut len = 1;
    let mut prefixes = level.prefixes(len);
    while prefixes.len() < MIN_BRANCHES && len < 24 {
        let longer = level.prefixes(len + 1);
        if longer.len() == prefixes.len() {
            break;
        }
        len += 1;
        prefixes = longer;
    }
    let hit =
        prefixes
            .par_iter()
            .find_map_first(|prefix| match level.run(prefix, budget).outcome {
                LevelOutcome::Exhausted => None,
                other => Some(other),
            });
    LevelReport {
        outcome: hit.unwrap_or(LevelOutcome::Exhausted),
        nodes: budget.used() - before,
    }
}

/// [`idindex_core::id_index_exact`] on the rayon thread pool. Returns the
/// same `k` and partition; node counts may differ slightly because branches
/// past the winning one are abandoned at different points.
pub fn id_index_parallel(g: &Graph, limits: Limits) -> Result<IdIndexCertificate, SolveError> {
    let budget = AtomicBudget::new(limits.max_nodes);
    id_index_with(g, &budget, run_level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use idindex_core::{generate, id_index_exact};

    #[test]
    fn agrees_with_single_threaded_search() {
        for s in [
            "petersen",
            "prism:5",
            "cycle:9",
            "grid:3x3",
            "multipartite:2,2",
            "caterpillar:3,1,1,3",
            "path:1",
        ] {
            let g = generate(&s.parse().unwrap()).unwrap().0;
            let a = id_index_exact(&g, Limits::default()).unwrap();
            let b = id_index_parallel(&g, Limits::default()).unwrap();
            assert_eq!(a.k, b.k, "{s}");
            assert_eq!(a.partition, b.partition, "{s}");
            assert_eq!(a.exhausted_k_minus_1(), b.exhausted_k_minus_1(), "{s}");
        }
    }

    #[test]
    fn budget_is_shared() {
        let g = generate(&"prism:5".parse().unwrap()).unwrap().0;
        let limits = Limits {
            max_nodes: 100,
            ..Limits::default()
        };
        assert!(matches!(
            id_index_parallel(&g, limits),
            Err(SolveError::BudgetExceeded { lower: 2, .. })
        ));
    }
}
