//! Brute-force ID-index: try every rank pattern over a value pool and test
//! the strings directly. Shares nothing with the partition search except the
//! string computation itself.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::graph::{all_pairs_distances, Graph, GraphError};
use crate::strings::{is_distinguishing, string_table, RankAssignment};

/// Errors from [`id_index_oracle`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    /// The graph is unusable.
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// More vertices than the oracle accepts.
    #[error("oracle limited to {limit} vertices, graph has {n}")]
    TooLarge {
        /// Vertex count.
        n: usize,
        /// Accepted maximum.
        limit: usize,
    },
    /// No assignment over the pool separates all strings.
    #[error("no distinguishing assignment over the given pool")]
    NoDistinguishingAssignment,
}

/// `(n + 1)^0, ..., (n + 1)^(n - 1)`.
pub fn geometric_pool(n: usize) -> Vec<BigInt> {
    let base = BigInt::from(n as u64 + 1);
    (0..n).map(|c| Pow::pow(&base, c as u32)).collect()
}

/// Least `|f(V)|` over all `f: V -> pool` whose strings are pairwise
/// distinct. Assignments are enumerated up to renaming of pool values: the
/// `j`-th distinct value to appear (in vertex order) is `pool[j]`.
pub fn id_index_oracle(g: &Graph, pool: &[BigInt], max_n: usize) -> Result<usize, OracleError> {
    let n = g.n();
    if n > max_n {
        return Err(OracleError::TooLarge { n, limit: max_n });
    }
    let dm = all_pairs_distances(g)?;
    let mut best: Option<usize> = None;
    let mut labels = vec![0usize; n];
    enumerate(&mut labels, 0, 0, pool.len(), &mut |labels, used| {
        if best.is_some_and(|b| b <= used) {
            return;
        }
        let f = RankAssignment::new(labels.iter().map(|&j| pool[j].clone()).collect());
        let strings = string_table(&dm, &f).expect("one rank per vertex");
        if is_distinguishing(&strings).is_distinct() {
            best = Some(used);
        }
    });
    best.ok_or(OracleError::NoDistinguishingAssignment)
}

fn enumerate(
    labels: &mut [usize],
    t: usize,
    used: usize,
    pool_len: usize,
    visit: &mut dyn FnMut(&[usize], usize),
) {
    if t == labels.len() {
        visit(labels, used);
        return;
    }
    for j in 0..pool_len.min(used + 1) {
        labels[t] = j;
        enumerate(labels, t + 1, used.max(j + 1), pool_len, visit);
    }
}
