//! Seeded random connected graphs.

use std::ops::RangeInclusive;

use idindex_core::{all_pairs_distances, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Samples `G(n, p)` until the result is connected. `p` must lie in `(0, 1]`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(p > 0.0 && p <= 1.0, "edge probability must lie in (0, 1]");
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).expect("sampled edges are simple");
        if all_pairs_distances(&g).is_ok() {
            return g;
        }
    }
}

/// `count` connected graphs with vertex counts drawn uniformly from `sizes`,
/// reproducible from `seed`.
pub fn random_corpus(seed: u64, count: usize, sizes: RangeInclusive<usize>, p: f64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            random_connected(&mut rng, n, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible_and_connected() {
        let a = random_corpus(7, 20, 6..=8, 0.5);
        assert_eq!(a, random_corpus(7, 20, 6..=8, 0.5));
        assert_ne!(a, random_corpus(8, 20, 6..=8, 0.5));
        for g in &a {
            assert!((6..=8).contains(&g.n()));
            assert!(all_pairs_distances(g).is_ok());
        }
    }

    #[test]
    fn sparse_graphs_still_connect() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_connected(&mut rng, 5, 0.3);
        assert!(all_pairs_distances(&g).is_ok());
        let complete = random_connected(&mut rng, 4, 1.0);
        assert_eq!(complete.edge_count(), 6);
    }
}
