#![allow(dead_code)]

use idindex_core::{all_pairs_distances, Graph};

/// Every labeled graph on `n` vertices, as an edge mask over pairs `u < v`.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

/// Connected labeled graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_labeled_graphs(n).filter(|g| all_pairs_distances(g).is_ok())
}

/// Deterministic xorshift stream for test-only sampling.
pub struct TestRng(pub u64);

impl TestRng {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Random connected graph by rejection.
pub fn random_connected(rng: &mut TestRng, n: usize) -> Graph {
    loop {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.below(2) == 0)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if all_pairs_distances(&g).is_ok() {
            return g;
        }
    }
}
