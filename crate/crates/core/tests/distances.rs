#![allow(clippy::needless_range_loop)]

mod common;

use common::{all_labeled_graphs, random_connected, TestRng};
use idindex_core::{all_pairs_distances, generate, FamilySpec, Graph, GraphError};

/// Floyd–Warshall over the adjacency matrix; `None` marks unreachable.
fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for &v in g.neighbors(u) {
            d[u][v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn check_against_oracle(g: &Graph) {
    let oracle = floyd_warshall(g);
    let connected = oracle.iter().flatten().all(Option::is_some);
    match all_pairs_distances(g) {
        Ok(dm) => {
            assert!(connected);
            let n = g.n();
            let mut max = 0;
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(Some(dm.get(u, v)), oracle[u][v]);
                    assert_eq!(dm.get(u, v), dm.get(v, u));
                    assert_eq!(dm.get(u, v) == 0, u == v);
                    for w in 0..n {
                        assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                    }
                    max = max.max(dm.get(u, v));
                }
            }
            assert_eq!(dm.diameter(), max);
            if n >= 2 {
                assert!(dm.diameter() >= 1);
            }
        }
        Err(GraphError::Disconnected(u, v)) => {
            assert!(!connected);
            assert_eq!(oracle[u][v], None);
        }
        Err(e) => panic!("unexpected error {e}"),
    }
}

#[test]
fn bfs_matches_floyd_warshall_exhaustively() {
    for n in 1..=6 {
        all_labeled_graphs(n).for_each(|g| check_against_oracle(&g));
    }
}

#[test]
fn bfs_matches_floyd_warshall_on_random_graphs() {
    let mut rng = TestRng(0x5eed_1234);
    for _ in 0..300 {
        let n = 7 + rng.below(2) as usize;
        check_against_oracle(&random_connected(&mut rng, n));
    }
}

#[test]
fn family_diameters() {
    let diam = |s: &str| {
        let (g, _) = generate(&s.parse::<FamilySpec>().unwrap()).unwrap();
        all_pairs_distances(&g).unwrap().diameter()
    };
    assert_eq!(diam("petersen"), 2);
    assert_eq!(diam("prism:5"), 3);
    assert_eq!(diam("prism:3"), 2);
    assert_eq!(diam("prism:4"), 3);
    for leaves in [
        &[1, 1][..],
        &[2, 0, 1],
        &[2, 3, 2, 0, 3],
        &[2, 4, 2, 2, 4, 2],
        &[1, 0, 0, 0, 0, 0, 1],
    ] {
        let spec = FamilySpec::Caterpillar(leaves.to_vec());
        let (g, _) = generate(&spec).unwrap();
        assert_eq!(
            all_pairs_distances(&g).unwrap().diameter(),
            leaves.len() + 1,
            "{spec}"
        );
    }
}

#[test]
fn disjoint_edges_never_reach_the_solvers() {
    let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(matches!(
        all_pairs_distances(&g),
        Err(GraphError::Disconnected(..))
    ));
    assert!(idindex_core::id_index_exact(&g, Default::default()).is_err());
    assert!(idindex_core::id_number_exact(&g, Default::default()).is_err());
    assert!(idindex_core::greedy_upper_bound(&g, 0).is_err());
}
