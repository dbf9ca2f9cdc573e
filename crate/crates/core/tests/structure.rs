mod common;

use common::{all_labeled_graphs, random_connected, TestRng};
use idindex_core::{all_pairs_distances, tuplet_classes, Graph, TupletKind};

fn open(g: &Graph, v: usize) -> Vec<usize> {
    g.neighbors(v).to_vec()
}

fn closed(g: &Graph, v: usize) -> Vec<usize> {
    let mut c = open(g, v);
    c.push(v);
    c.sort_unstable();
    c
}

fn brute_twins(g: &Graph, u: usize, v: usize) -> bool {
    u != v && (open(g, u) == open(g, v) || closed(g, u) == closed(g, v))
}

fn check(g: &Graph) {
    let n = g.n();
    let t = tuplet_classes(g);
    for u in 0..n {
        for v in 0..n {
            assert_eq!(t.are_twins(u, v), brute_twins(g, u, v), "{g:?} {u} {v}");
            for w in 0..n {
                if t.are_twins(u, v) && t.are_twins(v, w) && u != w {
                    assert!(t.are_twins(u, w));
                }
            }
        }
    }
    for class in t.classes() {
        let m = &class.members;
        match class.kind {
            None => assert_eq!(m.len(), 1),
            Some(kind) => {
                assert!(m.len() >= 2);
                for &a in m {
                    for &b in m {
                        if a < b {
                            assert_eq!(g.has_edge(a, b), kind == TupletKind::Clique);
                        }
                    }
                }
            }
        }
    }
    assert_eq!(
        t.largest(),
        t.classes().iter().map(|c| c.members.len()).max().unwrap()
    );
    if let Ok(dm) = all_pairs_distances(g) {
        for u in 0..n {
            for v in 0..n {
                if t.are_twins(u, v) {
                    for w in (0..n).filter(|&w| w != u && w != v) {
                        assert_eq!(dm.get(u, w), dm.get(v, w));
                    }
                }
            }
        }
    }
}

#[test]
fn twin_classes_match_brute_force_on_all_small_graphs() {
    for n in 1..=6 {
        all_labeled_graphs(n).for_each(|g| check(&g));
    }
}

#[test]
fn twin_classes_match_brute_force_on_seven_vertices() {
    let mut rng = TestRng(0xfeed);
    for _ in 0..2000 {
        let edges: Vec<_> = (0..7)
            .flat_map(|u| (u + 1..7).map(move |v| (u, v)))
            .filter(|_| rng.below(3) == 0)
            .collect();
        check(&Graph::new(7, &edges).unwrap());
    }
    for _ in 0..200 {
        check(&random_connected(&mut rng, 8));
    }
}
