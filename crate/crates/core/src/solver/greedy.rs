//! Split-then-merge heuristic for an upper bound on the ID-index.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    certify, partition_distinguishes, IdIndexCertificate, InfeasibilityWitness, Partition,
};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, GraphError};
use crate::strings::Distinctness;
use crate::structure::{idi_lower_bound, tuplet_classes};

/// Returns a verified distinguishing partition without claiming optimality.
///
/// Twins start in distinct classes; while some pair is inseparable one of its
/// members (chosen by `seed`) moves to a new singleton class, which separates
/// that pair and keeps every separated pair separated. Classes are then
/// merged pairwise, in seeded order, as long as the partition still
/// distinguishes.
pub fn greedy_upper_bound(g: &Graph, seed: u64) -> Result<IdIndexCertificate, GraphError> {
    let dm = all_pairs_distances(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let twins = tuplet_classes(g);
    let mut labels: Vec<usize> = (0..g.n())
        .map(|v| {
            let members = &twins.classes()[twins.class_of(v)].members;
            members
                .iter()
                .position(|&m| m == v)
                .expect("v is in its own class")
        })
        .collect();

    while let Distinctness::Collision(u, v) =
        partition_distinguishes(&dm, &Partition::from_labels(&labels))
    {
        let moved = if rng.next_u32() & 1 == 0 { u } else { v };
        labels[moved] = labels.iter().max().map_or(0, |m| m + 1);
    }
    let partition = merge_classes(&dm, Partition::from_labels(&labels), &mut rng);

    let lower_bound = idi_lower_bound(g);
    Ok(certify(
        &dm,
        partition,
        lower_bound,
        InfeasibilityWitness::Unproven,
        0,
    )
    .expect("greedy partitions are verified before certification"))
}

fn merge_classes(dm: &DistanceMatrix, mut partition: Partition, rng: &mut ChaCha8Rng) -> Partition {
    'outer: loop {
        let k = partition.class_count();
        let mut pairs: Vec<(u32, u32)> = (0..k as u32)
            .flat_map(|a| (a + 1..k as u32).map(move |b| (a, b)))
            .collect();
        shuffle(&mut pairs, rng);
        for (a, b) in pairs {
            let labels: Vec<u32> = partition
                .assignment()
                .iter()
                .map(|&c| if c == b { a } else { c })
                .collect();
            let merged = Partition::from_labels(&labels);
            if partition_distinguishes(dm, &merged).is_distinct() {
                partition = merged;
                continue 'outer;
            }
        }
        return partition;
    }
}

fn shuffle<T>(items: &mut [T], rng: &mut ChaCha8Rng) {
    for i in (1..items.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;
    use crate::strings::is_distinguishing;

    fn family(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap().0
    }

    #[test]
    fn complete_graphs_need_all_ranks() {
        for n in 2..7 {
            let cert = greedy_upper_bound(&family(&alloc::format!("complete:{n}")), 1).unwrap();
            assert_eq!(cert.k, n);
        }
    }

    #[test]
    fn results_are_verified() {
        for s in [
            "path:10",
            "cycle:6",
            "petersen",
            "grid:3x4",
            "caterpillar:2,4,2,2,4,2",
        ] {
            for seed in 0..4 {
                let cert = greedy_upper_bound(&family(s), seed).unwrap();
                assert!(is_distinguishing(&cert.strings).is_distinct(), "{s}");
                assert!(cert.k >= cert.lower_bound);
                assert_eq!(cert.witness, InfeasibilityWitness::Unproven);
            }
        }
        assert!(greedy_upper_bound(&family("cycle:6"), 0).unwrap().k >= 2);
        assert!(greedy_upper_bound(&family("path:10"), 0).unwrap().k <= 10);
    }

    #[test]
    fn deterministic_for_a_seed() {
        let g = family("prism:7");
        assert_eq!(
            greedy_upper_bound(&g, 9).unwrap(),
            greedy_upper_bound(&g, 9).unwrap()
        );
    }
}
