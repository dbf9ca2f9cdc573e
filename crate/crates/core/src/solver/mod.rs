//! Exact ID-index search, brute-force oracles, ID-numbers and a greedy
//! upper bound.
//!
//! Strings are linear in the ranks: if `P` is the partition of `V` into
//! rank-value classes with class ranks `r_c`, then
//! `string(v)_i = sum_c r_c * N_i(v, c)` where `N_i(v, c)` counts class-`c`
//! vertices at distance `i` from `v`. Two vertices can be separated by some
//! choice of distinct class ranks iff their count tables differ, and the
//! ranks `r_c = (n + 1)^c` separate every such pair at once, because each
//! difference `N_i(u, c) - N_i(v, c)` lies strictly between `-(n + 1)` and
//! `n + 1`. The ID-index is therefore the least class count of a partition
//! whose count tables are pairwise distinct, which turns the search over real
//! ranks into a finite search over set partitions.

mod greedy;
mod id_number;
mod oracle;
mod search;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, GraphError};
use crate::strings::{first_collision, is_distinguishing, string_table, Distinctness};
use crate::strings::{RankAssignment, StringTable};
use crate::structure::idi_lower_bound;
use crate::Vertex;

pub use greedy::greedy_upper_bound;
pub use id_number::{id_number_exact, IdNumberResult};
pub use oracle::{geometric_pool, id_index_oracle, OracleError};
pub use search::{LevelOutcome, LevelReport, LevelSearch, LocalBudget, NodeBudget};

/// Errors from a partition that is not in restricted-growth form.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    /// `assignment[v]` exceeds one more than every earlier class id.
    #[error("class id {class} at vertex {vertex} breaks restricted growth")]
    NotRestrictedGrowth {
        /// First offending vertex.
        vertex: Vertex,
        /// Its class id.
        class: usize,
    },
}

/// A set partition of `0..n` in restricted-growth form: vertex 0 is in
/// class 0 and every class id is at most one more than all earlier ids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    assignment: Vec<u32>,
    classes: usize,
}

impl Partition {
    /// Validates a restricted-growth class assignment.
    pub fn new(assignment: Vec<u32>) -> Result<Self, PartitionError> {
        let mut next = 0u32;
        for (vertex, &class) in assignment.iter().enumerate() {
            if class > next {
                return Err(PartitionError::NotRestrictedGrowth {
                    vertex,
                    class: class as usize,
                });
            }
            if class == next {
                next += 1;
            }
        }
        Ok(Partition {
            assignment,
            classes: next as usize,
        })
    }

    /// The partition induced by equal labels, relabelled by first
    /// appearance.
    pub fn from_labels<T: Ord>(labels: &[T]) -> Self {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]).then(a.cmp(&b)));
        // first vertex of each label group, then relabel groups by that vertex
        let mut group = vec![0usize; labels.len()];
        let mut i = 0;
        while i < order.len() {
            let head = order[i];
            while i < order.len() && labels[order[i]] == labels[head] {
                group[order[i]] = head;
                i += 1;
            }
        }
        let mut id = vec![u32::MAX; labels.len()];
        let mut next = 0;
        let assignment = group
            .iter()
            .map(|&head| {
                if id[head] == u32::MAX {
                    id[head] = next;
                    next += 1;
                }
                id[head]
            })
            .collect();
        Partition {
            assignment,
            classes: next as usize,
        }
    }

    /// The partition into singletons.
    pub fn discrete(n: usize) -> Self {
        Partition {
            assignment: (0..n as u32).collect(),
            classes: n,
        }
    }

    /// Number of classes `k`.
    pub fn class_count(&self) -> usize {
        self.classes
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    /// Whether the partition covers no vertex.
    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Class of `v`.
    #[inline]
    pub fn class_of(&self, v: Vertex) -> usize {
        self.assignment[v] as usize
    }

    /// Class ids in vertex order.
    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// Members of each class.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.classes];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c as usize].push(v);
        }
        out
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let mut image = vec![u32::MAX; self.classes];
        self.assignment
            .iter()
            .zip(&coarser.assignment)
            .all(|(&mine, &theirs)| {
                let slot = &mut image[mine as usize];
                if *slot == u32::MAX {
                    *slot = theirs;
                }
                *slot == theirs
            })
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.assignment)
    }
}

/// Counts `N_i(v, c)` of class-`c` vertices at distance `i` from one vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairProfile {
    classes: usize,
    counts: Vec<u32>,
}

impl PairProfile {
    /// `N_i(v, c)` for `1 <= i <= d`.
    pub fn get(&self, distance: usize, class: usize) -> u32 {
        self.counts[(distance - 1) * self.classes + class]
    }

    /// Sum over all distances and classes; always `n - 1`.
    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }
}

/// Count tables of every vertex under `p`.
pub fn pair_profiles(dm: &DistanceMatrix, p: &Partition) -> Vec<PairProfile> {
    let k = p.class_count();
    let d = dm.diameter();
    (0..dm.n())
        .map(|v| {
            let mut counts = vec![0u32; d * k];
            for (u, &dist) in dm.row(v).iter().enumerate() {
                if dist > 0 {
                    counts[(dist as usize - 1) * k + p.class_of(u)] += 1;
                }
            }
            PairProfile { classes: k, counts }
        })
        .collect()
}

/// Whether some choice of distinct class ranks gives every vertex a distinct
/// string, i.e. whether the count tables are pairwise distinct. Reports the
/// lexicographically first pair that no rank choice can separate.
pub fn partition_distinguishes(dm: &DistanceMatrix, p: &Partition) -> Distinctness {
    first_collision(&pair_profiles(dm, p))
}

/// Ranks `(n + 1)^c` for class `c`. These separate every pair that
/// [`partition_distinguishes`] separates.
pub fn certificate_ranks(p: &Partition) -> RankAssignment {
    let base = BigInt::from(p.len() as u64 + 1);
    let powers: Vec<BigInt> = (0..p.class_count())
        .map(|c| Pow::pow(&base, c as u32))
        .collect();
    RankAssignment::new(
        p.assignment()
            .iter()
            .map(|&c| powers[c as usize].clone())
            .collect(),
    )
}

/// Search limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Partition-search node budget across all levels.
    pub max_nodes: u64,
    /// Largest vertex count accepted by [`id_number_exact`].
    pub max_id_number_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 10_000_000,
            max_id_number_vertices: 22,
        }
    }
}

/// Why no partition with fewer classes works.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfeasibilityWitness {
    /// `k = 1`: nothing to rule out.
    Trivial,
    /// `k` equals the twin lower bound `T(G)`.
    LowerBound(usize),
    /// Every partition with `classes` classes was searched and failed.
    Exhausted {
        /// `k - 1`.
        classes: usize,
        /// Nodes spent on that level.
        nodes: u64,
    },
    /// Heuristic result; optimality is not claimed.
    Unproven,
}

/// Proof that the ID-index is `k`, or with [`InfeasibilityWitness::Unproven`]
/// at most `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdIndexCertificate {
    /// Number of distinct ranks used.
    pub k: usize,
    /// Rank-equality pattern.
    pub partition: Partition,
    /// Concrete ranks realizing the partition.
    pub ranks: RankAssignment,
    /// Strings under `ranks`, verified pairwise distinct.
    pub strings: StringTable,
    /// `max(T(G), 1)`.
    pub lower_bound: usize,
    /// Why `k - 1` classes do not suffice.
    pub witness: InfeasibilityWitness,
    /// Partition-search nodes over all levels.
    pub nodes_searched: u64,
    /// Set for the one-vertex graph, whose ID-index is 1 by convention.
    pub by_convention: bool,
}

impl IdIndexCertificate {
    /// Whether level `k - 1` was searched exhaustively.
    pub fn exhausted_k_minus_1(&self) -> bool {
        matches!(self.witness, InfeasibilityWitness::Exhausted { .. })
    }
}

/// Errors from the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    /// The input graph is unusable (typically disconnected).
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// The budget ran out; the answer lies in `[lower, upper]`.
    #[error("search budget exceeded after {nodes} nodes; answer in [{lower}, {}]", upper.map_or_else(|| String::from("?"), |u| alloc::format!("{u}")))]
    BudgetExceeded {
        /// Certified lower bound.
        lower: usize,
        /// Best known upper bound, if any.
        upper: Option<usize>,
        /// Work done before giving up.
        nodes: u64,
    },
    /// A result failed its own verification.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Computes the ID-index exactly by searching partitions with `k` classes
/// for `k = max(T(G), 1), ...` and returns a verified certificate for the
/// first feasible `k`. The partition returned is the lexicographically least
/// feasible restricted-growth string at that level.
pub fn id_index_exact(g: &Graph, limits: Limits) -> Result<IdIndexCertificate, SolveError> {
    let budget = search::LocalBudget::new(limits.max_nodes);
    id_index_with(g, &budget, |level, budget| level.run(&[], budget))
}

/// [`id_index_exact`] with a caller-supplied budget and level runner, for
/// searches that split each level across workers. `run_level` must report
/// `Found` with the partition it wants certified, `Exhausted` only when no
/// partition at that level distinguishes.
pub fn id_index_with<B, F>(
    g: &Graph,
    budget: &B,
    mut run_level: F,
) -> Result<IdIndexCertificate, SolveError>
where
    B: NodeBudget + ?Sized,
    F: FnMut(&LevelSearch, &B) -> LevelReport,
{
    let dm = all_pairs_distances(g)?;
    let n = g.n();
    if n == 1 {
        let mut cert = certify(
            &dm,
            Partition::discrete(1),
            1,
            InfeasibilityWitness::Trivial,
            0,
        )?;
        cert.by_convention = true;
        return Ok(cert);
    }

    let lower_bound = idi_lower_bound(g);
    let mut previous_level: Option<(usize, u64)> = None;
    for k in lower_bound..=n {
        let report = run_level(&LevelSearch::new(&dm, k), budget);
        match report.outcome {
            LevelOutcome::Found(partition) => {
                let witness = match previous_level {
                    _ if k == 1 => InfeasibilityWitness::Trivial,
                    Some((classes, nodes)) if classes + 1 == k => {
                        InfeasibilityWitness::Exhausted { classes, nodes }
                    }
                    _ => InfeasibilityWitness::LowerBound(lower_bound),
                };
                return certify(&dm, partition, lower_bound, witness, budget.used());
            }
            LevelOutcome::Exhausted => previous_level = Some((k, report.nodes)),
            LevelOutcome::Aborted => {
                let upper = greedy_upper_bound(g, 0).map(|c| c.k).ok();
                return Err(SolveError::BudgetExceeded {
                    lower: k,
                    upper,
                    nodes: budget.used(),
                });
            }
        }
    }
    Err(SolveError::Invariant(String::from(
        "the discrete partition failed to distinguish",
    )))
}

/// Attaches ranks and strings to a partition and checks everything the
/// certificate promises.
pub(crate) fn certify(
    dm: &DistanceMatrix,
    partition: Partition,
    lower_bound: usize,
    witness: InfeasibilityWitness,
    nodes_searched: u64,
) -> Result<IdIndexCertificate, SolveError> {
    let ranks = certificate_ranks(&partition);
    let strings =
        string_table(dm, &ranks).map_err(|e| SolveError::Invariant(alloc::format!("{e}")))?;
    if let Distinctness::Collision(u, v) = is_distinguishing(&strings) {
        return Err(SolveError::Invariant(alloc::format!(
            "certificate strings of {u} and {v} coincide"
        )));
    }
    let k = partition.class_count();
    if ranks.distinct_rank_count() != k {
        return Err(SolveError::Invariant(String::from(
            "rank count differs from k",
        )));
    }
    if k < lower_bound && witness != InfeasibilityWitness::Unproven {
        return Err(SolveError::Invariant(alloc::format!(
            "k = {k} is below the twin bound {lower_bound}"
        )));
    }
    Ok(IdIndexCertificate {
        k,
        partition,
        ranks,
        strings,
        lower_bound,
        witness,
        nodes_searched,
        by_convention: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;

    fn family(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap().0
    }

    fn dm(s: &str) -> DistanceMatrix {
        all_pairs_distances(&family(s)).unwrap()
    }

    fn part(a: &[u32]) -> Partition {
        Partition::new(a.to_vec()).unwrap()
    }

    fn exact(s: &str) -> IdIndexCertificate {
        id_index_exact(&family(s), Limits::default()).unwrap()
    }

    #[test]
    fn restricted_growth_validation() {
        assert_eq!(part(&[0, 0, 1, 0, 2]).class_count(), 3);
        assert!(matches!(
            Partition::new(vec![1, 0]),
            Err(PartitionError::NotRestrictedGrowth {
                vertex: 0,
                class: 1
            })
        ));
        assert!(Partition::new(vec![0, 2]).is_err());
        assert_eq!(Partition::from_labels(&[7, 3, 7, 9]), part(&[0, 1, 0, 2]));
        assert!(part(&[0, 1, 2, 1]).refines(&part(&[0, 1, 0, 1])));
        assert!(!part(&[0, 0, 1]).refines(&part(&[0, 1, 1])));
    }

    #[test]
    fn profiles_on_p3() {
        let profiles = pair_profiles(&dm("path:3"), &part(&[0, 0, 1]));
        assert_eq!((profiles[0].get(1, 0), profiles[0].get(1, 1)), (1, 0));
        assert_eq!((profiles[0].get(2, 0), profiles[0].get(2, 1)), (0, 1));
        assert_eq!((profiles[1].get(1, 0), profiles[1].get(1, 1)), (1, 1));
        assert!(profiles.iter().all(|p| p.total() == 2));
    }

    #[test]
    fn single_class_profiles_are_sphere_sizes() {
        let m = dm("petersen");
        let profiles = pair_profiles(&m, &part(&[0; 10]));
        for (v, p) in profiles.iter().enumerate() {
            let sizes = m.sphere_sizes(v);
            for i in 1..=m.diameter() {
                assert_eq!(p.get(i, 0) as usize, sizes[i - 1]);
            }
        }
    }

    #[test]
    fn triangle_singletons() {
        let m = dm("complete:3");
        let p = part(&[0, 1, 2]);
        for (v, prof) in pair_profiles(&m, &p).iter().enumerate() {
            for c in 0..3 {
                assert_eq!(prof.get(1, c), u32::from(c != v));
            }
        }
        assert!(partition_distinguishes(&m, &p).is_distinct());
    }

    #[test]
    fn c4_needs_three_classes() {
        let m = dm("cycle:4");
        for a in [
            [0, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 1],
            [0, 1, 0, 1],
            [0, 1, 1, 0],
            [0, 1, 1, 1],
        ] {
            assert!(
                !partition_distinguishes(&m, &part(&a)).is_distinct(),
                "{a:?}"
            );
        }
        assert!(partition_distinguishes(&dm("path:3"), &part(&[0, 0, 1])).is_distinct());
    }

    #[test]
    fn certificate_rank_values() {
        let r = certificate_ranks(&part(&[0, 0, 1]));
        assert_eq!(r, RankAssignment::from_i64s(&[1, 1, 4]));
        assert_eq!(
            certificate_ranks(&part(&[0; 5])),
            RankAssignment::from_i64s(&[1; 5])
        );
        let r = certificate_ranks(&part(&[0, 1, 2, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(
            &r.ranks()[..3],
            RankAssignment::from_i64s(&[1, 11, 121]).ranks()
        );
    }

    #[test]
    fn known_indices() {
        assert_eq!(exact("petersen").k, 3);
        assert_eq!(exact("multipartite:1,1,2").k, 2);
        assert_eq!(exact("cycle:5").k, 3);
        assert_eq!(exact("cycle:6").k, 2);
        for n in 3..=5 {
            assert_eq!(exact(&alloc::format!("prism:{n}")).k, 3);
        }
        assert_eq!(exact("complete:4").k, 4);
        assert_eq!(exact("complete:3").k, 3);
        assert_eq!(exact("path:3").k, 2);
    }

    #[test]
    fn witnesses() {
        let p = exact("petersen");
        assert_eq!(p.lower_bound, 1);
        assert!(matches!(
            p.witness,
            InfeasibilityWitness::Exhausted { classes: 2, .. }
        ));
        let k4 = exact("complete:4");
        assert_eq!(k4.witness, InfeasibilityWitness::LowerBound(4));
        assert!(!k4.exhausted_k_minus_1());
        // K_{2,2} = C_4: bound 2, level 2 exhausted, answer 3
        assert!(exact("multipartite:2,2").exhausted_k_minus_1());
    }

    #[test]
    fn certificate_is_lexicographically_least() {
        // P_3: [0,0,0] fails, [0,0,1] is the first 2-class RGS and works
        assert_eq!(exact("path:3").partition, part(&[0, 0, 1]));
        assert_eq!(exact("complete:3").partition, part(&[0, 1, 2]));
    }

    #[test]
    fn one_vertex_by_convention() {
        let cert = id_index_exact(&Graph::new(1, &[]).unwrap(), Limits::default()).unwrap();
        assert!(cert.by_convention);
        assert_eq!(cert.k, 1);
        assert_eq!(cert.strings.diameter, 0);
    }

    #[test]
    fn disconnected_graph_errors() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            id_index_exact(&g, Limits::default()),
            Err(SolveError::Graph(GraphError::Disconnected(0, 2)))
        ));
    }

    #[test]
    fn budget_exhaustion_reports_bracket() {
        let limits = Limits {
            max_nodes: 50,
            ..Limits::default()
        };
        match id_index_exact(&family("petersen"), limits) {
            Err(SolveError::BudgetExceeded { lower, upper, .. }) => {
                assert!(lower <= 3);
                assert!(upper.unwrap() >= 3);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
