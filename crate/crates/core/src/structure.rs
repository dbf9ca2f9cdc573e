//! Twin classes, lower bounds and distance profiles.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{DistanceMatrix, Graph};
use crate::Vertex;

/// How the members of a tuplet class relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TupletKind {
    /// Pairwise nonadjacent with equal open neighborhoods (false twins).
    Independent,
    /// Pairwise adjacent with equal closed neighborhoods (true twins).
    Clique,
}

/// A maximal twin class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupletClass {
    /// Members in increasing order.
    pub members: Vec<Vertex>,
    /// `None` for singletons.
    pub kind: Option<TupletKind>,
}

/// Partition of the vertex set into maximal twin classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupletClasses {
    classes: Vec<TupletClass>,
    class_of: Vec<usize>,
}

impl TupletClasses {
    /// Classes ordered by smallest member.
    pub fn classes(&self) -> &[TupletClass] {
        &self.classes
    }

    /// Index into [`TupletClasses::classes`] of the class containing `v`.
    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    /// `T(G)`: the largest class size, 1 when no t-tuplet exists.
    pub fn largest(&self) -> usize {
        self.classes
            .iter()
            .map(|c| c.members.len())
            .max()
            .unwrap_or(1)
    }

    /// Whether `u` and `v` are twins.
    pub fn are_twins(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.class_of[u] == self.class_of[v]
    }
}

/// Groups vertices with equal open neighborhoods or equal closed
/// neighborhoods. The two relations never overlap on a class of size two or
/// more, so the union is again a partition.
pub fn tuplet_classes(g: &Graph) -> TupletClasses {
    let n = g.n();
    let mut by_open: BTreeMap<&[Vertex], Vec<Vertex>> = BTreeMap::new();
    let mut by_closed: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for v in 0..n {
        by_open.entry(g.neighbors(v)).or_default().push(v);
        let mut closed = g.neighbors(v).to_vec();
        let at = closed.partition_point(|&w| w < v);
        closed.insert(at, v);
        by_closed.entry(closed).or_default().push(v);
    }

    let mut kind_of: Vec<Option<TupletKind>> = vec![None; n];
    let mut rep = (0..n).collect::<Vec<_>>();
    for (groups, kind) in [
        (
            by_open.into_values().collect::<Vec<_>>(),
            TupletKind::Independent,
        ),
        (by_closed.into_values().collect(), TupletKind::Clique),
    ] {
        for members in groups.into_iter().filter(|m| m.len() >= 2) {
            for &v in &members {
                debug_assert!(kind_of[v].is_none(), "twin relations overlap at {v}");
                kind_of[v] = Some(kind);
                rep[v] = members[0];
            }
        }
    }

    let mut classes: Vec<TupletClass> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    for v in 0..n {
        if rep[v] == v {
            class_of[v] = classes.len();
            classes.push(TupletClass {
                members: vec![v],
                kind: kind_of[v],
            });
        } else {
            let c = class_of[rep[v]];
            class_of[v] = c;
            classes[c].members.push(v);
        }
    }
    TupletClasses { classes, class_of }
}

/// `max(T(G), 1)`: twins need distinct ranks, so this bounds the ID-index
/// from below.
pub fn idi_lower_bound(g: &Graph) -> usize {
    tuplet_classes(g).largest().max(1)
}

/// Per-distance sphere sizes shared by every vertex, when they exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile(pub Option<Vec<usize>>);

impl DistanceProfile {
    /// `(n_1, ..., n_d)` if every vertex sees the same counts.
    pub fn counts(&self) -> Option<&[usize]> {
        self.0.as_deref()
    }

    /// Whether the profile exists.
    pub fn is_present(&self) -> bool {
        self.0.is_some()
    }
}

/// Returns `(n_1, ..., n_d)` when every vertex has exactly `n_i` vertices at
/// distance `i`.
pub fn distance_profile(dm: &DistanceMatrix) -> DistanceProfile {
    let first = dm.sphere_sizes(0);
    let uniform = (1..dm.n()).all(|v| dm.sphere_sizes(v) == first);
    DistanceProfile(uniform.then_some(first))
}

/// Errors for [`multipartite_binomial_bound`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    /// Part sizes must be positive and there must be at least two parts.
    #[error("invalid part multiplicities: {0}")]
    InvalidMultiplicities(&'static str),
}

/// Least `k` with `C(k, i) >= n_i` for every part size `i` that occurs, and
/// `k >= ` the largest part size.
///
/// `multiplicities` maps a part size `i` to the number `n_i` of parts with
/// that size.
pub fn multipartite_binomial_bound(
    multiplicities: &BTreeMap<usize, usize>,
) -> Result<usize, StructureError> {
    let used: Vec<(usize, usize)> = multiplicities
        .iter()
        .filter(|&(_, &count)| count > 0)
        .map(|(&size, &count)| (size, count))
        .collect();
    if used.iter().any(|&(size, _)| size == 0) {
        return Err(StructureError::InvalidMultiplicities("part size 0"));
    }
    if used.iter().map(|&(_, count)| count).sum::<usize>() < 2 {
        return Err(StructureError::InvalidMultiplicities(
            "fewer than two parts",
        ));
    }
    let mut k = used.iter().map(|&(size, _)| size).max().unwrap_or(1);
    while !used
        .iter()
        .all(|&(size, count)| binomial_at_least(k, size, count))
    {
        k += 1;
    }
    Ok(k)
}

/// `C(n, r) >= bound`, without overflow.
fn binomial_at_least(n: usize, r: usize, bound: usize) -> bool {
    if r > n {
        return bound == 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for j in 0..r {
        // exact: acc * (n - j) is divisible by j + 1 at every step
        acc = acc * (n - j) as u128 / (j + 1) as u128;
        if acc >= bound as u128 {
            return true;
        }
    }
    acc >= bound as u128
}
