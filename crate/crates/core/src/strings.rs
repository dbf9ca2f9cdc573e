//! Strings under rank assignments and codes under red-white colorings.
//!
//! Coordinates are indexed `1..=d` by distance; coordinate `i` is stored at
//! index `i - 1`. A vertex never contributes to its own string or code.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::DistanceMatrix;
use crate::Vertex;

/// Errors from building string or code tables.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StringError {
    /// The assignment has no rank for vertex `v`.
    #[error("no rank for vertex {0}")]
    MissingRank(Vertex),
    /// The assignment has more ranks than the graph has vertices.
    #[error("assignment has {found} ranks but the graph has {expected} vertices")]
    ExtraRanks {
        /// Vertex count.
        expected: usize,
        /// Ranks supplied.
        found: usize,
    },
    /// A red-white coloring must have a red vertex.
    #[error("coloring has no red vertex")]
    NoRedVertex,
    /// Coloring refers to a vertex outside the graph or has the wrong length.
    #[error("coloring covers {found} vertices but the graph has {expected}")]
    ColoringSize {
        /// Vertex count.
        expected: usize,
        /// Size of the coloring.
        found: usize,
    },
}

/// Integer ranks, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankAssignment {
    ranks: Vec<BigInt>,
}

impl RankAssignment {
    /// Wraps a rank vector indexed by vertex.
    pub fn new(ranks: Vec<BigInt>) -> Self {
        RankAssignment { ranks }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(ranks: &[i64]) -> Self {
        RankAssignment::new(ranks.iter().map(|&r| BigInt::from(r)).collect())
    }

    /// Rank of `v`.
    pub fn get(&self, v: Vertex) -> &BigInt {
        &self.ranks[v]
    }

    /// All ranks in vertex order.
    pub fn ranks(&self) -> &[BigInt] {
        &self.ranks
    }

    /// Number of vertices covered.
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    /// Whether no vertex is covered.
    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `|f(V)|`.
    pub fn distinct_rank_count(&self) -> usize {
        let mut values: Vec<&BigInt> = self.ranks.iter().collect();
        values.sort();
        values.dedup();
        values.len()
    }
}

/// A string: coordinate `i` sums the ranks at distance `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexString(pub Vec<BigInt>);

impl fmt::Display for VertexString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Strings of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringTable {
    /// Graph diameter, the length of every string.
    pub diameter: usize,
    /// Indexed by vertex.
    pub strings: Vec<VertexString>,
}

/// A set of red vertices; every other vertex is white.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RedWhiteColoring {
    red: Vec<bool>,
}

impl RedWhiteColoring {
    /// Coloring of an `n`-vertex graph with the listed vertices red.
    pub fn new(n: usize, red: &[Vertex]) -> Result<Self, StringError> {
        let mut mask = vec![false; n];
        for &v in red {
            if v >= n {
                return Err(StringError::ColoringSize {
                    expected: n,
                    found: v + 1,
                });
            }
            mask[v] = true;
        }
        RedWhiteColoring::from_mask(mask)
    }

    /// Coloring from a per-vertex red flag.
    pub fn from_mask(red: Vec<bool>) -> Result<Self, StringError> {
        if !red.contains(&true) {
            return Err(StringError::NoRedVertex);
        }
        Ok(RedWhiteColoring { red })
    }

    /// Whether `v` is red.
    pub fn is_red(&self, v: Vertex) -> bool {
        self.red[v]
    }

    /// Per-vertex red flags.
    pub fn mask(&self) -> &[bool] {
        &self.red
    }

    /// Red vertices in increasing order.
    pub fn red_vertices(&self) -> Vec<Vertex> {
        (0..self.red.len()).filter(|&v| self.red[v]).collect()
    }

    /// Number of red vertices.
    pub fn red_count(&self) -> usize {
        self.red.iter().filter(|&&r| r).count()
    }

    /// Number of vertices covered.
    pub fn len(&self) -> usize {
        self.red.len()
    }

    /// Whether the coloring covers no vertex (never true for a valid coloring).
    pub fn is_empty(&self) -> bool {
        self.red.is_empty()
    }
}

/// A code: coordinate `i` counts red vertices at distance `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code(pub Vec<u32>);

/// Codes of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTable {
    /// Graph diameter, the length of every code.
    pub diameter: usize,
    /// Indexed by vertex.
    pub codes: Vec<Code>,
}

/// Outcome of a distinctness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distinctness {
    /// All entries pairwise distinct.
    Distinct,
    /// Lexicographically smallest pair `(u, v)`, `u < v`, with equal entries.
    Collision(Vertex, Vertex),
}

impl Distinctness {
    /// `true` for [`Distinctness::Distinct`].
    pub fn is_distinct(self) -> bool {
        self == Distinctness::Distinct
    }

    /// The colliding pair, if any.
    pub fn collision(self) -> Option<(Vertex, Vertex)> {
        match self {
            Distinctness::Distinct => None,
            Distinctness::Collision(u, v) => Some((u, v)),
        }
    }
}

/// Computes every vertex's string under `f`.
pub fn string_table(dm: &DistanceMatrix, f: &RankAssignment) -> Result<StringTable, StringError> {
    let n = dm.n();
    if f.len() < n {
        return Err(StringError::MissingRank(f.len()));
    }
    if f.len() > n {
        return Err(StringError::ExtraRanks {
            expected: n,
            found: f.len(),
        });
    }
    let d = dm.diameter();
    let strings = (0..n)
        .map(|v| {
            let mut coords = vec![BigInt::zero(); d];
            for (u, &dist) in dm.row(v).iter().enumerate() {
                if dist > 0 {
                    coords[dist as usize - 1] += f.get(u);
                }
            }
            VertexString(coords)
        })
        .collect();
    Ok(StringTable {
        diameter: d,
        strings,
    })
}

/// Computes every vertex's code under the coloring.
pub fn code_table(dm: &DistanceMatrix, c: &RedWhiteColoring) -> Result<CodeTable, StringError> {
    let n = dm.n();
    if c.len() != n {
        return Err(StringError::ColoringSize {
            expected: n,
            found: c.len(),
        });
    }
    let d = dm.diameter();
    let codes = (0..n)
        .map(|v| {
            let mut coords = vec![0u32; d];
            for (u, &dist) in dm.row(v).iter().enumerate() {
                if dist > 0 && c.is_red(u) {
                    coords[dist as usize - 1] += 1;
                }
            }
            Code(coords)
        })
        .collect();
    Ok(CodeTable { diameter: d, codes })
}

/// Whether all strings are pairwise distinct.
pub fn is_distinguishing(table: &StringTable) -> Distinctness {
    first_collision(&table.strings)
}

/// Whether all codes are pairwise distinct, i.e. the coloring is an
/// ID-coloring.
pub fn is_id_coloring(table: &CodeTable) -> Distinctness {
    first_collision(&table.codes)
}

pub(crate) fn first_collision<T: Ord>(items: &[T]) -> Distinctness {
    let mut order: Vec<Vertex> = (0..items.len()).collect();
    // stable: equal items stay in increasing vertex order
    order.sort_by(|&a, &b| items[a].cmp(&items[b]));
    let mut best: Option<(Vertex, Vertex)> = None;
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && items[order[end]] == items[order[start]] {
            end += 1;
        }
        if end - start >= 2 {
            let pair = (order[start], order[start + 1]);
            if best.is_none_or(|b| pair < b) {
                best = Some(pair);
            }
        }
        start = end;
    }
    match best {
        None => Distinctness::Distinct,
        Some((u, v)) => Distinctness::Collision(u, v),
    }
}
