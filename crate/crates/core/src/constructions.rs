//! Closed-form rank assignments for families with known ID-index, plus the
//! rank/coloring transforms relating ID-colorings to two-valued assignments.
//!
//! Every assignment here is a claim; callers verify it with
//! [`crate::strings::is_distinguishing`].

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::families::FamilySpec;
use crate::strings::{RankAssignment, RedWhiteColoring, StringError};

/// Errors from the constructions and transforms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    /// No closed form covers this family member.
    #[error("no closed-form assignment for {0}")]
    SpecMismatch(alloc::string::String),
    /// Affine maps need a nonzero scale.
    #[error("affine scale must be nonzero")]
    ZeroScale,
    /// A rank other than 0 or 1 where a coloring was expected.
    #[error("rank at vertex {0} is neither 0 nor 1")]
    NotZeroOne(usize),
    /// Normalization needs exactly two distinct ranks.
    #[error("expected exactly two distinct ranks, found {0}")]
    NotTwoValued(usize),
    /// The coloring would have no red vertex.
    #[error(transparent)]
    Coloring(#[from] StringError),
}

/// The closed-form assignment for `spec` on its canonical layout.
///
/// * complete multipartite with strictly increasing part sizes: part `i`
///   gets ranks `1..=m_i`;
/// * `K_{n,n}`: first part `1..=n`, second part `2..=n+1`;
/// * symmetric caterpillars: `s_1` gets 2, other spine vertices 1, and the
///   leaves on each `s_i` get `1..=L_i`.
pub fn construct_assignment(spec: &FamilySpec) -> Result<RankAssignment, ConstructionError> {
    let mismatch = || ConstructionError::SpecMismatch(alloc::format!("{spec}"));
    spec.validate().map_err(|_| mismatch())?;
    let ranks: Vec<u64> = match spec {
        FamilySpec::Multipartite(sizes) if sizes.len() == 2 && sizes[0] == sizes[1] => {
            let n = sizes[0] as u64;
            (1..=n).chain(2..=n + 1).collect()
        }
        FamilySpec::Multipartite(sizes) if sizes.windows(2).all(|w| w[0] < w[1]) => {
            sizes.iter().flat_map(|&m| 1..=m as u64).collect()
        }
        FamilySpec::Caterpillar(leaves) if is_symmetric(leaves) => {
            let spine = (0..leaves.len()).map(|i| if i == 0 { 2 } else { 1 });
            let attached = leaves.iter().flat_map(|&l| 1..=l as u64);
            spine.chain(attached).collect()
        }
        _ => return Err(mismatch()),
    };
    Ok(RankAssignment::new(
        ranks.into_iter().map(BigInt::from).collect(),
    ))
}

/// Vertex `j` gets `2^(j+1)`; distinguishing on every connected graph.
pub fn universal_assignment(n: usize) -> RankAssignment {
    let two = BigInt::from(2u8);
    RankAssignment::new((0..n).map(|j| Pow::pow(&two, (j + 1) as u32)).collect())
}

/// `L_j = L_{n+1-j}` for every `j`.
pub fn is_symmetric(leaves: &[usize]) -> bool {
    leaves.iter().eq(leaves.iter().rev())
}

/// `v -> scale * f(v) + shift`.
pub fn affine_transform(
    f: &RankAssignment,
    scale: &BigInt,
    shift: &BigInt,
) -> Result<RankAssignment, ConstructionError> {
    if scale.is_zero() {
        return Err(ConstructionError::ZeroScale);
    }
    Ok(RankAssignment::new(
        f.ranks().iter().map(|r| scale * r + shift).collect(),
    ))
}

/// Red vertices get rank 1, white vertices rank 0.
pub fn coloring_to_ranks(c: &RedWhiteColoring) -> RankAssignment {
    RankAssignment::new(
        c.mask()
            .iter()
            .map(|&red| if red { BigInt::one() } else { BigInt::zero() })
            .collect(),
    )
}

/// Vertices of rank 1 become red, rank 0 white.
pub fn ranks_to_coloring(f: &RankAssignment) -> Result<RedWhiteColoring, ConstructionError> {
    let mut mask = Vec::with_capacity(f.len());
    for (v, r) in f.ranks().iter().enumerate() {
        if r.is_one() {
            mask.push(true);
        } else if r.is_zero() {
            mask.push(false);
        } else {
            return Err(ConstructionError::NotZeroOne(v));
        }
    }
    Ok(RedWhiteColoring::from_mask(mask)?)
}

/// Applies the affine map sending the smaller of two rank values to 0 and
/// the larger to 1, i.e. `scale = 1 / (r_2 - r_1)` and
/// `shift = -r_1 / (r_2 - r_1)`.
pub fn normalize_two_valued(f: &RankAssignment) -> Result<RankAssignment, ConstructionError> {
    let count = f.distinct_rank_count();
    if count != 2 {
        return Err(ConstructionError::NotTwoValued(count));
    }
    let low = f.ranks().iter().min().expect("two values").clone();
    let high = f.ranks().iter().max().expect("two values").clone();
    let gap = &high - &low;
    // (r - r_1) / (r_2 - r_1) is exactly 0 or 1 for the two values present
    Ok(RankAssignment::new(
        f.ranks().iter().map(|r| (r - &low) / &gap).collect(),
    ))
}

/// The proven ID-index of `spec`, or `None` when no closed form applies.
pub fn expected_id_index(spec: &FamilySpec) -> Option<usize> {
    if spec.validate().is_err() || spec.vertex_count() < 2 {
        return None;
    }
    match spec {
        FamilySpec::Path(_) => Some(2),
        FamilySpec::Cycle(n) => Some(if *n <= 5 { 3 } else { 2 }),
        FamilySpec::Grid(m, n) => Some(if (*m, *n) == (2, 2) { 3 } else { 2 }),
        FamilySpec::Prism(n) => Some(if *n <= 5 { 3 } else { 2 }),
        FamilySpec::Complete(n) => Some(*n),
        FamilySpec::Petersen => Some(3),
        FamilySpec::Multipartite(sizes) => {
            let mut sorted = sizes.clone();
            sorted.sort_unstable();
            let largest = sorted[sorted.len() - 1];
            match sorted.as_slice() {
                [m, n] if m == n => Some(n + 1),
                _ if sorted.windows(2).all(|w| w[0] < w[1]) => Some(largest),
                _ => None,
            }
        }
        FamilySpec::Caterpillar(leaves) if is_symmetric(leaves) => {
            leaves.iter().copied().max().map(|l| l.max(2))
        }
        FamilySpec::Caterpillar(_) | FamilySpec::Product(..) => None,
    }
}
