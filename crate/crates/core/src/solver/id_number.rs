//! Exact ID-number by exhaustive search over red sets of increasing size.

use alloc::vec;
use alloc::vec::Vec;

use super::{Limits, SolveError};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::strings::RedWhiteColoring;
use crate::Vertex;

/// Whether the graph is an ID-graph, and if so its ID-number with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdNumberResult {
    /// Some coloring gives every vertex a distinct code.
    pub is_id_graph: bool,
    /// Least red count over ID-colorings.
    pub id_number: Option<usize>,
    /// An ID-coloring with `id_number` red vertices, the first in
    /// lexicographic order of red sets.
    pub witness: Option<RedWhiteColoring>,
}

/// Tries every nonempty red set, smallest first. The first ID-coloring found
/// has the minimum number of red vertices.
pub fn id_number_exact(g: &Graph, limits: Limits) -> Result<IdNumberResult, SolveError> {
    let dm = all_pairs_distances(g)?;
    let n = g.n();
    if n > limits.max_id_number_vertices {
        return Err(SolveError::BudgetExceeded {
            lower: 1,
            upper: None,
            nodes: 0,
        });
    }
    let mut codes = CodeBuffer::new(&dm);
    for size in 1..=n {
        let mut red: Vec<Vertex> = (0..size).collect();
        loop {
            if codes.identifies(&red) {
                let witness = RedWhiteColoring::new(n, &red).expect("red set is nonempty");
                return Ok(IdNumberResult {
                    is_id_graph: true,
                    id_number: Some(size),
                    witness: Some(witness),
                });
            }
            if !next_combination(&mut red, n) {
                break;
            }
        }
    }
    Ok(IdNumberResult {
        is_id_graph: false,
        id_number: None,
        witness: None,
    })
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

struct CodeBuffer<'a> {
    dm: &'a DistanceMatrix,
    d: usize,
    flat: Vec<u16>,
    order: Vec<usize>,
}

impl<'a> CodeBuffer<'a> {
    fn new(dm: &'a DistanceMatrix) -> Self {
        let n = dm.n();
        CodeBuffer {
            dm,
            d: dm.diameter(),
            flat: vec![0; n * dm.diameter()],
            order: (0..n).collect(),
        }
    }

    fn identifies(&mut self, red: &[Vertex]) -> bool {
        let (n, d) = (self.dm.n(), self.d);
        self.flat.iter_mut().for_each(|x| *x = 0);
        for v in 0..n {
            let row = self.dm.row(v);
            for &r in red {
                let dist = row[r] as usize;
                if dist > 0 {
                    self.flat[v * d + dist - 1] += 1;
                }
            }
        }
        let flat = &self.flat;
        let code = |v: usize| &flat[v * d..(v + 1) * d];
        self.order.sort_unstable_by(|&a, &b| code(a).cmp(code(b)));
        self.order.windows(2).all(|w| code(w[0]) != code(w[1]))
    }
}
