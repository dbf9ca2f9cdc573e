//! Canonical generators for the graph families with known ID-indices.
//!
//! Numbering is fixed so that certificates and constructions are stable:
//!
//! * paths and cycles: consecutive around the path/cycle;
//! * complete multipartite: parts in the given order, members consecutive;
//! * Petersen: outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram;
//! * caterpillars: spine `s_1..s_n` first, then leaves grouped by spine;
//! * Cartesian products `G □ H`: vertex `(g, h)` is `h * |G| + g`. Grids
//!   `m x n` are `P_m □ P_n`, prisms are `C_n □ P_2`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::Graph;
use crate::Vertex;

/// Errors from parsing or validating a [`FamilySpec`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    /// The spec string does not follow the grammar.
    #[error("cannot parse family spec {input:?}: {reason}")]
    Parse {
        /// Text that failed.
        input: String,
        /// What was expected.
        reason: String,
    },
    /// Parameters violate the family's constraints.
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
}

/// A named graph family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Path `P_n`, `n >= 1`.
    Path(usize),
    /// Cycle `C_n`, `n >= 3`.
    Cycle(usize),
    /// Complete graph `K_n`, `n >= 1`.
    Complete(usize),
    /// Complete multipartite graph with the given part sizes (at least two
    /// parts, all nonempty, any order).
    Multipartite(Vec<usize>),
    /// Grid `P_m □ P_n`.
    Grid(usize, usize),
    /// Prism `Y_n = C_n □ P_2`, `n >= 3`.
    Prism(usize),
    /// The Petersen graph.
    Petersen,
    /// Caterpillar with `L_i` leaves on spine vertex `s_i`.
    Caterpillar(Vec<usize>),
    /// Cartesian product of two family members.
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

/// Role of one vertex in a generated family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    /// Position along a path.
    PathPosition(usize),
    /// Position around a cycle.
    CyclePosition(usize),
    /// Member of a complete graph.
    CliqueMember(usize),
    /// `index`-th member of part `part` in a complete multipartite graph.
    Part {
        /// Part index, in spec order.
        part: usize,
        /// Index within the part.
        index: usize,
    },
    /// Petersen outer cycle vertex.
    Outer(usize),
    /// Petersen inner pentagram vertex.
    Inner(usize),
    /// Spine vertex `s_{i+1}` (zero-based index `i`).
    Spine(usize),
    /// `index`-th leaf attached to spine vertex `spine` (zero-based).
    Leaf {
        /// Zero-based spine index.
        spine: usize,
        /// Zero-based index among that spine vertex's leaves.
        index: usize,
    },
    /// Vertex `(left, right)` of a Cartesian product.
    Product {
        /// Index in the left factor.
        left: usize,
        /// Index in the right factor (the copy index).
        right: usize,
    },
}

/// One role per vertex, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLayout {
    roles: Vec<VertexRole>,
}

impl VertexLayout {
    /// Role of `v`.
    pub fn role(&self, v: Vertex) -> VertexRole {
        self.roles[v]
    }

    /// All roles in vertex order.
    pub fn roles(&self) -> &[VertexRole] {
        &self.roles
    }

    /// Vertex carrying `role`, if any.
    pub fn find(&self, role: VertexRole) -> Option<Vertex> {
        self.roles.iter().position(|&r| r == role)
    }
}

impl FamilySpec {
    /// Checks the family's parameter constraints.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let fail = |msg: &str| Err(FamilyError::InvalidSpec(msg.to_string()));
        match self {
            FamilySpec::Path(n) if *n < 1 => fail("path needs n >= 1"),
            FamilySpec::Cycle(n) if *n < 3 => fail("cycle needs n >= 3"),
            FamilySpec::Complete(n) if *n < 1 => fail("complete graph needs n >= 1"),
            FamilySpec::Multipartite(sizes) if sizes.len() < 2 => {
                fail("multipartite graph needs at least two parts")
            }
            FamilySpec::Multipartite(sizes) if sizes.contains(&0) => {
                fail("multipartite part sizes must be >= 1")
            }
            FamilySpec::Grid(m, n) if *m < 1 || *n < 1 => fail("grid needs m, n >= 1"),
            FamilySpec::Prism(n) if *n < 3 => fail("prism needs n >= 3"),
            FamilySpec::Caterpillar(leaves) if leaves.is_empty() => {
                fail("caterpillar needs at least one spine vertex")
            }
            FamilySpec::Caterpillar(leaves) if leaves[0] == 0 => fail("caterpillar needs L_1 >= 1"),
            FamilySpec::Caterpillar(leaves) if leaves[leaves.len() - 1] == 0 => {
                fail("caterpillar needs L_n >= 1")
            }
            FamilySpec::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Vertex count of the generated graph (no validation).
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::Multipartite(sizes) => sizes.iter().sum(),
            FamilySpec::Grid(m, n) => m * n,
            FamilySpec::Prism(n) => 2 * n,
            FamilySpec::Petersen => 10,
            FamilySpec::Caterpillar(leaves) => leaves.len() + leaves.iter().sum::<usize>(),
            FamilySpec::Product(a, b) => a.vertex_count() * b.vertex_count(),
        }
    }
}

/// Generates the canonical graph and layout for `spec`.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, VertexLayout), FamilyError> {
    spec.validate()?;
    Ok(build(spec))
}

fn build(spec: &FamilySpec) -> (Graph, VertexLayout) {
    let (n, edges, roles): (usize, Vec<(Vertex, Vertex)>, Vec<VertexRole>) = match spec {
        FamilySpec::Path(n) => (
            *n,
            (1..*n).map(|i| (i - 1, i)).collect(),
            (0..*n).map(VertexRole::PathPosition).collect(),
        ),
        FamilySpec::Cycle(n) => (
            *n,
            (0..*n).map(|i| (i, (i + 1) % n)).collect(),
            (0..*n).map(VertexRole::CyclePosition).collect(),
        ),
        FamilySpec::Complete(n) => (
            *n,
            (0..*n)
                .flat_map(|u| (u + 1..*n).map(move |v| (u, v)))
                .collect(),
            (0..*n).map(VertexRole::CliqueMember).collect(),
        ),
        FamilySpec::Multipartite(sizes) => {
            let mut roles = Vec::new();
            for (part, &size) in sizes.iter().enumerate() {
                roles.extend((0..size).map(|index| VertexRole::Part { part, index }));
            }
            let part_of = |v: Vertex| match roles[v] {
                VertexRole::Part { part, .. } => part,
                _ => unreachable!(),
            };
            let n = roles.len();
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| part_of(u) != part_of(v))
                .collect();
            (n, edges, roles)
        }
        FamilySpec::Grid(m, n) => {
            return build(&FamilySpec::Product(
                Box::new(FamilySpec::Path(*m)),
                Box::new(FamilySpec::Path(*n)),
            ))
        }
        FamilySpec::Prism(n) => {
            return build(&FamilySpec::Product(
                Box::new(FamilySpec::Cycle(*n)),
                Box::new(FamilySpec::Path(2)),
            ))
        }
        FamilySpec::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            let roles = (0..5)
                .map(VertexRole::Outer)
                .chain((0..5).map(VertexRole::Inner))
                .collect();
            (10, edges, roles)
        }
        FamilySpec::Caterpillar(leaves) => {
            let spine = leaves.len();
            let mut roles: Vec<_> = (0..spine).map(VertexRole::Spine).collect();
            let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
            for (s, &count) in leaves.iter().enumerate() {
                for index in 0..count {
                    edges.push((s, roles.len()));
                    roles.push(VertexRole::Leaf { spine: s, index });
                }
            }
            (roles.len(), edges, roles)
        }
        FamilySpec::Product(a, b) => {
            let (ga, _) = build(a);
            let (gb, _) = build(b);
            let (na, nb) = (ga.n(), gb.n());
            let id = |g: Vertex, h: Vertex| h * na + g;
            let mut edges = Vec::new();
            for h in 0..nb {
                edges.extend(ga.edges().map(|(g1, g2)| (id(g1, h), id(g2, h))));
            }
            for g in 0..na {
                edges.extend(gb.edges().map(|(h1, h2)| (id(g, h1), id(g, h2))));
            }
            let roles = (0..na * nb)
                .map(|v| VertexRole::Product {
                    left: v % na,
                    right: v / na,
                })
                .collect();
            (na * nb, edges, roles)
        }
    };
    (Graph::from_valid_edges(n, &edges), VertexLayout { roles })
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, xs: &[usize]| {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        };
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Multipartite(sizes) => {
                f.write_str("multipartite:")?;
                join(f, sizes)
            }
            FamilySpec::Grid(m, n) => write!(f, "grid:{m}x{n}"),
            FamilySpec::Prism(n) => write!(f, "prism:{n}"),
            FamilySpec::Petersen => f.write_str("petersen"),
            FamilySpec::Caterpillar(leaves) => {
                f.write_str("caterpillar:")?;
                join(f, leaves)
            }
            FamilySpec::Product(a, b) => write!(f, "product:({a})x({b})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let input = s.trim();
        let err = |reason: &str| FamilyError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let (kind, args) = match input.split_once(':') {
            Some((k, a)) => (k.trim(), Some(a.trim())),
            None => (input, None),
        };
        let number = |text: &str| {
            text.trim()
                .parse::<usize>()
                .map_err(|_| err("expected a nonnegative integer"))
        };
        let list = |text: &str| text.split(',').map(number).collect::<Result<Vec<_>, _>>();

        let spec = match (kind, args) {
            ("petersen", None) => FamilySpec::Petersen,
            ("path", Some(a)) => FamilySpec::Path(number(a)?),
            ("cycle", Some(a)) => FamilySpec::Cycle(number(a)?),
            ("complete", Some(a)) => FamilySpec::Complete(number(a)?),
            ("prism", Some(a)) => FamilySpec::Prism(number(a)?),
            ("multipartite", Some(a)) => FamilySpec::Multipartite(list(a)?),
            ("caterpillar", Some(a)) => FamilySpec::Caterpillar(list(a)?),
            ("grid", Some(a)) => {
                let (m, n) = a
                    .split_once('x')
                    .ok_or_else(|| err("expected grid:<m>x<n>"))?;
                FamilySpec::Grid(number(m)?, number(n)?)
            }
            ("product", Some(a)) => {
                let (left, rest) =
                    split_parenthesized(a).ok_or_else(|| err("expected (<spec>)x(<spec>)"))?;
                let rest = rest
                    .trim_start()
                    .strip_prefix('x')
                    .ok_or_else(|| err("expected 'x' between product factors"))?;
                let (right, tail) =
                    split_parenthesized(rest).ok_or_else(|| err("expected (<spec>)x(<spec>)"))?;
                if !tail.trim().is_empty() {
                    return Err(err("trailing text after product"));
                }
                FamilySpec::Product(Box::new(left.parse()?), Box::new(right.parse()?))
            }
            _ => return Err(err("unknown family or missing parameters")),
        };
        Ok(spec)
    }
}

/// Splits `"(inner)rest"` at the matching close parenthesis.
fn split_parenthesized(text: &str) -> Option<(&str, &str)> {
    let text = text.trim_start();
    if !text.starts_with('(') {
        return None;
    }
    let mut depth = 0usize;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some((&text[1..i], &text[i + 1..]));
                }
            }
            _ => {}
        }
    }
    None
}
