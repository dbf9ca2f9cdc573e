//! Simple undirected graphs, the edge-list text format, and BFS distances.

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Vertex;

/// Errors raised while building, parsing or measuring a graph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    /// A graph needs at least one vertex.
    #[error("graph must have at least one vertex")]
    NoVertices,
    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    /// The same unordered pair appears twice.
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    /// An endpoint is not below the vertex count.
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange {
        /// Offending endpoint.
        vertex: Vertex,
        /// Declared vertex count.
        n: usize,
    },
    /// Malformed edge-list line (1-based line number).
    #[error("parse error on line {line}: {message}")]
    Parse {
        /// 1-based line number.
        line: usize,
        /// What went wrong.
        message: String,
    },
    /// The edge list contained neither edges nor a vertex-count header.
    #[error("empty input")]
    EmptyInput,
    /// Some pair of vertices has no connecting path.
    #[error("graph is disconnected: no path between {0} and {1}")]
    Disconnected(Vertex, Vertex),
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a validated graph. Self-loops and repeated edges (in either
    /// orientation) are rejected rather than normalized.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds a graph whose edge list is known to be valid.
    ///
    /// # Panics
    /// If the edges violate the simple-graph invariants.
    pub(crate) fn from_valid_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        Graph::new(n, edges).expect("generator produced an invalid edge list")
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Whether `u` and `v` are adjacent.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Parses the edge-list text format.
///
/// An optional first line `# n=<count>` fixes the vertex count; otherwise it
/// is one more than the largest id mentioned. Every other line is either
/// blank, a `#` comment, or `<u> <v>`.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared_n = None;
    let mut edges = Vec::new();
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if !seen_content && declared_n.is_none() {
                if let Some(count) = parse_header(comment) {
                    declared_n = Some(count.map_err(|message| GraphError::Parse {
                        line: line_no,
                        message,
                    })?);
                }
            }
            seen_content = true;
            continue;
        }
        seen_content = true;

        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(GraphError::Parse {
                line: line_no,
                message: "expected exactly two vertex ids".to_string(),
            });
        };
        let parse_id = |tok: &str| {
            tok.parse::<Vertex>().map_err(|_| GraphError::Parse {
                line: line_no,
                message: alloc::format!("invalid vertex id {tok:?}"),
            })
        };
        edges.push((parse_id(a)?, parse_id(b)?));
    }

    let n = match declared_n {
        Some(n) => n,
        None => match edges.iter().map(|&(u, v)| u.max(v)).max() {
            Some(max_id) => max_id + 1,
            None => return Err(GraphError::EmptyInput),
        },
    };
    Graph::new(n, &edges)
}

/// Recognizes the `n=<count>` header body. `None` means an ordinary comment.
fn parse_header(comment: &str) -> Option<Result<usize, String>> {
    let value = comment.trim().strip_prefix("n=")?;
    Some(
        value
            .trim()
            .parse::<usize>()
            .map_err(|_| alloc::format!("invalid vertex count {value:?}")),
    )
}

/// All-pairs hop distances of a connected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest distance; 0 only for the one-vertex graph.
    pub fn diameter(&self) -> usize {
        self.diameter as usize
    }

    /// Distance between `u` and `v`.
    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// Distances from `v` to every vertex.
    #[inline]
    pub fn row(&self, v: Vertex) -> &[u32] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    /// Number of vertices at distance exactly `i` from `v`, for `i = 1..=d`,
    /// stored at index `i - 1`.
    pub fn sphere_sizes(&self, v: Vertex) -> Vec<usize> {
        let mut counts = vec![0; self.diameter()];
        for &d in self.row(v) {
            if d > 0 {
                counts[d as usize - 1] += 1;
            }
        }
        counts
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = (0..self.n).map(|v| self.row(v)).collect();
        f.debug_struct("DistanceMatrix")
            .field("diameter", &self.diameter)
            .field("dist", &rows)
            .finish()
    }
}

/// BFS from every vertex. Fails with [`GraphError::Disconnected`] naming the
/// lexicographically first unreachable pair.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.n();
    let mut dist = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for source in 0..n {
        let row = &mut dist[source * n..(source + 1) * n];
        row[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &w in g.neighbors(u) {
                if row[w] == u32::MAX {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
        if let Some(target) = row.iter().position(|&d| d == u32::MAX) {
            return Err(GraphError::Disconnected(source, target));
        }
    }
    let diameter = dist.iter().copied().max().unwrap_or(0);
    Ok(DistanceMatrix { n, dist, diameter })
}
