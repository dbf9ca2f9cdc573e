//! JSON documents read and written by the CLI.
//!
//! Ranks and string coordinates can exceed 64 bits, so they are written as
//! decimal strings. Counts, vertex ids and flags are plain JSON values.

use std::str::FromStr;

use idindex_core::{
    CodeTable, Distinctness, IdIndexCertificate, IdNumberResult, InfeasibilityWitness,
    RankAssignment, RedWhiteColoring, StringTable, TupletClasses, TupletKind,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Problems with an input document.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    /// Not JSON at all.
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// JSON of the wrong shape.
    #[error("{0}")]
    Shape(String),
}

fn shape(msg: impl Into<String>) -> FormatError {
    FormatError::Shape(msg.into())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types always serialize");
    out.push('\n');
    out
}

fn decimal(x: &BigInt) -> String {
    x.to_string()
}

fn decimals(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(decimal).collect()
}

/// `{"ranks": ["1", "2", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RanksDoc {
    /// One decimal string per vertex.
    pub ranks: Vec<String>,
}

impl RanksDoc {
    /// Serializable view of `f`.
    pub fn new(f: &RankAssignment) -> Self {
        RanksDoc {
            ranks: decimals(f.ranks()),
        }
    }
}

/// Parses `{"ranks": [...]}`. Entries may be JSON integers or decimal
/// strings of any size.
pub fn parse_ranks(text: &str) -> Result<RankAssignment, FormatError> {
    let doc: Value = serde_json::from_str(text)?;
    let items = doc
        .get("ranks")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("expected an object with a \"ranks\" array"))?;
    let ranks = items
        .iter()
        .enumerate()
        .map(|(v, item)| {
            let text = match item {
                Value::String(s) => s.trim().to_owned(),
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                _ => return Err(shape(format!("rank of vertex {v} is not an integer"))),
            };
            BigInt::from_str(&text)
                .map_err(|_| shape(format!("rank of vertex {v} is not an integer: {text:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RankAssignment::new(ranks))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringIn {
    red: Vec<usize>,
}

/// Parses `{"red": [v, ...]}` for a graph with `n` vertices.
pub fn parse_coloring(text: &str, n: usize) -> Result<RedWhiteColoring, FormatError> {
    let doc: ColoringIn = serde_json::from_str(text)?;
    if let Some(&v) = doc.red.iter().find(|&&v| v >= n) {
        return Err(shape(format!(
            "red vertex {v} out of range for {n} vertices"
        )));
    }
    RedWhiteColoring::new(n, &doc.red).map_err(|e| shape(e.to_string()))
}

/// Certificate document for `compute`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateDoc {
    /// Distinct ranks used.
    pub k: usize,
    /// Class id per vertex.
    pub partition: Vec<u32>,
    /// Decimal ranks per vertex.
    pub ranks: Vec<String>,
    /// Decimal string coordinates per vertex.
    pub strings: Vec<Vec<String>>,
    /// `max(T(G), 1)`.
    pub lower_bound: usize,
    /// Whether `k - 1` classes were ruled out by exhaustive search.
    pub exhausted_k_minus_1: bool,
    /// Partition-search nodes.
    pub nodes_searched: u64,
    /// `trivial`, `lower_bound`, `exhausted` or `unproven`.
    pub witness: &'static str,
    /// Set for the one-vertex graph.
    pub by_convention: bool,
}

impl CertificateDoc {
    /// Serializable view of `cert`.
    pub fn new(cert: &IdIndexCertificate) -> Self {
        CertificateDoc {
            k: cert.k,
            partition: cert.partition.assignment().to_vec(),
            ranks: decimals(cert.ranks.ranks()),
            strings: string_rows(&cert.strings),
            lower_bound: cert.lower_bound,
            exhausted_k_minus_1: cert.exhausted_k_minus_1(),
            nodes_searched: cert.nodes_searched,
            witness: match cert.witness {
                InfeasibilityWitness::Trivial => "trivial",
                InfeasibilityWitness::LowerBound(_) => "lower_bound",
                InfeasibilityWitness::Exhausted { .. } => "exhausted",
                InfeasibilityWitness::Unproven => "unproven",
            },
            by_convention: cert.by_convention,
        }
    }
}

fn string_rows(table: &StringTable) -> Vec<Vec<String>> {
    table.strings.iter().map(|s| decimals(&s.0)).collect()
}

/// Result document for `compute --id-number`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdNumberDoc {
    /// Whether some coloring has distinct codes.
    pub is_id_graph: bool,
    /// Least red count, if an ID-graph.
    pub id_number: Option<usize>,
    /// Red vertices of a witness coloring.
    pub red: Option<Vec<usize>>,
}

impl IdNumberDoc {
    /// Serializable view of `r`.
    pub fn new(r: &IdNumberResult) -> Self {
        IdNumberDoc {
            is_id_graph: r.is_id_graph,
            id_number: r.id_number,
            red: r.witness.as_ref().map(RedWhiteColoring::red_vertices),
        }
    }
}

/// `verify` output for a rank assignment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringReport {
    /// Graph diameter, the length of every string.
    pub diameter: usize,
    /// Decimal ranks per vertex.
    pub ranks: Vec<String>,
    /// Decimal string coordinates per vertex.
    pub strings: Vec<Vec<String>>,
    /// Number of distinct rank values.
    pub distinct_ranks: usize,
    /// Whether all strings differ.
    pub distinguishing: bool,
    /// Lexicographically least colliding pair, if any.
    pub collision: Option<[usize; 2]>,
}

impl StringReport {
    /// Builds the report for `f` and its strings.
    pub fn new(f: &RankAssignment, table: &StringTable, verdict: Distinctness) -> Self {
        StringReport {
            diameter: table.diameter,
            ranks: decimals(f.ranks()),
            strings: string_rows(table),
            distinct_ranks: f.distinct_rank_count(),
            distinguishing: verdict.is_distinct(),
            collision: verdict.collision().map(|(u, v)| [u, v]),
        }
    }
}

/// `verify` output for a red-white coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    /// Graph diameter, the length of every code.
    pub diameter: usize,
    /// Red vertices.
    pub red: Vec<usize>,
    /// Red counts per distance, per vertex.
    pub codes: Vec<Vec<u32>>,
    /// Whether all codes differ.
    pub id_coloring: bool,
    /// Lexicographically least colliding pair, if any.
    pub collision: Option<[usize; 2]>,
}

impl CodeReport {
    /// Builds the report for `c` and its codes.
    pub fn new(c: &RedWhiteColoring, table: &CodeTable, verdict: Distinctness) -> Self {
        CodeReport {
            diameter: table.diameter,
            red: c.red_vertices(),
            codes: table.codes.iter().map(|c| c.0.clone()).collect(),
            id_coloring: verdict.is_distinct(),
            collision: verdict.collision().map(|(u, v)| [u, v]),
        }
    }
}

/// One twin class in `analyze` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDoc {
    /// Members in increasing order.
    pub members: Vec<usize>,
    /// `independent`, `clique`, or null for singletons.
    pub kind: Option<&'static str>,
}

/// Twin classes with at least two members.
pub fn class_docs(t: &TupletClasses) -> Vec<ClassDoc> {
    t.classes()
        .iter()
        .filter(|c| c.members.len() >= 2)
        .map(|c| ClassDoc {
            members: c.members.clone(),
            kind: c.kind.map(|k| match k {
                TupletKind::Independent => "independent",
                TupletKind::Clique => "clique",
            }),
        })
        .collect()
}

/// `analyze` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisDoc {
    /// Vertex count.
    pub n: usize,
    /// Edge count.
    pub edges: usize,
    /// Diameter.
    pub diameter: usize,
    /// Largest twin class size, 1 without twins.
    #[serde(rename = "T")]
    pub t: usize,
    /// `max(T(G), 1)`.
    pub lower_bound: usize,
    /// Least `k` with enough binomial room for the parts, for complete
    /// multipartite families.
    pub multipartite_bound: Option<usize>,
    /// Twin classes of size at least two.
    pub tuplets: Vec<ClassDoc>,
    /// Shared sphere sizes, if every vertex has the same ones.
    pub distance_profile: Option<Vec<usize>>,
    /// Closed-form ID-index for the family member, if known.
    pub expected_id_index: Option<usize>,
}
