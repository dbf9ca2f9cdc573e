//! Parameter sweeps comparing the exact solver with known values.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use idindex_core::{
    all_pairs_distances, expected_id_index, generate, geometric_pool, id_index_exact,
    id_index_oracle, idi_lower_bound, tuplet_classes, FamilySpec, Graph, Limits, SolveError,
};
use serde::Serialize;

use crate::parallel::id_index_parallel;
use crate::random::random_corpus;

/// Largest random graph checked against the brute-force oracle.
pub const ORACLE_MAX_N: usize = 8;

/// Sweep configuration errors.
#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    /// Bad family name, range or random spec.
    #[error("{0}")]
    Usage(String),
    /// A solver result failed verification.
    #[error(transparent)]
    Solver(SolveError),
}

/// Families that can be swept over one integer parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepFamily {
    /// `path:x`.
    Path,
    /// `cycle:x`.
    Cycle,
    /// `complete:x`.
    Complete,
    /// `prism:x`.
    Prism,
    /// `multipartite:x,x`.
    Bipartite,
    /// `grid:{m}x{x}`.
    Grid(usize),
}

impl SweepFamily {
    /// Family member for parameter `x`.
    pub fn member(self, x: usize) -> FamilySpec {
        match self {
            SweepFamily::Path => FamilySpec::Path(x),
            SweepFamily::Cycle => FamilySpec::Cycle(x),
            SweepFamily::Complete => FamilySpec::Complete(x),
            SweepFamily::Prism => FamilySpec::Prism(x),
            SweepFamily::Bipartite => FamilySpec::Multipartite(vec![x, x]),
            SweepFamily::Grid(m) => FamilySpec::Grid(m, x),
        }
    }

    fn name(self) -> &'static str {
        match self {
            SweepFamily::Path => "path",
            SweepFamily::Cycle => "cycle",
            SweepFamily::Complete => "complete",
            SweepFamily::Prism => "prism",
            SweepFamily::Bipartite => "bipartite",
            SweepFamily::Grid(_) => "grid",
        }
    }

    fn params(self, x: usize) -> String {
        match self {
            SweepFamily::Grid(m) => format!("{m}x{x}"),
            _ => x.to_string(),
        }
    }
}

impl FromStr for SweepFamily {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, SweepError> {
        Ok(match s {
            "path" => SweepFamily::Path,
            "cycle" => SweepFamily::Cycle,
            "complete" => SweepFamily::Complete,
            "prism" => SweepFamily::Prism,
            "bipartite" => SweepFamily::Bipartite,
            _ => match s.strip_prefix("grid:").map(str::parse::<usize>) {
                Some(Ok(m)) if m >= 1 => SweepFamily::Grid(m),
                _ => {
                    return Err(SweepError::Usage(format!(
                        "cannot sweep {s:?}; expected path, cycle, complete, prism, bipartite or grid:<m>"
                    )))
                }
            },
        })
    }
}

/// `n=<lo>..<hi>,count=<c>,seed=<s>[,p=<prob>]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomSpec {
    /// Vertex counts, drawn uniformly.
    pub sizes: RangeInclusive<usize>,
    /// Number of graphs.
    pub count: usize,
    /// RNG seed.
    pub seed: u64,
    /// Edge probability.
    pub p: f64,
}

impl FromStr for RandomSpec {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, SweepError> {
        let bad = |why: &str| SweepError::Usage(format!("bad random spec {s:?}: {why}"));
        let (mut sizes, mut count, mut seed, mut p) = (None, None, None, 0.5);
        for field in s.split(',') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            match key.trim() {
                "n" => {
                    let value = value.trim();
                    let (lo, hi) = value.split_once("..").unwrap_or((value, value));
                    let lo: usize = lo.parse().map_err(|_| bad("n"))?;
                    let hi: usize = hi.parse().map_err(|_| bad("n"))?;
                    if lo == 0 || lo > hi {
                        return Err(bad("n range must be nonempty and positive"));
                    }
                    sizes = Some(lo..=hi);
                }
                "count" => count = Some(value.trim().parse().map_err(|_| bad("count"))?),
                "seed" => seed = Some(value.trim().parse().map_err(|_| bad("seed"))?),
                "p" => {
                    p = value.trim().parse().map_err(|_| bad("p"))?;
                    if !(p > 0.0 && p <= 1.0) {
                        return Err(bad("p must lie in (0, 1]"));
                    }
                }
                _ => return Err(bad("unknown key")),
            }
        }
        Ok(RandomSpec {
            sizes: sizes.ok_or_else(|| bad("missing n"))?,
            count: count.ok_or_else(|| bad("missing count"))?,
            seed: seed.unwrap_or(0),
            p,
        })
    }
}

/// What to sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepSource {
    /// A family over an inclusive parameter range.
    Family {
        /// Which family.
        family: SweepFamily,
        /// First parameter.
        from: usize,
        /// Last parameter.
        to: usize,
    },
    /// Seeded random connected graphs, checked against the oracle.
    Random(RandomSpec),
}

/// Full sweep settings.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    /// Graphs to solve.
    pub source: SweepSource,
    /// Solver limits per graph.
    pub limits: Limits,
    /// Use the multi-threaded search.
    pub parallel: bool,
    /// Fill the `millis` column.
    pub timing: bool,
}

/// Comparison outcome for one row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Solver agrees with the expected value.
    Yes,
    /// Solver disagrees.
    No,
    /// No expected value to compare with.
    Na,
    /// The solver ran out of budget.
    Budget,
}

impl Verdict {
    fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Na => "na",
            Verdict::Budget => "budget",
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    /// Family name, or `random`.
    pub family: String,
    /// Family parameter, or the index within the random corpus.
    pub params: String,
    /// Vertex count.
    pub n: usize,
    /// Diameter.
    pub diameter: usize,
    /// Largest twin class.
    #[serde(rename = "T")]
    pub t: usize,
    /// `max(T, 1)`.
    pub lower_bound: usize,
    /// Solver result, absent on budget overrun.
    pub idi: Option<usize>,
    /// Closed-form value, or the oracle value for random graphs.
    pub expected: Option<usize>,
    /// Comparison.
    #[serde(rename = "match")]
    pub verdict: Verdict,
    /// Search nodes spent.
    pub nodes_searched: u64,
    /// Wall time, only with timing enabled.
    pub millis: Option<u128>,
}

/// Header comment plus rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    /// Replay information, such as the random seed.
    pub source: String,
    /// One row per graph.
    pub rows: Vec<SweepRow>,
}

const COLUMNS: &str =
    "family,params,n,diameter,T,lower_bound,idi,expected,match,nodes_searched,millis";

impl SweepReport {
    /// Rows whose solver value disagrees with the expected one.
    pub fn mismatches(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.verdict == Verdict::No)
            .count()
    }

    /// Rows abandoned for lack of budget.
    pub fn budget_overruns(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.verdict == Verdict::Budget)
            .count()
    }

    /// `# <source>`, the column header, then one line per row.
    pub fn to_csv(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        let mut out = format!("# {}\n{COLUMNS}\n", self.source);
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                r.family,
                r.params,
                r.n,
                r.diameter,
                r.t,
                r.lower_bound,
                opt(r.idi),
                opt(r.expected),
                r.verdict.as_str(),
                r.nodes_searched,
                r.millis.map(|m| m.to_string()).unwrap_or_default(),
            )
            .expect("writing to a String");
        }
        out
    }
}

fn solve_row(
    g: &Graph,
    family: &str,
    params: String,
    expected: Option<usize>,
    config: &SweepConfig,
) -> Result<SweepRow, SweepError> {
    let dm = all_pairs_distances(g).map_err(|e| SweepError::Solver(e.into()))?;
    let started = Instant::now();
    let solved = if config.parallel {
        id_index_parallel(g, config.limits)
    } else {
        id_index_exact(g, config.limits)
    };
    let millis = config.timing.then(|| started.elapsed().as_millis());
    let (idi, nodes_searched, verdict) = match solved {
        Ok(cert) => {
            let verdict = match expected {
                None => Verdict::Na,
                Some(e) if e == cert.k => Verdict::Yes,
                Some(_) => Verdict::No,
            };
            (Some(cert.k), cert.nodes_searched, verdict)
        }
        Err(SolveError::BudgetExceeded { nodes, .. }) => (None, nodes, Verdict::Budget),
        Err(e) => return Err(SweepError::Solver(e)),
    };
    Ok(SweepRow {
        family: family.to_owned(),
        params,
        n: g.n(),
        diameter: dm.diameter(),
        t: tuplet_classes(g).largest(),
        lower_bound: idi_lower_bound(g),
        idi,
        expected,
        verdict,
        nodes_searched,
        millis,
    })
}

/// Runs the sweep. Row order and contents depend only on `config` apart
/// from the `millis` column.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    match &config.source {
        SweepSource::Family { family, from, to } => {
            if from > to {
                return Err(SweepError::Usage(format!("empty range {from}..{to}")));
            }
            let mut rows = Vec::new();
            for x in *from..=*to {
                let spec = family.member(x);
                let (g, _) = generate(&spec).map_err(|e| SweepError::Usage(format!("{e}")))?;
                rows.push(solve_row(
                    &g,
                    family.name(),
                    family.params(x),
                    expected_id_index(&spec),
                    config,
                )?);
            }
            Ok(SweepReport {
                source: format!("family {} from={from} to={to}", family.name()),
                rows,
            })
        }
        SweepSource::Random(spec) => {
            let corpus = random_corpus(spec.seed, spec.count, spec.sizes.clone(), spec.p);
            let mut rows = Vec::new();
            for (i, g) in corpus.iter().enumerate() {
                let expected = if g.n() <= ORACLE_MAX_N {
                    let pool = geometric_pool(g.n());
                    Some(id_index_oracle(g, &pool, ORACLE_MAX_N).map_err(|e| {
                        SweepError::Solver(SolveError::Invariant(format!(
                            "oracle failed on graph {i}: {e}"
                        )))
                    })?)
                } else {
                    None
                };
                rows.push(solve_row(g, "random", format!("i={i}"), expected, config)?);
            }
            Ok(SweepReport {
                source: format!(
                    "random n={}..{} count={} seed={} p={}",
                    spec.sizes.start(),
                    spec.sizes.end(),
                    spec.count,
                    spec.seed,
                    spec.p
                ),
                rows,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(source: SweepSource) -> SweepConfig {
        SweepConfig {
            source,
            limits: Limits::default(),
            parallel: false,
            timing: false,
        }
    }

    #[test]
    fn cycle_sweep_matches() {
        let report = run_sweep(&config(SweepSource::Family {
            family: SweepFamily::Cycle,
            from: 3,
            to: 8,
        }))
        .unwrap();
        let idis: Vec<_> = report.rows.iter().map(|r| r.idi.unwrap()).collect();
        assert_eq!(idis, [3, 3, 3, 2, 2, 2]);
        assert_eq!(report.mismatches(), 0);
        let csv = report.to_csv();
        assert!(csv.starts_with("# family cycle from=3 to=8\nfamily,params,"));
        assert!(csv.contains("\ncycle,6,6,3,1,1,2,2,yes,"));
        assert!(csv.ends_with(",\n"));
    }

    #[test]
    fn random_specs() {
        let spec: RandomSpec = "n=6..8,count=5,seed=9".parse().unwrap();
        assert_eq!(spec.sizes, 6..=8);
        assert_eq!(spec.p, 0.5);
        assert_eq!(
            "n=4,count=1,seed=1,p=1"
                .parse::<RandomSpec>()
                .unwrap()
                .sizes,
            4..=4
        );
        for bad in [
            "n=8..6,count=1",
            "count=3",
            "n=3,count=x",
            "n=3,count=1,p=0",
            "n=3,count=1,q=2",
            "n3",
        ] {
            assert!(bad.parse::<RandomSpec>().is_err(), "{bad}");
        }
        let report = run_sweep(&config(SweepSource::Random(spec))).unwrap();
        assert_eq!(report.rows.len(), 5);
        assert_eq!(report.mismatches(), 0);
        assert!(report
            .to_csv()
            .starts_with("# random n=6..8 count=5 seed=9 p=0.5\n"));
    }

    #[test]
    fn family_names() {
        assert_eq!(
            "grid:3".parse::<SweepFamily>().unwrap(),
            SweepFamily::Grid(3)
        );
        assert!("grid:0".parse::<SweepFamily>().is_err());
        assert!("petersen".parse::<SweepFamily>().is_err());
        let invalid = config(SweepSource::Family {
            family: SweepFamily::Cycle,
            from: 2,
            to: 4,
        });
        assert!(matches!(run_sweep(&invalid), Err(SweepError::Usage(_))));
    }

    #[test]
    fn budget_rows() {
        let mut c = config(SweepSource::Family {
            family: SweepFamily::Prism,
            from: 5,
            to: 5,
        });
        c.limits.max_nodes = 10;
        let report = run_sweep(&c).unwrap();
        assert_eq!(report.budget_overruns(), 1);
        assert_eq!(report.rows[0].idi, None);
    }
}
