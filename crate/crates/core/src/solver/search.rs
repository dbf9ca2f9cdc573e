//! Depth-first enumeration of restricted-growth strings with exactly `k`
//! classes, pruned by pairs whose separating vertices are all assigned.
//!
//! For a pair `(u, v)` only the vertices `w` with `d(u, w) != d(v, w)` can
//! tell `u` and `v` apart; once the largest such `w` has a class, the pair's
//! fate is fixed. Each pair is checked exactly at that vertex.

use alloc::vec;
use alloc::vec::Vec;
use core::cell::Cell;
use core::ops::Range;

use super::Partition;
use crate::graph::DistanceMatrix;
use crate::Vertex;

/// Shared node accounting. `charge` returns `false` once the budget is gone.
pub trait NodeBudget {
    /// Records `nodes` more search nodes.
    fn charge(&self, nodes: u64) -> bool;

    /// Nodes charged so far.
    fn used(&self) -> u64;

    /// How many nodes a search may visit between calls to `charge`.
    fn granularity(&self) -> u64 {
        1
    }
}

/// Single-threaded budget.
#[derive(Debug)]
pub struct LocalBudget {
    used: Cell<u64>,
    limit: u64,
}

impl LocalBudget {
    /// Allows `limit` nodes.
    pub fn new(limit: u64) -> Self {
        LocalBudget {
            used: Cell::new(0),
            limit,
        }
    }
}

impl NodeBudget for LocalBudget {
    fn charge(&self, nodes: u64) -> bool {
        let used = self.used.get() + nodes;
        self.used.set(used);
        used <= self.limit
    }

    fn used(&self) -> u64 {
        self.used.get()
    }
}

/// Result of searching one level (or one branch of it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelOutcome {
    /// Lexicographically least distinguishing partition in the searched range.
    Found(Partition),
    /// No partition in the searched range distinguishes.
    Exhausted,
    /// The budget ran out first.
    Aborted,
}

/// Outcome plus the nodes this call visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelReport {
    /// What happened.
    pub outcome: LevelOutcome,
    /// Nodes visited by this call.
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy)]
struct Term {
    vertex: u32,
    from_u: u16,
    from_v: u16,
}

/// Search over partitions of one distance matrix into exactly `k` classes.
#[derive(Debug)]
pub struct LevelSearch {
    n: usize,
    k: usize,
    stride: usize,
    terms: Vec<Term>,
    /// Term ranges of pairs finalized at each vertex.
    checks: Vec<Vec<Range<usize>>>,
}

impl LevelSearch {
    /// Precomputes the separating vertices of every pair.
    pub fn new(dm: &DistanceMatrix, k: usize) -> Self {
        let n = dm.n();
        let mut terms = Vec::new();
        let mut checks = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                let start = terms.len();
                let (ru, rv) = (dm.row(u), dm.row(v));
                let mut last = v;
                for w in 0..n {
                    if ru[w] != rv[w] {
                        terms.push(Term {
                            vertex: w as u32,
                            from_u: ru[w] as u16,
                            from_v: rv[w] as u16,
                        });
                        last = last.max(w);
                    }
                }
                checks[last].push(start..terms.len());
            }
        }
        LevelSearch {
            n,
            k,
            stride: dm.diameter() + 1,
            terms,
            checks,
        }
    }

    /// Class count searched.
    pub fn classes(&self) -> usize {
        self.k
    }

    /// All valid restricted-growth prefixes of length `len` that can still be
    /// completed to exactly `k` classes, in lexicographic order. Used to fan
    /// a level out over independent branches.
    pub fn prefixes(&self, len: usize) -> Vec<Vec<u32>> {
        let len = len.min(self.n);
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(len);
        self.collect_prefixes(len, 0, &mut current, &mut out);
        out
    }

    fn collect_prefixes(
        &self,
        len: usize,
        used: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let t = current.len();
        if t == len {
            out.push(current.clone());
            return;
        }
        for c in 0..=used.min(self.k - 1) {
            let now_used = used.max(c + 1);
            if self.k - now_used > self.n - t - 1 {
                continue;
            }
            current.push(c as u32);
            self.collect_prefixes(len, now_used, current, out);
            current.pop();
        }
    }

    /// Searches every completion of `prefix` (empty for the whole level).
    pub fn run(&self, prefix: &[u32], budget: &dyn NodeBudget) -> LevelReport {
        let mut state = State {
            search: self,
            assignment: vec![0; self.n],
            scratch: vec![0; self.k.max(1) * self.stride],
            nodes: 0,
            pending: 0,
            budget,
            aborted: false,
        };
        let outcome = if self.k == 0 || self.k > self.n {
            LevelOutcome::Exhausted
        } else if !budget.charge(0) {
            LevelOutcome::Aborted
        } else {
            state.start(prefix)
        };
        budget.charge(state.pending);
        LevelReport {
            outcome,
            nodes: state.nodes,
        }
    }
}

struct State<'a> {
    search: &'a LevelSearch,
    assignment: Vec<u32>,
    scratch: Vec<i32>,
    nodes: u64,
    pending: u64,
    budget: &'a dyn NodeBudget,
    aborted: bool,
}

impl State<'_> {
    fn start(&mut self, prefix: &[u32]) -> LevelOutcome {
        let mut used = 0usize;
        for (t, &c) in prefix.iter().enumerate() {
            let c = c as usize;
            if c > used || c >= self.search.k || !self.fits(t, used.max(c + 1)) {
                return LevelOutcome::Exhausted;
            }
            used = used.max(c + 1);
            self.assignment[t] = c as u32;
            if !self.checks_pass(t) {
                return LevelOutcome::Exhausted;
            }
        }
        if self.descend(prefix.len(), used) {
            let partition = Partition::new(self.assignment.clone())
                .expect("search only builds restricted-growth strings");
            LevelOutcome::Found(partition)
        } else if self.aborted {
            LevelOutcome::Aborted
        } else {
            LevelOutcome::Exhausted
        }
    }

    /// Whether `used` classes after assigning vertex `t` leave enough
    /// vertices to open the remaining ones.
    #[inline]
    fn fits(&self, t: Vertex, used: usize) -> bool {
        self.search.k - used < self.search.n - t
    }

    fn descend(&mut self, t: Vertex, used: usize) -> bool {
        if t == self.search.n {
            return used == self.search.k;
        }
        for c in 0..=used.min(self.search.k - 1) {
            let now_used = used.max(c + 1);
            if !self.fits(t, now_used) {
                continue;
            }
            if !self.tick() {
                return false;
            }
            self.assignment[t] = c as u32;
            if self.checks_pass(t) && self.descend(t + 1, now_used) {
                return true;
            }
            if self.aborted {
                return false;
            }
        }
        false
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.pending += 1;
        if self.pending >= self.budget.granularity() {
            let ok = self.budget.charge(self.pending);
            self.pending = 0;
            if !ok {
                self.aborted = true;
            }
        }
        !self.aborted
    }

    /// Every pair finalized at `t` must be separated.
    fn checks_pass(&mut self, t: Vertex) -> bool {
        let search = self.search;
        search.checks[t]
            .iter()
            .all(|range| self.separated(&search.terms[range.clone()]))
    }

    /// Whether some class has different per-distance counts as seen from the
    /// two ends of the pair. Distance 0 (a pair member seen from itself)
    /// lands in slot 0 of each class and is ignored.
    fn separated(&mut self, terms: &[Term]) -> bool {
        let stride = self.search.stride;
        for term in terms {
            let base = self.assignment[term.vertex as usize] as usize * stride;
            self.scratch[base + term.from_u as usize] += 1;
            self.scratch[base + term.from_v as usize] -= 1;
        }
        let mut differs = false;
        for term in terms {
            let base = self.assignment[term.vertex as usize] as usize * stride;
            for slot in [term.from_u as usize, term.from_v as usize] {
                if slot != 0 && self.scratch[base + slot] != 0 {
                    differs = true;
                }
                self.scratch[base + slot] = 0;
            }
        }
        differs
    }
}
