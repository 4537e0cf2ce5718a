//! Exact longest-path search: order computation, exhaustive enumeration of
//! all longest paths, and an independent brute-force oracle.
//!
//! "Order" always counts vertices, never edges. A path ⟨v_1..v_k⟩ has order
//! k; indices into paths are 1-based throughout this crate so that positions
//! line up with the usual subscript notation.

use crate::graph::{iter_bits, Graph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// Vertex-count cap for the factorial-cost oracle.
pub const ORACLE_MAX_ORDER: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("order {order} exceeds the brute-force oracle limit {ORACLE_MAX_ORDER}")]
    OrderTooLargeForOracle { order: usize },
    #[error("search exceeded the node budget of {budget}")]
    BudgetExhausted { budget: u64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("path is empty")]
    Empty,
    #[error("path vertex {0} out of range")]
    OutOfRange(usize),
    #[error("path repeats vertex {0}")]
    Repeated(usize),
    #[error("path vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

/// Simple path stored in canonical orientation: the vertex sequence is
/// lexicographically no greater than its reversal, so a path and its
/// reversal are one value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexPath {
    vertices: Vec<usize>,
}

impl VertexPath {
    /// Validates `vertices` as a simple path in `g` and stores it canonically.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, PathError> {
        validate_path(g, &vertices)?;
        Ok(Self::from_walk(vertices))
    }

    /// Canonicalizes a sequence already known to be a valid path.
    pub(crate) fn from_walk(mut vertices: Vec<usize>) -> Self {
        if needs_flip(&vertices) {
            vertices.reverse();
        }
        VertexPath { vertices }
    }

    #[inline]
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Vertex count.
    #[inline]
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex at 1-based position `index`.
    #[inline]
    pub fn at(&self, index: usize) -> usize {
        self.vertices[index - 1]
    }

    /// 1-based position of `v`, if present.
    pub fn position_of(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v).map(|i| i + 1)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertex set as a bitmask.
    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    /// The reversed sequence (not canonical; used for orientation-sensitive
    /// constructions).
    pub fn reversed_vertices(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.reverse();
        v
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        validate_path(g, &self.vertices).is_ok()
    }
}

fn needs_flip(vertices: &[usize]) -> bool {
    let rev = vertices.iter().rev();
    vertices.iter().gt(rev)
}

fn validate_path(g: &Graph, vertices: &[usize]) -> Result<(), PathError> {
    if vertices.is_empty() {
        return Err(PathError::Empty);
    }
    let mut seen = 0u64;
    for (i, &v) in vertices.iter().enumerate() {
        if v >= g.order() {
            return Err(PathError::OutOfRange(v));
        }
        if seen >> v & 1 == 1 {
            return Err(PathError::Repeated(v));
        }
        seen |= 1u64 << v;
        if i > 0 && !g.has_edge(vertices[i - 1], v) {
            return Err(PathError::NotAdjacent(vertices[i - 1], v));
        }
    }
    Ok(())
}

/// True iff `seq` is a nonempty sequence of distinct, consecutively adjacent
/// vertices of `g`.
pub fn is_path(g: &Graph, seq: &[usize]) -> bool {
    validate_path(g, seq).is_ok()
}

/// Result of a longest-path enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongestPathReport {
    /// Maximum vertex count over all simple paths.
    pub order_l: usize,
    /// All longest paths, canonical, lexicographically sorted. Complete
    /// unless `truncated` is set.
    pub paths: Vec<VertexPath>,
    /// True iff the path list hit the storage cap and dropped at least one
    /// longest path. `order_l` stays exact regardless.
    pub truncated: bool,
    /// Search-tree nodes visited (partial paths materialized).
    pub explored_nodes: u64,
}

impl LongestPathReport {
    /// Bitmask intersection of all stored path vertex sets.
    pub(crate) fn common_mask(&self) -> u64 {
        self.paths.iter().fold(u64::MAX, |m, p| m & p.mask())
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct SearchOptions {
    pub cap: usize,
    pub node_budget: Option<u64>,
    pub prune: bool,
}

/// Maximum number of vertices over all simple paths of `g`; 1 for edgeless
/// graphs.
pub fn longest_path_order(g: &Graph) -> Result<usize, EngineError> {
    let opts = SearchOptions { cap: 1, node_budget: None, prune: true };
    Ok(search(g, opts)?.order_l)
}

/// Enumerates every longest path of `g`, deduplicated up to reversal,
/// storing at most `cap` of them.
///
/// Depth-first extension over partial paths with a bitset visited set; a
/// branch is cut when its order plus the number of unvisited vertices still
/// reachable from the head cannot reach the best order found so far.
pub fn enumerate_longest_paths(g: &Graph, cap: usize) -> Result<LongestPathReport, EngineError> {
    assert!(cap >= 1, "cap must be >= 1");
    search(g, SearchOptions { cap, node_budget: None, prune: true })
}

/// As [`enumerate_longest_paths`], but aborts with
/// [`EngineError::BudgetExhausted`] once `node_budget` search nodes have been
/// expanded. Campaigns use this to skip pathological instances.
pub fn enumerate_longest_paths_budgeted(
    g: &Graph,
    cap: usize,
    node_budget: u64,
) -> Result<LongestPathReport, EngineError> {
    assert!(cap >= 1, "cap must be >= 1");
    search(g, SearchOptions { cap, node_budget: Some(node_budget), prune: true })
}

pub(crate) fn search(g: &Graph, opts: SearchOptions) -> Result<LongestPathReport, EngineError> {
    let n = g.order();
    if n == 0 {
        return Err(EngineError::EmptyGraph);
    }
    let mut state = Searcher {
        g,
        opts,
        best: 0,
        found: BTreeSet::new(),
        dropped: false,
        explored: 0,
        path: Vec::with_capacity(n),
    };
    for start in 0..n {
        state.path.clear();
        state.path.push(start);
        state.extend(start, 1u64 << start)?;
    }
    Ok(LongestPathReport {
        order_l: state.best,
        paths: state.found.into_iter().map(|v| VertexPath { vertices: v }).collect(),
        truncated: state.dropped,
        explored_nodes: state.explored,
    })
}

struct Searcher<'g> {
    g: &'g Graph,
    opts: SearchOptions,
    best: usize,
    found: BTreeSet<Vec<usize>>,
    dropped: bool,
    explored: u64,
    path: Vec<usize>,
}

impl Searcher<'_> {
    fn extend(&mut self, head: usize, visited: u64) -> Result<(), EngineError> {
        self.explored += 1;
        if let Some(budget) = self.opts.node_budget {
            if self.explored > budget {
                return Err(EngineError::BudgetExhausted { budget });
            }
        }

        let len = self.path.len();
        if len > self.best {
            self.best = len;
            self.found.clear();
            self.dropped = false;
        }
        if len == self.best {
            self.record();
        }

        let candidates = self.g.neighbors_mask(head) & !visited;
        if candidates == 0 {
            return Ok(());
        }
        if self.opts.prune {
            // Any extension stays inside the unvisited vertices reachable
            // from the head, so best can't be matched once even that whole
            // component is too small.
            let reachable = unvisited_reachable(self.g, candidates, visited);
            if len + (reachable.count_ones() as usize) < self.best {
                return Ok(());
            }
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.path.push(v);
            self.extend(v, visited | (1u64 << v))?;
            self.path.pop();
        }
        Ok(())
    }

    fn record(&mut self) {
        let canonical = if needs_flip(&self.path) {
            let mut rev = self.path.clone();
            rev.reverse();
            rev
        } else {
            self.path.clone()
        };
        if self.found.contains(&canonical) {
            return;
        }
        if self.found.len() >= self.opts.cap {
            self.dropped = true;
        } else {
            self.found.insert(canonical);
        }
    }
}

/// Closure of `seeds` over unvisited vertices.
#[inline]
fn unvisited_reachable(g: &Graph, seeds: u64, visited: u64) -> u64 {
    let mut comp = seeds;
    let mut frontier = seeds;
    while frontier != 0 {
        let mut next = 0u64;
        for v in iter_bits(frontier) {
            next |= g.neighbors_mask(v);
        }
        frontier = next & !visited & !comp;
        comp |= frontier;
    }
    comp
}

/// Longest-path enumeration by exhausting vertex permutations: for every
/// permutation of the full vertex set, the maximal prefix that forms a path
/// is a candidate. Structurally unrelated to the branch-and-bound search;
/// exists solely to cross-check it.
pub fn brute_force_longest(g: &Graph) -> Result<LongestPathReport, EngineError> {
    let n = g.order();
    if n == 0 {
        return Err(EngineError::EmptyGraph);
    }
    if n > ORACLE_MAX_ORDER {
        return Err(EngineError::OrderTooLargeForOracle { order: n });
    }

    let mut best = 0usize;
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut perms = 0u64;
    let mut consider = |perm: &[usize]| {
        perms += 1;
        let mut k = 1;
        while k < n && g.has_edge(perm[k - 1], perm[k]) {
            k += 1;
        }
        if k > best {
            best = k;
            found.clear();
        }
        if k == best {
            let prefix = &perm[..k];
            let canonical = if prefix.iter().gt(prefix.iter().rev()) {
                prefix.iter().rev().copied().collect()
            } else {
                prefix.to_vec()
            };
            found.insert(canonical);
        }
    };

    // Heap's algorithm, iterative form.
    let mut perm: Vec<usize> = (0..n).collect();
    consider(&perm);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            consider(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    Ok(LongestPathReport {
        order_l: best,
        paths: found.into_iter().map(|v| VertexPath { vertices: v }).collect(),
        truncated: false,
        explored_nodes: perms,
    })
}
