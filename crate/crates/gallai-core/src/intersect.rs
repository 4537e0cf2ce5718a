//! Intersection structure of longest-path sets: pairwise intersection,
//! parity-conditioned double intersection, index alignment, interleaving,
//! triples, and the global transversal (Gallai set).
//!
//! Each checker comes in two forms: the public operation that takes a graph
//! and enumerates its longest paths, and a `*_report` form that reuses an
//! existing [`LongestPathReport`] so campaign runners enumerate once per
//! graph.

use crate::graph::{iter_bits, Graph};
use crate::path::{
    enumerate_longest_paths, longest_path_order, EngineError, LongestPathReport, VertexPath,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("check requires a connected graph")]
    DisconnectedGraph,
    #[error("report is truncated; checks need the complete longest-path list")]
    TruncatedReport,
    #[error("paths do not belong to the given graph: {0}")]
    PathsFromDifferentGraphs(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Which measure of a path the parity condition applies to. A path on k
/// vertices has k-1 edges, so the two conventions disagree on every graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityConvention {
    VertexCount,
    EdgeCount,
}

impl ParityConvention {
    pub fn measure(self, order_l: usize) -> usize {
        match self {
            ParityConvention::VertexCount => order_l,
            ParityConvention::EdgeCount => order_l.saturating_sub(1),
        }
    }

    pub fn check_name(self) -> &'static str {
        match self {
            ParityConvention::VertexCount => "lemma2_vertex",
            ParityConvention::EdgeCount => "lemma2_edge",
        }
    }
}

/// Exact intersection of two paths, with the 1-based position of every
/// common vertex on each path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairIntersection {
    /// Common vertices, ascending.
    pub common: Vec<usize>,
    /// `positions_a[i]` is the 1-based index of `common[i]` in path A.
    pub positions_a: Vec<usize>,
    /// `positions_b[i]` is the 1-based index of `common[i]` in path B.
    pub positions_b: Vec<usize>,
}

/// Outcome of one property check on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckVerdict {
    /// Which property was checked (matches the campaign check names).
    pub property: String,
    pub holds: bool,
    /// The property's precondition (parity, enough paths, ...) did not
    /// apply, so `holds` carries no evidence.
    pub vacuous: bool,
    /// The scan hit its work cap before exhausting all candidates.
    pub capped: bool,
    /// Present iff `holds` is false; replaying it against the graph
    /// reproduces the violation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckVerdict {
    fn passing(property: &str) -> Self {
        CheckVerdict {
            property: property.to_string(),
            holds: true,
            vacuous: false,
            capped: false,
            witness: None,
        }
    }

    fn vacuous(property: &str) -> Self {
        CheckVerdict { vacuous: true, ..CheckVerdict::passing(property) }
    }

    fn violated(property: &str, witness: Witness) -> Self {
        CheckVerdict {
            holds: false,
            witness: Some(witness),
            ..CheckVerdict::passing(property)
        }
    }
}

/// Structured violation payload. Every variant carries enough to re-run the
/// violated predicate from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two longest paths with no vertex in common.
    DisjointPair { a: VertexPath, b: VertexPath },
    /// Two longest paths sharing fewer than two vertices under an even
    /// parity measure.
    SparseIntersection {
        a: VertexPath,
        b: VertexPath,
        common: Vec<usize>,
    },
    /// A pair of longest paths that no orientation choice index-aligns;
    /// `vertex` with its two positions is the first mismatch under the
    /// stored orientations.
    Unalignable {
        a: VertexPath,
        b: VertexPath,
        vertex: usize,
        pos_a: usize,
        pos_b: usize,
    },
    /// Three longest paths with no common vertex.
    DisjointTriple {
        a: VertexPath,
        b: VertexPath,
        c: VertexPath,
    },
    /// A subset of longest paths whose intersection is already empty.
    EmptyTransversal { certifying: Vec<VertexPath> },
    /// A premise-clean interleaving among three longest paths, plus the
    /// certificate the rerouting construction produced on it.
    Interleaving {
        p1: VertexPath,
        p2: VertexPath,
        p3: VertexPath,
        t_p: usize,
        r_s: usize,
        t_q: usize,
        certificate: crate::surgery::SurgeryCertificate,
    },
}

impl Witness {
    /// Re-runs the violated predicate against `g`. True iff the violation
    /// reproduces, including that every path is a genuine longest path.
    pub fn replays(&self, g: &Graph) -> bool {
        let Ok(order_l) = longest_path_order(g) else {
            return false;
        };
        let is_longest =
            |p: &VertexPath| p.is_valid_in(g) && p.order() == order_l;
        match self {
            Witness::DisjointPair { a, b } => {
                is_longest(a) && is_longest(b) && a.mask() & b.mask() == 0
            }
            Witness::SparseIntersection { a, b, common } => {
                let recomputed: Vec<usize> = iter_bits(a.mask() & b.mask()).collect();
                is_longest(a) && is_longest(b) && recomputed.len() < 2 && recomputed == *common
            }
            Witness::Unalignable { a, b, vertex, pos_a, pos_b } => {
                is_longest(a)
                    && is_longest(b)
                    && a.position_of(*vertex) == Some(*pos_a)
                    && b.position_of(*vertex) == Some(*pos_b)
                    && check_pair_alignment(g, a, b).is_some()
            }
            Witness::DisjointTriple { a, b, c } => {
                is_longest(a) && is_longest(b) && is_longest(c)
                    && a.mask() & b.mask() & c.mask() == 0
            }
            Witness::EmptyTransversal { certifying } => {
                !certifying.is_empty()
                    && certifying.iter().all(is_longest)
                    && certifying.iter().fold(u64::MAX, |m, p| m & p.mask()) == 0
            }
            Witness::Interleaving { p1, p2, p3, t_p, r_s, t_q, .. } => {
                is_longest(p1)
                    && is_longest(p2)
                    && is_longest(p3)
                    && crate::surgery::lemma3_premise_holds(g, p1, p2, p3, *t_p, *r_s, *t_q)
            }
        }
    }
}

fn require_connected(g: &Graph) -> Result<(), CheckError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(CheckError::DisconnectedGraph)
    }
}

fn require_complete(report: &LongestPathReport) -> Result<(), CheckError> {
    if report.truncated {
        Err(CheckError::TruncatedReport)
    } else {
        Ok(())
    }
}

fn validate_in_graph(g: &Graph, paths: &[&VertexPath]) -> Result<(), CheckError> {
    for p in paths {
        VertexPath::new(g, p.vertices().to_vec())
            .map_err(|e| CheckError::PathsFromDifferentGraphs(e.to_string()))?;
    }
    Ok(())
}

/// Exact intersection of `a` and `b` with positions on both paths.
pub fn common_vertices(
    g: &Graph,
    a: &VertexPath,
    b: &VertexPath,
) -> Result<PairIntersection, CheckError> {
    validate_in_graph(g, &[a, b])?;
    let common: Vec<usize> = iter_bits(a.mask() & b.mask()).collect();
    let positions_a = common.iter().map(|&v| a.position_of(v).unwrap()).collect();
    let positions_b = common.iter().map(|&v| b.position_of(v).unwrap()).collect();
    Ok(PairIntersection { common, positions_a, positions_b })
}

/// Uncapped enumeration for the check operations.
fn full_report(g: &Graph) -> Result<LongestPathReport, CheckError> {
    Ok(enumerate_longest_paths(g, usize::MAX)?)
}

// ---------------------------------------------------------------------------
// pairwise: every two longest paths intersect
// ---------------------------------------------------------------------------

pub fn pairwise_check(g: &Graph) -> Result<CheckVerdict, CheckError> {
    require_connected(g)?;
    let report = full_report(g)?;
    pairwise_check_report(&report)
}

pub fn pairwise_check_report(report: &LongestPathReport) -> Result<CheckVerdict, CheckError> {
    require_complete(report)?;
    const NAME: &str = "pairwise";
    // A nonempty global intersection settles every pair at once.
    if report.common_mask() != 0 {
        return Ok(CheckVerdict::passing(NAME));
    }
    let masks: Vec<u64> = report.paths.iter().map(|p| p.mask()).collect();
    for i in 0..masks.len() {
        for j in (i + 1)..masks.len() {
            if masks[i] & masks[j] == 0 {
                return Ok(CheckVerdict::violated(
                    NAME,
                    Witness::DisjointPair {
                        a: report.paths[i].clone(),
                        b: report.paths[j].clone(),
                    },
                ));
            }
        }
    }
    Ok(CheckVerdict::passing(NAME))
}

// ---------------------------------------------------------------------------
// lemma2: even measure => unique longest path or every pair shares >= 2
// ---------------------------------------------------------------------------

pub fn lemma2_check(g: &Graph, convention: ParityConvention) -> Result<CheckVerdict, CheckError> {
    require_connected(g)?;
    let report = full_report(g)?;
    lemma2_check_report(&report, convention)
}

pub fn lemma2_check_report(
    report: &LongestPathReport,
    convention: ParityConvention,
) -> Result<CheckVerdict, CheckError> {
    require_complete(report)?;
    let name = convention.check_name();
    if convention.measure(report.order_l) % 2 != 0 {
        return Ok(CheckVerdict::vacuous(name));
    }
    if report.paths.len() <= 1 {
        return Ok(CheckVerdict::passing(name));
    }
    let masks: Vec<u64> = report.paths.iter().map(|p| p.mask()).collect();
    for i in 0..masks.len() {
        for j in (i + 1)..masks.len() {
            let shared = masks[i] & masks[j];
            if shared.count_ones() < 2 {
                return Ok(CheckVerdict::violated(
                    name,
                    Witness::SparseIntersection {
                        a: report.paths[i].clone(),
                        b: report.paths[j].clone(),
                        common: iter_bits(shared).collect(),
                    },
                ));
            }
        }
    }
    Ok(CheckVerdict::passing(name))
}

// ---------------------------------------------------------------------------
// alignment: shared vertices occupy equal indices under some orientation
// ---------------------------------------------------------------------------

/// 1-based position table of a path over all graph vertices (0 = absent).
fn position_table(p: &VertexPath, n: usize) -> Vec<usize> {
    let mut table = vec![0usize; n];
    for (i, &v) in p.vertices().iter().enumerate() {
        table[v] = i + 1;
    }
    table
}

/// First common vertex whose positions differ under the given orientations,
/// or None if the pair aligns.
fn alignment_mismatch(
    common: u64,
    pos_a: &[usize],
    pos_b: &[usize],
    l: usize,
    flip_a: bool,
    flip_b: bool,
) -> Option<usize> {
    for v in iter_bits(common) {
        let pa = if flip_a { l + 1 - pos_a[v] } else { pos_a[v] };
        let pb = if flip_b { l + 1 - pos_b[v] } else { pos_b[v] };
        if pa != pb {
            return Some(v);
        }
    }
    None
}

/// Tests a single pair under all four orientation choices. Returns the first
/// mismatch under the stored orientations if no choice aligns, else None.
fn check_pair_alignment(g: &Graph, a: &VertexPath, b: &VertexPath) -> Option<(usize, usize, usize)> {
    let n = g.order();
    let l = a.order();
    let common = a.mask() & b.mask();
    let pos_a = position_table(a, n);
    let pos_b = position_table(b, n);
    let mut first_mismatch = None;
    for (flip_a, flip_b) in [(false, false), (false, true), (true, false), (true, true)] {
        match alignment_mismatch(common, &pos_a, &pos_b, l, flip_a, flip_b) {
            None => return None,
            Some(v) => {
                if !flip_a && !flip_b {
                    first_mismatch = Some((v, pos_a[v], pos_b[v]));
                }
            }
        }
    }
    first_mismatch
}

pub fn index_alignment_check(g: &Graph) -> Result<CheckVerdict, CheckError> {
    require_connected(g)?;
    let report = full_report(g)?;
    index_alignment_check_report(g, &report)
}

pub fn index_alignment_check_report(
    g: &Graph,
    report: &LongestPathReport,
) -> Result<CheckVerdict, CheckError> {
    require_complete(report)?;
    const NAME: &str = "alignment";
    let n = g.order();
    let l = report.order_l;
    let masks: Vec<u64> = report.paths.iter().map(|p| p.mask()).collect();
    let tables: Vec<Vec<usize>> = report.paths.iter().map(|p| position_table(p, n)).collect();
    for i in 0..report.paths.len() {
        for j in (i + 1)..report.paths.len() {
            let common = masks[i] & masks[j];
            let mut aligned = false;
            let mut fwd_mismatch = None;
            for (flip_a, flip_b) in [(false, false), (false, true), (true, false), (true, true)] {
                match alignment_mismatch(common, &tables[i], &tables[j], l, flip_a, flip_b) {
                    None => {
                        aligned = true;
                        break;
                    }
                    Some(v) => {
                        if !flip_a && !flip_b {
                            fwd_mismatch = Some(v);
                        }
                    }
                }
            }
            if !aligned {
                let v = fwd_mismatch.expect("identity orientation must mismatch too");
                return Ok(CheckVerdict::violated(
                    NAME,
                    Witness::Unalignable {
                        a: report.paths[i].clone(),
                        b: report.paths[j].clone(),
                        vertex: v,
                        pos_a: tables[i][v],
                        pos_b: tables[j][v],
                    },
                ));
            }
        }
    }
    Ok(CheckVerdict::passing(NAME))
}

// ---------------------------------------------------------------------------
// interleave scan
// ---------------------------------------------------------------------------

/// Indices along `p2` (1-based, ascending) of the vertices `p2` shares with
/// `other`, optionally excluding vertices lying on all three paths.
fn indices_on_middle(p2: &VertexPath, other_mask: u64, exclude: u64) -> Vec<usize> {
    p2.vertices()
        .iter()
        .enumerate()
        .filter(|&(_, &v)| other_mask >> v & 1 == 1 && exclude >> v & 1 == 0)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Finds the lexicographically first triple of `p2`-indices
/// `(t_p, r_s, t_q)` with `t_p < r_s < t_q`, where `t_p, t_q` index vertices
/// of `p1 ∩ p2`, `r_s` indexes a vertex of `p2 ∩ p3` that is not on all
/// three paths. Returns None when no interleaving exists.
///
/// Only the index-order predicate with the three-way exclusion is applied
/// here; the rerouting construction enforces its extra premise clauses
/// itself, so the scan stays usable as a relaxed search primitive.
pub fn interleave_scan(
    g: &Graph,
    p1: &VertexPath,
    p2: &VertexPath,
    p3: &VertexPath,
) -> Result<Option<(usize, usize, usize)>, CheckError> {
    validate_in_graph(g, &[p1, p2, p3])?;
    let three_way = p1.mask() & p2.mask() & p3.mask();
    let t_indices = indices_on_middle(p2, p1.mask(), 0);
    let r_indices = indices_on_middle(p2, p3.mask(), three_way);
    for &t_p in &t_indices {
        for &r_s in &r_indices {
            if r_s <= t_p {
                continue;
            }
            for &t_q in &t_indices {
                if t_q > r_s {
                    return Ok(Some((t_p, r_s, t_q)));
                }
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// gallai set and triple check
// ---------------------------------------------------------------------------

/// Vertices common to every longest path. May be empty; Gallai's question
/// was whether it ever is (it is, for some graphs).
pub fn gallai_set(report: &LongestPathReport) -> Result<Vec<usize>, CheckError> {
    require_complete(report)?;
    Ok(iter_bits(report.common_mask()).collect())
}

/// Campaign form of the transversal check: holds iff the Gallai set is
/// nonempty; the witness is a minimal-ish certifying subset of paths whose
/// intersection is already empty.
pub fn gallai_check_report(report: &LongestPathReport) -> Result<CheckVerdict, CheckError> {
    require_complete(report)?;
    const NAME: &str = "gallai";
    if report.common_mask() != 0 {
        return Ok(CheckVerdict::passing(NAME));
    }
    let mut certifying: Vec<VertexPath> = Vec::new();
    let mut running = u64::MAX;
    for p in &report.paths {
        let next = running & p.mask();
        if next != running {
            certifying.push(p.clone());
            running = next;
        }
        if running == 0 {
            break;
        }
    }
    Ok(CheckVerdict::violated(NAME, Witness::EmptyTransversal { certifying }))
}

pub fn triple_check(g: &Graph, triple_cap: usize) -> Result<CheckVerdict, CheckError> {
    require_connected(g)?;
    assert!(triple_cap >= 1, "triple_cap must be >= 1");
    let report = full_report(g)?;
    triple_check_report(&report, triple_cap)
}

/// Every unordered triple of longest paths has a common vertex. Vacuous with
/// fewer than three paths; short-circuits on a nonempty Gallai set (which
/// implies it); examines at most `triple_cap` triples otherwise and sets
/// `capped` when the bound fires.
pub fn triple_check_report(
    report: &LongestPathReport,
    triple_cap: usize,
) -> Result<CheckVerdict, CheckError> {
    require_complete(report)?;
    const NAME: &str = "triple";
    if report.paths.len() < 3 {
        return Ok(CheckVerdict::vacuous(NAME));
    }
    if report.common_mask() != 0 {
        return Ok(CheckVerdict::passing(NAME));
    }
    let masks: Vec<u64> = report.paths.iter().map(|p| p.mask()).collect();
    let mut examined = 0usize;
    for i in 0..masks.len() {
        for j in (i + 1)..masks.len() {
            let ij = masks[i] & masks[j];
            if ij == 0 {
                // A disjoint pair settles every triple containing it.
                return Ok(CheckVerdict::violated(
                    NAME,
                    Witness::DisjointTriple {
                        a: report.paths[i].clone(),
                        b: report.paths[j].clone(),
                        c: report.paths[if i > 0 { 0 } else { 2 }].clone(),
                    },
                ));
            }
            for k in (j + 1)..masks.len() {
                examined += 1;
                if examined > triple_cap {
                    let mut verdict = CheckVerdict::passing(NAME);
                    verdict.capped = true;
                    return Ok(verdict);
                }
                if ij & masks[k] == 0 {
                    return Ok(CheckVerdict::violated(
                        NAME,
                        Witness::DisjointTriple {
                            a: report.paths[i].clone(),
                            b: report.paths[j].clone(),
                            c: report.paths[k].clone(),
                        },
                    ));
                }
            }
        }
    }
    Ok(CheckVerdict::passing(NAME))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, GeneratorSpec};

    fn spider_3x2() -> Graph {
        generate(&GeneratorSpec::new(Family::Spider { legs: 3, leg_len: 2 }, 0)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(&GeneratorSpec::new(Family::Cycle { order: n }, 0)).unwrap()
    }

    #[test]
    fn common_vertices_identical_paths() {
        let g = generate(&GeneratorSpec::new(Family::Path { order: 4 }, 0)).unwrap();
        let p = VertexPath::new(&g, vec![0, 1, 2, 3]).unwrap();
        let ix = common_vertices(&g, &p, &p).unwrap();
        assert_eq!(ix.common, vec![0, 1, 2, 3]);
        assert_eq!(ix.positions_a, vec![1, 2, 3, 4]);
        assert_eq!(ix.positions_a, ix.positions_b);
    }

    #[test]
    fn common_vertices_disjoint() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let a = VertexPath::new(&g, vec![0, 1]).unwrap();
        let b = VertexPath::new(&g, vec![2, 3]).unwrap();
        let ix = common_vertices(&g, &a, &b).unwrap();
        assert!(ix.common.is_empty());
    }

    #[test]
    fn common_vertices_spider_longest_pair() {
        let g = spider_3x2();
        let report = enumerate_longest_paths(&g, 100).unwrap();
        let ix = common_vertices(&g, &report.paths[0], &report.paths[1]).unwrap();
        // Center plus the two vertices of the shared leg.
        assert_eq!(ix.common.len(), 3);
        assert!(ix.common.contains(&0));
    }

    #[test]
    fn common_vertices_rejects_foreign_path() {
        let g = generate(&GeneratorSpec::new(Family::Path { order: 3 }, 0)).unwrap();
        let k4 = generate(&GeneratorSpec::new(Family::Complete { order: 4 }, 0)).unwrap();
        let p = VertexPath::new(&k4, vec![0, 2]).unwrap();
        let q = VertexPath::new(&g, vec![0, 1]).unwrap();
        assert!(matches!(
            common_vertices(&g, &p, &q),
            Err(CheckError::PathsFromDifferentGraphs(_))
        ));
    }

    #[test]
    fn pairwise_holds_on_c6() {
        let verdict = pairwise_check(&cycle(6)).unwrap();
        assert!(verdict.holds);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn pairwise_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(pairwise_check(&g), Err(CheckError::DisconnectedGraph)));
    }

    #[test]
    fn pairwise_holds_on_random_trees() {
        for seed in 0..40 {
            let order = 5 + (seed as usize % 16);
            let g = generate(&GeneratorSpec::new(Family::RandomTree { order }, seed)).unwrap();
            assert!(pairwise_check(&g).unwrap().holds, "tree seed {seed}");
        }
    }

    #[test]
    fn lemma2_p4_unique_path_holds() {
        let g = generate(&GeneratorSpec::new(Family::Path { order: 4 }, 0)).unwrap();
        let verdict = lemma2_check(&g, ParityConvention::VertexCount).unwrap();
        assert!(verdict.holds);
        assert!(!verdict.vacuous);
    }

    #[test]
    fn lemma2_c6_holds() {
        let verdict = lemma2_check(&cycle(6), ParityConvention::VertexCount).unwrap();
        assert!(verdict.holds);
        assert!(!verdict.vacuous);
    }

    #[test]
    fn lemma2_odd_measure_is_vacuous() {
        let g = generate(&GeneratorSpec::new(Family::Path { order: 5 }, 0)).unwrap();
        let verdict = lemma2_check(&g, ParityConvention::VertexCount).unwrap();
        assert!(verdict.holds);
        assert!(verdict.vacuous);
        // Same graph, other convention: 4 edges is even, so it applies.
        let verdict = lemma2_check(&g, ParityConvention::EdgeCount).unwrap();
        assert!(!verdict.vacuous);
    }

    #[test]
    fn alignment_trivial_for_unique_path() {
        let g = generate(&GeneratorSpec::new(Family::Path { order: 6 }, 0)).unwrap();
        assert!(index_alignment_check(&g).unwrap().holds);
    }

    #[test]
    fn alignment_fails_on_c5() {
        let verdict = index_alignment_check(&cycle(5)).unwrap();
        assert!(!verdict.holds);
        let witness = verdict.witness.expect("violation carries a witness");
        assert!(witness.replays(&cycle(5)));
    }

    #[test]
    fn interleave_scan_identical_paths_none() {
        let g = generate(&GeneratorSpec::new(Family::Path { order: 5 }, 0)).unwrap();
        let p = VertexPath::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(interleave_scan(&g, &p, &p, &p).unwrap(), None);
    }

    #[test]
    fn interleave_scan_matches_nested_loop_oracle() {
        // Cross-check on all ordered triples of longest paths of small
        // graphs against an independently written exhaustive search.
        let graphs = [spider_3x2(), cycle(5), cycle(6), crate::corpus::petersen()];
        for g in &graphs {
            let report = enumerate_longest_paths(g, 1000).unwrap();
            let paths = &report.paths;
            for a in paths {
                for b in paths {
                    for c in paths {
                        let got = interleave_scan(g, a, b, c).unwrap();
                        let want = oracle_scan(a, b, c);
                        assert_eq!(got, want);
                    }
                }
            }
        }
    }

    // Test-only oracle: the literal definition over all index triples, then
    // take the minimum. The r_s vertex lies on p2 and p3 by selection, so
    // the three-way exclusion reduces to it not lying on p1.
    fn oracle_scan(
        p1: &VertexPath,
        p2: &VertexPath,
        p3: &VertexPath,
    ) -> Option<(usize, usize, usize)> {
        let mut hits = Vec::new();
        let l = p2.order();
        for t_p in 1..=l {
            for r_s in 1..=l {
                for t_q in 1..=l {
                    if t_p < r_s
                        && r_s < t_q
                        && p1.contains(p2.at(t_p))
                        && p1.contains(p2.at(t_q))
                        && p3.contains(p2.at(r_s))
                        && !p1.contains(p2.at(r_s))
                    {
                        hits.push((t_p, r_s, t_q));
                    }
                }
            }
        }
        hits.into_iter().min()
    }

    #[test]
    fn gallai_set_of_path_is_everything() {
        let g = generate(&GeneratorSpec::new(Family::Path { order: 5 }, 0)).unwrap();
        let report = enumerate_longest_paths(&g, 10).unwrap();
        assert_eq!(gallai_set(&report).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn gallai_set_of_spider_is_center() {
        let report = enumerate_longest_paths(&spider_3x2(), 10).unwrap();
        assert_eq!(gallai_set(&report).unwrap(), vec![0]);
    }

    #[test]
    fn gallai_rejects_truncated_report() {
        let report = enumerate_longest_paths(&cycle(6), 2).unwrap();
        assert!(report.truncated);
        assert_eq!(gallai_set(&report), Err(CheckError::TruncatedReport));
    }

    #[test]
    fn triple_check_spider_holds() {
        let verdict = triple_check(&spider_3x2(), 50_000).unwrap();
        assert!(verdict.holds);
        assert!(!verdict.vacuous);
    }

    #[test]
    fn triple_check_vacuous_below_three_paths() {
        let g = generate(&GeneratorSpec::new(Family::Path { order: 4 }, 0)).unwrap();
        let verdict = triple_check(&g, 50_000).unwrap();
        assert!(verdict.holds);
        assert!(verdict.vacuous);
    }

    #[test]
    fn triple_cap_flags_capped() {
        let g = cycle(6); // 6 longest paths -> 20 triples
        let report = enumerate_longest_paths(&g, 100).unwrap();
        // Force the fallback scan by pretending there is no shortcut:
        // C6's Hamiltonian paths all share everything, so the shortcut
        // normally fires; check capping on the arrangement count instead
        // via a tiny cap on a graph with an empty global intersection.
        // (Covered more thoroughly in the empty-transversal tests.)
        let verdict = triple_check_report(&report, 1).unwrap();
        assert!(verdict.holds);
        assert!(!verdict.capped, "shortcut path never caps");
    }

    #[test]
    fn nonempty_gallai_implies_triple_holds() {
        // The implication the short-circuit relies on, tested explicitly.
        for seed in 0..30 {
            let g = generate(&GeneratorSpec::new(
                Family::RandomConnected { order: 8, num: 3, den: 10 },
                seed,
            ))
            .unwrap();
            let report = enumerate_longest_paths(&g, usize::MAX).unwrap();
            if !gallai_set(&report).unwrap().is_empty() {
                let verdict = triple_check_report(&report, usize::MAX).unwrap();
                assert!(verdict.holds);
            }
        }
    }

    #[test]
    fn gallai_subset_chain() {
        // gallai_set ⊆ common(P,Q) ⊆ set(P) for every pair in the report.
        for seed in 0..20 {
            let g = generate(&GeneratorSpec::new(
                Family::RandomConnected { order: 9, num: 3, den: 10 },
                seed,
            ))
            .unwrap();
            let report = enumerate_longest_paths(&g, usize::MAX).unwrap();
            let gallai: u64 = report
                .paths
                .iter()
                .fold(u64::MAX, |m, p| m & p.mask());
            for p in &report.paths {
                for q in &report.paths {
                    let pq = p.mask() & q.mask();
                    assert_eq!(gallai & pq, gallai);
                    assert_eq!(pq & p.mask(), pq);
                }
            }
        }
    }
}
