//! Deterministic graph generators.
//!
//! Every family is a pure function of its [`GeneratorSpec`]: equal spec
//! (family, params, seed) gives a bit-identical graph on every platform.
//! Randomness comes exclusively from [`DetRng`](crate::rng::DetRng); the
//! exact sampling order below is part of the contract and must not change.

use crate::graph::{Graph, GraphError, MAX_ORDER};
use crate::rng::DetRng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Bound on rejection-sampling rounds for `random_connected`.
pub const CONNECTIVITY_RETRY_LIMIT: u32 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("no connected sample within {CONNECTIVITY_RETRY_LIMIT} retries (order {order}, p = {num}/{den})")]
    ConnectivityRetriesExhausted { order: usize, num: u64, den: u64 },
}

impl From<GraphError> for GenerateError {
    fn from(e: GraphError) -> Self {
        GenerateError::InvalidParams(e.to_string())
    }
}

/// Graph family plus its parameters.
///
/// Probabilities are rationals (`num/den`) so specs hash and compare exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    Path { order: usize },
    Cycle { order: usize },
    Star { order: usize },
    Spider { legs: usize, leg_len: usize },
    Complete { order: usize },
    RandomTree { order: usize },
    RandomConnected { order: usize, num: u64, den: u64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Star { .. } => "star",
            Family::Spider { .. } => "spider",
            Family::Complete { .. } => "complete",
            Family::RandomTree { .. } => "random_tree",
            Family::RandomConnected { .. } => "random_connected",
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            Family::Path { order }
            | Family::Cycle { order }
            | Family::Star { order }
            | Family::Complete { order }
            | Family::RandomTree { order }
            | Family::RandomConnected { order, .. } => order,
            Family::Spider { legs, leg_len } => 1 + legs * leg_len,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        GeneratorSpec { family, seed }
    }
}

/// Builds the graph described by `spec`. Random families are connected by
/// construction; deterministic families ignore the seed.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GenerateError> {
    let order = spec.family.order();
    if order > MAX_ORDER {
        return Err(GenerateError::InvalidParams(format!(
            "order {order} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    match spec.family {
        Family::Path { order } => {
            require(order >= 1, "path order must be >= 1")?;
            let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
            Ok(Graph::from_edges(order, &edges)?)
        }
        Family::Cycle { order } => {
            require(order >= 3, "cycle order must be >= 3")?;
            let mut edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
            edges.push((order - 1, 0));
            Ok(Graph::from_edges(order, &edges)?)
        }
        Family::Star { order } => {
            require(order >= 1, "star order must be >= 1")?;
            let edges: Vec<_> = (1..order).map(|v| (0, v)).collect();
            Ok(Graph::from_edges(order, &edges)?)
        }
        Family::Spider { legs, leg_len } => {
            require(legs >= 3, "spider needs at least 3 legs")?;
            require(leg_len >= 1, "spider legs must have length >= 1")?;
            // Center is 0; leg i occupies 1 + i*leg_len .. 1 + (i+1)*leg_len
            // as a chain hanging off the center.
            let mut edges = Vec::with_capacity(legs * leg_len);
            for leg in 0..legs {
                let start = 1 + leg * leg_len;
                edges.push((0, start));
                for k in 1..leg_len {
                    edges.push((start + k - 1, start + k));
                }
            }
            Ok(Graph::from_edges(1 + legs * leg_len, &edges)?)
        }
        Family::Complete { order } => {
            require(order >= 1, "complete order must be >= 1")?;
            let mut edges = Vec::new();
            for u in 0..order {
                for v in (u + 1)..order {
                    edges.push((u, v));
                }
            }
            Ok(Graph::from_edges(order, &edges)?)
        }
        Family::RandomTree { order } => {
            require(order >= 1, "tree order must be >= 1")?;
            Ok(random_tree(order, spec.seed))
        }
        Family::RandomConnected { order, num, den } => {
            require(order >= 1, "order must be >= 1")?;
            require(den > 0 && num <= den, "edge probability must be a rational in [0,1]")?;
            random_connected(order, num, den, spec.seed)
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<(), GenerateError> {
    if cond {
        Ok(())
    } else {
        Err(GenerateError::InvalidParams(msg.to_string()))
    }
}

/// Uniform labeled tree via a Prüfer sequence: draw `order - 2` symbols with
/// `next_below(order)`, then decode with the textbook two-pointer scheme.
fn random_tree(order: usize, seed: u64) -> Graph {
    if order <= 2 {
        let edges: &[(usize, usize)] = if order == 2 { &[(0, 1)] } else { &[] };
        return Graph::from_edges(order, edges).expect("tiny tree");
    }
    let mut rng = DetRng::new(seed);
    let prufer: Vec<usize> = (0..order - 2)
        .map(|_| rng.next_below(order as u64) as usize)
        .collect();

    let mut degree = vec![1usize; order];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(order - 1);
    // `ptr` scans for the smallest current leaf; `leaf` chases chains that
    // become leaves below the scan point.
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in &prufer {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, order - 1));
    Graph::from_edges(order, &edges).expect("Prüfer decode yields valid edges")
}

/// G(n, p) by rejection: sample all pairs `(u, v)`, `u < v` in lexicographic
/// order from one RNG stream; keep the first connected draw.
fn random_connected(order: usize, num: u64, den: u64, seed: u64) -> Result<Graph, GenerateError> {
    let mut rng = DetRng::new(seed);
    for _ in 0..CONNECTIVITY_RETRY_LIMIT {
        let mut g = Graph::empty(order)?;
        for u in 0..order {
            for v in (u + 1)..order {
                if rng.next_bool(num, den) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenerateError::ConnectivityRetriesExhausted { order, num, den })
}
