//! Simple undirected graphs on dense 0-based vertex labels.
//!
//! Adjacency is stored as one `u64` neighbor bitset per vertex, which caps
//! the order at [`MAX_ORDER`]. Everything in this crate runs at desk scale
//! (exact longest-path search is exponential), so the cap costs nothing and
//! keeps the hot loops branch-light.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count (one machine word of adjacency per vertex).
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {order} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge { order: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
}

/// Immutable simple undirected graph.
///
/// Invariants (enforced by every constructor):
/// - no self-loops,
/// - symmetric adjacency,
/// - all neighbor indices in `[0, order)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order });
        }
        Ok(Graph {
            order,
            adj: vec![0u64; order],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are tolerated.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let order = self.order;
        if u >= order {
            return Err(GraphError::VertexOutOfRange { vertex: u, order });
        }
        if v >= order {
            return Err(GraphError::VertexOutOfRange { vertex: v, order });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Neighbor bitset of `v`.
    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.adj[v])
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            iter_bits(self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1))).map(move |v| (u, v))
        })
    }

    /// True iff every vertex is reachable from vertex 0.
    /// The single-vertex graph is connected; so is the empty one (vacuously).
    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let full = full_mask(self.order);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in iter_bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen == full
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order, self.edges().collect::<Vec<_>>())
    }
}

/// Bitmask with the lowest `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates set bit positions in ascending order.
#[inline]
pub(crate) fn iter_bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_self_loop() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
    }

    #[test]
    fn from_edges_rejects_out_of_range() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn order_above_cap_rejected() {
        assert!(matches!(
            Graph::empty(65),
            Err(GraphError::OrderTooLarge { order: 65 })
        ));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(4, &[(0, 2), (2, 3)]).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
            assert!(!g.has_edge(u, u));
        }
    }

    #[test]
    fn p5_is_connected() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(g.is_connected());
    }

    #[test]
    fn two_disjoint_edges_not_connected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn single_vertex_connected() {
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn edges_iterator_lexicographic() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 1), (1, 3)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 3), (2, 3)]);
    }
}
