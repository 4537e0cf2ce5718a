//! Small test corpora: a naive exhaustive enumerator of connected graphs and
//! a few named fixture graphs.

use crate::graph::Graph;

/// Largest order the naive enumerator accepts. Above this, ingest an
/// external generator's graph6 output instead.
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

/// All connected labeled graphs on `order` vertices, by walking every edge
/// subset and keeping the connected ones. No isomorphism reduction.
///
/// Counts (order 1..=7): 1, 1, 4, 38, 728, 26 704, 1 866 256.
///
/// # Panics
/// If `order` is 0 or exceeds [`MAX_EXHAUSTIVE_ORDER`].
pub fn connected_graphs(order: usize) -> impl Iterator<Item = Graph> {
    assert!(
        (1..=MAX_EXHAUSTIVE_ORDER).contains(&order),
        "naive enumeration supports orders 1..={MAX_EXHAUSTIVE_ORDER}, got {order}"
    );
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|u| ((u + 1)..order).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(order, &edges).expect("enumerated edges valid");
        g.is_connected().then_some(g)
    })
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes
/// i -- i+5. Traceable but not Hamiltonian; the usual performance fixture.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("fixed edge list")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts_up_to_order_5() {
        let expected = [1usize, 1, 4, 38, 728];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).count(), want, "order {}", i + 1);
        }
    }

    #[test]
    fn connected_count_order_6() {
        assert_eq!(connected_graphs(6).count(), 26_704);
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.is_connected());
        for v in 0..10 {
            assert_eq!(g.degree(v), 3);
        }
    }
}
