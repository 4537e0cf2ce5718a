//! Searches for small graphs whose longest paths have empty intersection.
//! Random sparse subcubic graphs are the productive hunting ground; the
//! literature examples in this size range are subcubic with a handful of
//! independent cycles.

use gallai_core::{enumerate_longest_paths_budgeted, DetRng, Graph};
use rayon::prelude::*;

/// Random connected graph with max degree 3 and a fixed edge count.
fn random_subcubic(order: usize, extra_edges: usize, seed: u64) -> Option<Graph> {
    let mut rng = DetRng::new(seed);
    // Random spanning tree by parent attachment, degree-capped.
    let mut degree = vec![0usize; order];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..order {
        let mut tries = 0;
        loop {
            let parent = rng.next_below(v as u64) as usize;
            if degree[parent] < 3 {
                edges.push((parent, v));
                degree[parent] += 1;
                degree[v] += 1;
                break;
            }
            tries += 1;
            if tries > 50 {
                return None;
            }
        }
    }
    for _ in 0..extra_edges {
        let mut tries = 0;
        loop {
            let u = rng.next_below(order as u64) as usize;
            let v = rng.next_below(order as u64) as usize;
            if u != v && degree[u] < 3 && degree[v] < 3 && !edges.contains(&(u, v)) && !edges.contains(&(v, u)) {
                edges.push((u, v));
                degree[u] += 1;
                degree[v] += 1;
                break;
            }
            tries += 1;
            if tries > 100 {
                return None;
            }
        }
    }
    Graph::from_edges(order, &edges).ok()
}

fn main() {
    for order in [12usize, 13, 14] {
        for extra in [3usize, 4, 5] {
            println!("order {order}, extra edges {extra} ...");
            let hits: Vec<String> = (0..800_000u64)
                .into_par_iter()
                .filter_map(|seed| {
                    let g = random_subcubic(order, extra, seed)?;
                    let report = enumerate_longest_paths_budgeted(&g, 20_000, 2_000_000).ok()?;
                    if report.truncated {
                        return None;
                    }
                    let common = report
                        .paths
                        .iter()
                        .fold(u64::MAX, |m, p| m & p.mask());
                    (common == 0).then(|| {
                        format!(
                            "EMPTY order={} extra={} seed={} L={} paths={} g6={}",
                            order,
                            extra,
                            seed,
                            report.order_l,
                            report.paths.len(),
                            gallai_core::to_graph6(&g).unwrap()
                        )
                    })
                })
                .collect();
            for h in hits.iter().take(5) {
                println!("{h}");
            }
            if !hits.is_empty() {
                println!("total hits at order {order} extra {extra}: {}", hits.len());
                return;
            }
        }
    }
    println!("no hits");
}
