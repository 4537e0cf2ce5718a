//! Quick timing probe for the acceptance-scale workloads.

use gallai_core::corpus::connected_graphs;
use gallai_core::{
    brute_force_longest, enumerate_longest_paths, enumerate_longest_paths_budgeted, generate,
    Family, GeneratorSpec,
};
use std::time::Instant;

fn main() {
    // Order-18 random connected, p = 1/4, a few seeds.
    for seed in [42u64, 1802, 7, 0] {
        let g = generate(&GeneratorSpec::new(
            Family::RandomConnected { order: 18, num: 1, den: 4 },
            seed,
        ))
        .unwrap();
        let t = Instant::now();
        match enumerate_longest_paths_budgeted(&g, 100_000, 50_000_000) {
            Ok(r) => println!(
                "order18 seed={seed}: L={} paths={} nodes={} in {:?}",
                r.order_l,
                r.paths.len(),
                r.explored_nodes,
                t.elapsed()
            ),
            Err(e) => println!("order18 seed={seed}: {e} in {:?}", t.elapsed()),
        }
    }

    // Petersen.
    let g = gallai_core::corpus::petersen();
    let t = Instant::now();
    let r = enumerate_longest_paths(&g, usize::MAX).unwrap();
    println!("petersen: L={} paths={} nodes={} in {:?}", r.order_l, r.paths.len(), r.explored_nodes, t.elapsed());

    // Slice of the order-7 corpus: engine + oracle, to project the sweep.
    let t = Instant::now();
    let mut n = 0usize;
    for (i, g) in connected_graphs(7).enumerate() {
        if i >= 40_000 {
            break;
        }
        let engine = enumerate_longest_paths(&g, usize::MAX).unwrap();
        let oracle = brute_force_longest(&g).unwrap();
        assert_eq!(engine.paths, oracle.paths);
        n += 1;
    }
    let dt = t.elapsed();
    println!(
        "order7 slice: {n} graphs in {dt:?} -> projected full 1.87M: {:?}",
        dt * (1_866_256 / n as u32)
    );
}
