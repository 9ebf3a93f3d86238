//! Seeded random graphs for property checks. Same seed, same graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::metrics::is_connected;
use crate::ops::line_graph;

pub fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut b = GraphBuilder::new(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// First connected sample of `G(n, p)` satisfying `keep`, within 10 000 draws.
pub fn gnp_connected_where<F: Fn(&Graph) -> bool>(n: usize, p: f64, rng: &mut ChaCha8Rng, keep: F) -> Result<Graph> {
    for _ in 0..10_000 {
        let g = gnp(n, p, rng)?;
        if is_connected(&g) && keep(&g) {
            return Ok(g);
        }
    }
    Err(Error::BadParam(format!("no accepted sample of G({n}, {p})")))
}

/// `count` connected graphs, orders drawn from `orders`, edge probability `p`.
pub fn connected_sample<F: Fn(&Graph) -> bool>(
    count: usize,
    orders: std::ops::RangeInclusive<usize>,
    p: f64,
    seed: u64,
    keep: F,
) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(orders.clone());
            gnp_connected_where(n, p, &mut rng, &keep)
        })
        .collect()
}

/// Line graphs of random graphs: claw-free by construction. Base graphs
/// with no edges are redrawn.
pub fn line_graph_sample(count: usize, base_orders: std::ops::RangeInclusive<usize>, p: f64, seed: u64) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(base_orders.clone());
        let base = gnp(n, p, &mut rng)?;
        if base.edge_count() > 0 {
            out.push(line_graph(&base)?);
        }
    }
    Ok(out)
}
