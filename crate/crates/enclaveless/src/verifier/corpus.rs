//! Graph corpora for sweeps: exhaustive labeled enumeration and seeded
//! random samples.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("exhaustive enumeration supports n <= {cap}, got {n}")]
    CapExceeded { n: usize, cap: usize },
}

/// Cap on the built-in labeled enumeration (`2^21` graphs at n = 7).
pub const EXHAUSTIVE_CAP: usize = 7;

fn pair_list(n: usize) -> Vec<(Vertex, Vertex)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn graph_from_mask(n: usize, pairs: &[(Vertex, Vertex)], mask: u64) -> Graph {
    let mut adj = vec![VertexSet::EMPTY; n];
    for (t, &(u, v)) in pairs.iter().enumerate() {
        if mask >> t & 1 != 0 {
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
    }
    Graph::from_adjacency(adj)
}

/// All labeled graphs on `1..=n_max` vertices, optionally connected only.
/// Isomorphic duplicates are permitted; the enumeration is by labeled edge
/// mask, in ascending order of (n, mask).
pub fn exhaustive_graphs(
    n_max: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, CorpusError> {
    if n_max == 0 || n_max > EXHAUSTIVE_CAP {
        return Err(CorpusError::CapExceeded {
            n: n_max,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let it = (1..=n_max).flat_map(move |n| {
        let pairs = pair_list(n);
        let count = 1u64 << pairs.len();
        (0..count).filter_map(move |mask| {
            let g = graph_from_mask(n, &pairs, mask);
            (!connected_only || g.is_connected()).then_some(g)
        })
    });
    Ok(it)
}

/// `count` seeded random graphs with orders drawn uniformly from
/// `n_min..=n_max` and per-graph edge density drawn uniformly from (0, 1).
/// Deterministic for a fixed seed.
pub fn random_graphs(
    count: usize,
    n_min: usize,
    n_max: usize,
    seed: u64,
) -> impl Iterator<Item = Graph> {
    assert!(1 <= n_min && n_min <= n_max && n_max <= crate::MAX_ORDER);
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(move |_| {
        let n = rng.random_range(n_min..=n_max);
        let p: f64 = rng.random();
        let mut adj = vec![VertexSet::EMPTY; n];
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    adj[u] = adj[u].with(v);
                    adj[v] = adj[v].with(u);
                }
            }
        }
        Graph::from_adjacency(adj)
    })
}
