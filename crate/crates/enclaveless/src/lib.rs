//! Exact computation laboratory for the competition-enclaveless game.
//!
//! The crate bundles:
//!
//! - [`graph`]: immutable bit-mask graphs on up to 64 vertices with the
//!   structural predicates and constructions (claw detection, line graphs,
//!   clique graphs, coronas) the rest of the crate consumes;
//! - [`invariants`]: brute-force exact computation of the domination and
//!   enclaveless numbers, independence, irredundance, and the associated set
//!   predicates;
//! - [`game`]: memoized minimax solvers for the competition-enclaveless game
//!   and the domination game, plus scripted-strategy simulation;
//! - [`families`]: generators for paths, cycles, stars, double stars, path
//!   coronas, connector rings, and the glued line-graph family with its
//!   vertex partition;
//! - [`io`]: bit-exact graph6 parsing and writing, an edge-list text format,
//!   and sweep report emission;
//! - [`verifier`]: corpora, per-graph bound checks, and regression tables of
//!   known game values.

pub mod families;
pub mod game;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod verifier;

/// Default cap on maximal-clique enumeration.
pub const DEFAULT_CLIQUE_CAP: usize = 100_000;

pub use graph::{Graph, GraphError, Vertex, VertexSet, MAX_ORDER};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::graph::Graph;

    /// Brute-force isomorphism test for tiny graphs (n <= 8): try every
    /// vertex bijection.
    pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
        let n = a.order();
        if n != b.order() || a.edge_count() != b.edge_count() {
            return false;
        }
        assert!(n <= 8, "brute-force isomorphism is for tiny graphs");
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            a.vertices()
                .all(|u| a.neighbors(u).iter().all(|v| b.has_edge(p[u], p[v])))
        })
    }

    fn permute(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return check(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if permute(perm, k + 1, check) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
}
