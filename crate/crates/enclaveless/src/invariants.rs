//! Set predicates and brute-force exact graph invariants.
//!
//! Everything here is computed by exhaustive subset search over bit masks:
//! sizes are scanned ascending for minima and descending for maxima, stopping
//! at the first witness. Irredundance search instead grows irredundant
//! partial sets in lexicographic order (irredundance is hereditary, so every
//! maximum irredundant set is reachable that way). These routines are the
//! correctness oracles for the rest of the crate, so they stay as close to
//! the definitions as possible.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

/// A vertex of `s` is an enclave when its whole closed neighborhood lies in
/// `s`. Panics if `v` is not a member of `s`.
pub fn is_enclave(g: &Graph, s: VertexSet, v: Vertex) -> bool {
    assert!(s.contains(v), "vertex {v} not in {s}");
    g.closed_neighborhood(v).is_subset_of(s)
}

/// True iff `s` contains no enclave. The empty set is enclaveless.
pub fn is_enclaveless(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.closed_neighborhood(v).is_subset_of(s))
}

/// True iff `v` is outside `s` and `s + v` is still enclaveless.
/// `s` itself must be enclaveless.
pub fn is_playable(g: &Graph, s: VertexSet, v: Vertex) -> bool {
    assert!(is_enclaveless(g, s), "{s} is not enclaveless");
    !s.contains(v) && is_enclaveless(g, s.with(v))
}

/// All playable vertices of an enclaveless position `s`.
///
/// Adding `v` can only create an enclave at `v` itself or at a played
/// neighbor of `v`, so the test is local to `N[v]`.
pub(crate) fn playable_vertices(g: &Graph, s: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for v in s.complement(g.order()).iter() {
        let grown = s.with(v);
        let v_ok = !g.closed_neighborhood(v).is_subset_of(grown);
        if v_ok
            && g.neighbors(v)
                .intersection(s)
                .iter()
                .all(|u| !g.closed_neighborhood(u).is_subset_of(grown))
        {
            out = out.with(v);
        }
    }
    out
}

/// True iff `s` is enclaveless and no playable vertex remains.
pub fn is_maximal_enclaveless(g: &Graph, s: VertexSet) -> bool {
    is_enclaveless(g, s) && playable_vertices(g, s).is_empty()
}

/// True iff the closed neighborhoods of `d` cover every vertex.
pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    let covered = d.iter().fold(VertexSet::EMPTY, |acc, v| {
        acc.union(g.closed_neighborhood(v))
    });
    covered == g.vertex_set()
}

/// True iff `d` dominates and no single deletion keeps it dominating.
pub fn is_minimal_dominating(g: &Graph, d: VertexSet) -> bool {
    is_dominating(g, d) && d.iter().all(|v| !is_dominating(g, d.without(v)))
}

/// External private neighborhood: vertices outside `s` adjacent to `v` and
/// to no other member of `s`. Panics if `v` is not in `s`.
pub fn epn(g: &Graph, v: Vertex, s: VertexSet) -> VertexSet {
    assert!(s.contains(v), "vertex {v} not in {s}");
    let mut out = VertexSet::EMPTY;
    for w in s.complement(g.order()).iter() {
        if g.neighbors(w).intersection(s) == VertexSet::singleton(v) {
            out = out.with(w);
        }
    }
    out
}

/// Private neighborhood: vertices whose closed neighborhood meets `s` in
/// exactly `{v}`. If `v` is isolated in the subgraph induced by `s`, then
/// `v` is its own private neighbor. Panics if `v` is not in `s`.
pub fn pn(g: &Graph, v: Vertex, s: VertexSet) -> VertexSet {
    assert!(s.contains(v), "vertex {v} not in {s}");
    let mut out = VertexSet::EMPTY;
    for w in g.vertices() {
        if g.closed_neighborhood(w).intersection(s) == VertexSet::singleton(v) {
            out = out.with(w);
        }
    }
    out
}

/// True iff every member of `s` keeps a private neighbor.
pub fn is_irredundant(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !pn(g, v, s).is_empty())
}

/// True iff `s` spans no edge.
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

/// True iff the members of `s` are pairwise at distance at least 3.
pub fn is_two_packing(g: &Graph, s: VertexSet) -> bool {
    let members: Vec<_> = s.iter().collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if g.distance(u, v).is_some_and(|d| d < 3) {
                return false;
            }
        }
    }
    true
}

/// Brute-force size caps. Subset searches scan `2^n` masks, so the defaults
/// keep a single report comfortably under a second.
#[derive(Copy, Clone, Debug)]
pub struct InvariantCaps {
    /// Cap on `n` for the domination/enclaveless/independence searches.
    pub subset_search: usize,
    /// Cap on `n` for the irredundance search.
    pub irredundance: usize,
}

impl Default for InvariantCaps {
    fn default() -> Self {
        InvariantCaps {
            subset_search: 20,
            irredundance: 18,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("graph order {n} exceeds the brute-force cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Exact invariant bundle for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    /// Minimum dominating-set size.
    pub gamma: usize,
    /// Maximum minimal-dominating-set size.
    #[serde(rename = "Gamma")]
    pub upper_gamma: usize,
    /// Minimum maximal-enclaveless-set size.
    pub psi: usize,
    /// Maximum enclaveless-set size.
    #[serde(rename = "Psi")]
    pub upper_psi: usize,
    /// Independence number.
    pub alpha: usize,
    /// Upper irredundance number; absent when the order exceeds the
    /// irredundance cap.
    #[serde(rename = "IR")]
    pub ir: Option<usize>,
    /// All minimal dominating sets share one cardinality.
    pub well_dominated: bool,
}

/// Masks of size `k` over `n` bits, ascending (Gosper's hack).
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n <= 64 && k <= n);
    // largest size-k mask within n bits: the top k bits
    let last = if k == 0 {
        0
    } else {
        VertexSet::full(k).bits() << (n - k)
    };
    let mut cur = if k == 0 {
        None
    } else {
        Some(VertexSet::full(k).bits())
    };
    let mut empty_emitted = k > 0;
    std::iter::from_fn(move || {
        if !empty_emitted {
            empty_emitted = true;
            return Some(0);
        }
        let c = cur?;
        // next mask with the same popcount
        cur = if c == last {
            None
        } else {
            let lo = c & c.wrapping_neg();
            let ripple = c.wrapping_add(lo);
            (ripple != 0).then(|| ripple | (((c ^ ripple) >> 2) / lo))
        };
        Some(c)
    })
}

fn check_cap(n: usize, cap: usize) -> Result<(), InvariantError> {
    if n > cap {
        Err(InvariantError::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Smallest `k` (ascending) whose size-`k` subsets contain a witness.
fn min_size_with(n: usize, pred: impl Fn(VertexSet) -> bool) -> usize {
    for k in 0..=n {
        if subsets_of_size(n, k).any(|m| pred(VertexSet::from_bits(m))) {
            return k;
        }
    }
    unreachable!("predicate has no witness at any size");
}

/// Largest `k` (descending) whose size-`k` subsets contain a witness.
fn max_size_with(n: usize, pred: impl Fn(VertexSet) -> bool) -> usize {
    for k in (0..=n).rev() {
        if subsets_of_size(n, k).any(|m| pred(VertexSet::from_bits(m))) {
            return k;
        }
    }
    unreachable!("predicate has no witness at any size");
}

pub fn gamma(g: &Graph) -> usize {
    min_size_with(g.order(), |s| is_dominating(g, s))
}

pub fn upper_gamma(g: &Graph) -> usize {
    max_size_with(g.order(), |s| is_minimal_dominating(g, s))
}

pub fn psi(g: &Graph) -> usize {
    min_size_with(g.order(), |s| is_maximal_enclaveless(g, s))
}

pub fn upper_psi(g: &Graph) -> usize {
    max_size_with(g.order(), |s| is_enclaveless(g, s))
}

pub fn alpha(g: &Graph) -> usize {
    max_size_with(g.order(), |s| is_independent(g, s))
}

/// Upper irredundance number by depth-first extension of irredundant sets.
pub fn upper_irredundance(g: &Graph) -> usize {
    fn extend(g: &Graph, s: VertexSet, next: Vertex, best: &mut usize) {
        *best = (*best).max(s.len());
        for v in next..g.order() {
            // branch and bound on the vertices still available
            if s.len() + (g.order() - v) <= *best {
                break;
            }
            let grown = s.with(v);
            if is_irredundant(g, grown) {
                extend(g, grown, v + 1, best);
            }
        }
    }
    let mut best = 0;
    extend(g, VertexSet::EMPTY, 0, &mut best);
    best
}

/// Whether all minimal dominating sets share one cardinality, by direct
/// enumeration with a short-circuit on the second distinct size.
pub fn well_dominated(g: &Graph) -> bool {
    let mut seen: Option<usize> = None;
    for d in minimal_dominating_sets_unchecked(g) {
        match seen {
            None => seen = Some(d.len()),
            Some(k) if k != d.len() => return false,
            Some(_) => {}
        }
    }
    true
}

/// Computes the full invariant bundle with default caps.
pub fn compute_invariants(g: &Graph) -> Result<InvariantReport, InvariantError> {
    compute_invariants_with(g, InvariantCaps::default())
}

pub fn compute_invariants_with(
    g: &Graph,
    caps: InvariantCaps,
) -> Result<InvariantReport, InvariantError> {
    let n = g.order();
    check_cap(n, caps.subset_search)?;
    let ir = (n <= caps.irredundance).then(|| upper_irredundance(g));
    Ok(InvariantReport {
        n,
        gamma: gamma(g),
        upper_gamma: upper_gamma(g),
        psi: psi(g),
        upper_psi: upper_psi(g),
        alpha: alpha(g),
        ir,
        well_dominated: well_dominated(g),
    })
}

fn all_masks(n: usize) -> impl Iterator<Item = VertexSet> {
    debug_assert!(n < 64);
    (0..1u64 << n).map(VertexSet::from_bits)
}

fn minimal_dominating_sets_unchecked(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    all_masks(g.order()).filter(|&d| is_minimal_dominating(g, d))
}

/// All minimal dominating sets, in ascending mask order.
pub fn minimal_dominating_sets(
    g: &Graph,
) -> Result<impl Iterator<Item = VertexSet> + '_, InvariantError> {
    check_cap(g.order(), InvariantCaps::default().subset_search)?;
    Ok(minimal_dominating_sets_unchecked(g))
}

/// All maximal enclaveless sets, in ascending mask order.
pub fn maximal_enclaveless_sets(
    g: &Graph,
) -> Result<impl Iterator<Item = VertexSet> + '_, InvariantError> {
    check_cap(g.order(), InvariantCaps::default().subset_search)?;
    Ok(all_masks(g.order()).filter(|&s| is_maximal_enclaveless(g, s)))
}

/// All irredundant sets of maximum cardinality, in ascending mask order.
pub fn max_irredundant_sets(g: &Graph) -> Result<Vec<VertexSet>, InvariantError> {
    check_cap(g.order(), InvariantCaps::default().irredundance)?;
    let ir = upper_irredundance(g);
    Ok(all_masks(g.order())
        .filter(|&s| s.len() == ir && is_irredundant(g, s))
        .collect())
}

/// All independent sets of maximum cardinality, in ascending mask order.
pub fn max_independent_sets(g: &Graph) -> Result<Vec<VertexSet>, InvariantError> {
    check_cap(g.order(), InvariantCaps::default().subset_search)?;
    let a = alpha(g);
    Ok(all_masks(g.order())
        .filter(|&s| s.len() == a && is_independent(g, s))
        .collect())
}

/// All minimal dominating sets of maximum cardinality.
pub fn upper_gamma_sets(g: &Graph) -> Result<Vec<VertexSet>, InvariantError> {
    check_cap(g.order(), InvariantCaps::default().subset_search)?;
    let gg = upper_gamma(g);
    Ok(minimal_dominating_sets_unchecked(g)
        .filter(|d| d.len() == gg)
        .collect())
}

/// All maximal enclaveless sets of minimum cardinality.
pub fn psi_sets(g: &Graph) -> Result<Vec<VertexSet>, InvariantError> {
    check_cap(g.order(), InvariantCaps::default().subset_search)?;
    let p = psi(g);
    Ok(all_masks(g.order())
        .filter(|&s| s.len() == p && is_maximal_enclaveless(g, s))
        .collect())
}
