//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Vertices are dense ids `0..n`. Adjacency is stored as one [`VertexSet`]
//! bit mask per vertex, which makes the set algebra used by the solvers and
//! the brute-force invariant searches cheap word operations. Graphs compare
//! equal iff their orders and adjacencies are equal; labels are metadata
//! attached by the generators and never carry semantics.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Largest supported graph order: one machine word of set bits.
pub const MAX_ORDER: usize = 64;

/// Dense vertex id in `0..n`.
pub type Vertex = usize;

/// A subset of vertices as a 64-bit mask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn singleton(v: Vertex) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(1 << v)
    }

    /// All vertices of a graph of order `n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn contains(self, v: Vertex) -> bool {
        debug_assert!(v < MAX_ORDER);
        self.0 >> v & 1 != 0
    }

    #[inline]
    pub fn with(self, v: Vertex) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(self.0 | 1 << v)
    }

    #[inline]
    pub fn without(self, v: Vertex) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement within a graph of order `n`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn lowest(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as Vertex)
        }
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = BitIter;

    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over the set bits of a mask.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = Vertex;

    #[inline]
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as Vertex;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} outside supported range 1..={MAX_ORDER}")]
    UnsupportedOrder { n: usize },
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("loop edge at vertex {v}")]
    LoopEdge { v: Vertex },
    #[error("line graph of an edgeless graph is undefined")]
    Edgeless,
    #[error("corona of a graph of order {n} exceeds the supported width {MAX_ORDER}")]
    CoronaTooLarge { n: usize },
    #[error("maximal clique enumeration exceeded the cap of {cap}")]
    CliqueCapExceeded { cap: usize },
}

/// Immutable simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    labels: BTreeMap<Vertex, String>,
}

/// Equality ignores labels: two graphs are equal iff orders and adjacencies
/// are equal.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder { n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { v });
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let closed = adj.iter().enumerate().map(|(v, &nb)| nb.with(v)).collect();
        Graph {
            adj,
            closed,
            labels: BTreeMap::new(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// The full vertex set of this graph.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.order()
    }

    /// Open neighborhood of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood of `v`: the vertex together with its neighbors.
    /// Panics if `v` is out of range.
    #[inline]
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        self.closed[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let min = self.vertices().map(|v| self.degree(v)).min().unwrap_or(0);
        let max = self.vertices().map(|v| self.degree(v)).max().unwrap_or(0);
        DegreeProfile { min, max }
    }

    /// Vertices reachable from `start`.
    fn reachable(&self, start: Vertex) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.minus(seen);
            seen = seen.union(next);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable(0) == self.vertex_set()
    }

    pub fn is_isolate_free(&self) -> bool {
        self.adj.iter().all(|s| !s.is_empty())
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.order() - 1
    }

    /// True iff some vertex has an independent set of size `s` inside its
    /// open neighborhood, i.e. the graph has an induced `K_{1,s}`.
    pub fn has_induced_star(&self, s: usize) -> bool {
        debug_assert!(s >= 2);
        self.vertices()
            .any(|v| self.has_independent_subset(self.adj[v], s))
    }

    /// True iff `candidates` contains an independent set of size `k`.
    fn has_independent_subset(&self, candidates: VertexSet, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if candidates.len() < k {
            return false;
        }
        let v = candidates.lowest().expect("nonempty");
        // take v (dropping its neighbors) or skip it
        self.has_independent_subset(candidates.minus(self.closed[v]), k - 1)
            || self.has_independent_subset(candidates.without(v), k)
    }

    /// No induced `K_{1,3}`.
    pub fn is_claw_free(&self) -> bool {
        !self.has_induced_star(3)
    }

    /// True iff the open neighborhood of `v` induces a complete subgraph.
    pub fn is_simplicial(&self, v: Vertex) -> bool {
        let nb = self.adj[v];
        nb.iter().all(|u| nb.minus(self.closed[u]).is_empty())
    }

    /// Line graph: one vertex per edge, adjacency iff the edges share an
    /// endpoint. Also returns the vertex-to-edge provenance map.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(Vertex, Vertex)>), GraphError> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(GraphError::Edgeless);
        }
        if edges.len() > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder { n: edges.len() });
        }
        let m = edges.len();
        let mut adj = vec![VertexSet::EMPTY; m];
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    adj[i] = adj[i].with(j);
                    adj[j] = adj[j].with(i);
                }
            }
        }
        Ok((Graph::from_adjacency(adj), edges))
    }

    /// All maximal cliques, in ascending mask order. Enumeration uses the
    /// pivoting Bron-Kerbosch recursion and fails once `cap` cliques have
    /// been collected.
    pub fn maximal_cliques(&self, cap: usize) -> Result<Vec<VertexSet>, GraphError> {
        let mut out = Vec::new();
        self.bron_kerbosch(
            VertexSet::EMPTY,
            self.vertex_set(),
            VertexSet::EMPTY,
            cap,
            &mut out,
        )?;
        out.sort();
        Ok(out)
    }

    fn bron_kerbosch(
        &self,
        r: VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        cap: usize,
        out: &mut Vec<VertexSet>,
    ) -> Result<(), GraphError> {
        if p.is_empty() && x.is_empty() {
            if out.len() >= cap {
                return Err(GraphError::CliqueCapExceeded { cap });
            }
            out.push(r);
            return Ok(());
        }
        // pivot on the vertex covering most of p
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(self.adj[u]).len())
            .expect("p or x nonempty");
        for v in p.minus(self.adj[pivot]).iter() {
            self.bron_kerbosch(
                r.with(v),
                p.intersection(self.adj[v]),
                x.intersection(self.adj[v]),
                cap,
                out,
            )?;
            p = p.without(v);
            x = x.with(v);
        }
        Ok(())
    }

    /// Clique graph: vertices are the maximal cliques, adjacency iff the
    /// cliques intersect.
    pub fn clique_graph(&self) -> Result<Graph, GraphError> {
        self.clique_graph_capped(crate::DEFAULT_CLIQUE_CAP)
    }

    pub fn clique_graph_capped(&self, cap: usize) -> Result<Graph, GraphError> {
        let cliques = self.maximal_cliques(cap)?;
        if cliques.len() > MAX_ORDER {
            return Err(GraphError::UnsupportedOrder { n: cliques.len() });
        }
        let k = cliques.len();
        let mut adj = vec![VertexSet::EMPTY; k];
        for i in 0..k {
            for j in i + 1..k {
                if !cliques[i].is_disjoint(cliques[j]) {
                    adj[i] = adj[i].with(j);
                    adj[j] = adj[j].with(i);
                }
            }
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Corona: every vertex `v` gains exactly one pendant neighbor `v + n`.
    /// Originals are labeled `x1..xn` and pendants `y1..yn`.
    pub fn corona(&self) -> Result<Graph, GraphError> {
        let n = self.order();
        if 2 * n > MAX_ORDER {
            return Err(GraphError::CoronaTooLarge { n });
        }
        let mut adj = vec![VertexSet::EMPTY; 2 * n];
        for v in self.vertices() {
            adj[v] = self.adj[v].with(v + n);
            adj[v + n] = VertexSet::singleton(v);
        }
        let mut g = Graph::from_adjacency(adj);
        for v in 0..n {
            g.labels.insert(v, format!("x{}", v + 1));
            g.labels.insert(v + n, format!("y{}", v + 1));
        }
        Ok(g)
    }

    /// Shortest-path edge count between `u` and `v`, or `None` when they lie
    /// in different components. Panics if either id is out of range.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        assert!(u < self.order() && v < self.order(), "vertex out of range");
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut dist = 0;
        while !frontier.is_empty() {
            if frontier.contains(v) {
                return Some(dist);
            }
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                next = next.union(self.adj[w]);
            }
            frontier = next.minus(seen);
            seen = seen.union(next);
            dist += 1;
        }
        None
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        assert!(v < self.order(), "vertex out of range");
        self.labels.insert(v, label.into());
    }

    pub fn vertex_with_label(&self, label: &str) -> Option<Vertex> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(&v, _)| v)
    }
}

/// Minimum and maximum degree of a graph.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
}

impl DegreeProfile {
    /// `Some(k)` iff the graph is `k`-regular.
    pub fn regular(&self) -> Option<usize> {
        (self.min == self.max).then_some(self.min)
    }
}
