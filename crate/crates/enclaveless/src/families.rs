//! Generators for the graph families the solvers and sweeps exercise.
//!
//! Generators attach labels that scripted strategies use to address
//! structure (path positions, pendants, connectors, hidden vertices); the
//! labels never affect game or invariant semantics.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet, MAX_ORDER};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("tree {index} is not a non-trivial tree")]
    NotATree { index: usize },
    #[error("glue reference {tree}:{vertex} is out of range")]
    BadGlueRef { tree: usize, vertex: Vertex },
    #[error("glue pair joins tree {tree} to itself")]
    SelfGlue { tree: usize },
    #[error("glue vertex {tree}:{vertex} is used more than once")]
    DuplicateGlueVertex { tree: usize, vertex: Vertex },
    #[error("{trees} trees require exactly {expected} glue pairs, got {got}")]
    GluePairCount {
        trees: usize,
        expected: usize,
        got: usize,
    },
    #[error("glue vertex {vertex} is not simplicial in its line graph")]
    NotSimplicial { vertex: Vertex },
    #[error("contracting {a} and {b} would create parallel structure")]
    ParallelStructure { a: Vertex, b: Vertex },
    #[error("clique graph of the contracted result is not a tree")]
    CliqueGraphNotTree,
    #[error("partition invariant violated: {0}")]
    PartitionInvariant(String),
    #[error("family spec parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid pruefer sequence: {0}")]
    BadPrufer(String),
}

/// Path on `n` vertices, consecutive ids.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(n, &edges)?)
}

/// Cycle on `n >= 3` vertices, consecutive ids.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParameter("cycle needs n >= 3".into()));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Ok(Graph::new(n, &edges)?)
}

/// Star with `leaves >= 1` leaves; the hub is vertex 0.
pub fn star(leaves: usize) -> Result<Graph, FamilyError> {
    if leaves < 1 {
        return Err(FamilyError::InvalidParameter("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Ok(Graph::new(leaves + 1, &edges)?)
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParameter(
            "complete needs n >= 1".into(),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Double star: two adjacent centers (ids 0 and 1), each with `k` leaves.
pub fn double_star(k: usize) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::InvalidParameter(
            "double star needs k >= 1".into(),
        ));
    }
    let mut edges = vec![(0, 1)];
    for i in 0..k {
        edges.push((0, 2 + i));
        edges.push((1, 2 + k + i));
    }
    Ok(Graph::new(2 * k + 2, &edges)?)
}

/// Corona of the path: ids `0..n` form the path (labeled `x1..xn`), ids
/// `n..2n` the pendants (labeled `y1..yn`). When `n` is a multiple of ten
/// the ten-pair blocks used by the block script are defined.
pub fn corona_path(n: usize) -> Result<Graph, FamilyError> {
    Ok(path(n)?.corona()?)
}

/// Vertex sets of the ten-pair blocks of `corona_path(10 * q)`.
pub fn corona_path_blocks(n: usize) -> Vec<VertexSet> {
    assert!(n.is_multiple_of(10), "blocks need 10 | n");
    (0..n / 10)
        .map(|k| {
            let mut s = VertexSet::EMPTY;
            for i in 10 * k..10 * (k + 1) {
                s = s.with(i).with(n + i);
            }
            s
        })
        .collect()
}

/// Ring of `m` blocks, each a complete graph on `r + 1` vertices minus one
/// edge between the block's connectors, consecutive blocks joined by a
/// connector edge. The result is `r`-regular of order `m * (r + 1)`.
///
/// Labels: connectors `x1, y1, .., xm, ym`; hidden vertices `h<i>_<j>`.
pub fn connector_ring(m: usize, r: usize) -> Result<Graph, FamilyError> {
    if r < 3 {
        return Err(FamilyError::InvalidParameter(
            "connector ring needs r >= 3".into(),
        ));
    }
    if m < 2 {
        return Err(FamilyError::InvalidParameter(
            "connector ring needs m >= 2".into(),
        ));
    }
    let n = m * (r + 1);
    if n > MAX_ORDER {
        return Err(FamilyError::InvalidParameter(format!(
            "connector ring order {n} exceeds the supported width {MAX_ORDER}"
        )));
    }
    let base = |i: usize| i * (r + 1);
    let mut edges = Vec::new();
    for i in 0..m {
        let b = base(i);
        // complete block minus the connector edge x_i y_i
        for u in 0..=r {
            for v in u + 1..=r {
                if (u, v) != (0, 1) {
                    edges.push((b + u, b + v));
                }
            }
        }
        // y_i to x_{i+1}, cyclically
        edges.push((b + 1, base((i + 1) % m)));
    }
    let mut g = Graph::new(n, &edges)?;
    for i in 0..m {
        let b = base(i);
        g.set_label(b, format!("x{}", i + 1));
        g.set_label(b + 1, format!("y{}", i + 1));
        for j in 2..=r {
            g.set_label(b + j, format!("h{}_{}", i + 1, j - 1));
        }
    }
    assert_eq!(
        g.degree_profile().regular(),
        Some(r),
        "connector ring must be r-regular"
    );
    Ok(g)
}

/// A pendant edge of the corona of one input tree, addressed by the tree
/// vertex it hangs from.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GlueRef {
    pub tree: usize,
    pub vertex: Vertex,
}

/// Input to [`build_family_f`]: non-trivial trees as edge lists plus the
/// glue pairs identifying pendant-edge vertices of distinct line graphs to
/// contract (`q - 1` pairs for `q` trees).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyFSpec {
    pub trees: Vec<Vec<(Vertex, Vertex)>>,
    pub glue_pairs: Vec<(GlueRef, GlueRef)>,
}

/// A built family member with its associated vertex partition: `b` holds the
/// pendant-edge vertices (glued pairs merged), `a` the tree-edge vertices.
#[derive(Clone, Debug)]
pub struct PartitionedGraph {
    pub graph: Graph,
    pub a: VertexSet,
    pub b: VertexSet,
}

/// Builds a member of the glued line-graph family: take the line graph of
/// the corona of each tree, then contract each glue pair of pendant-edge
/// vertices into one vertex. Validates the construction end to end,
/// including that the clique graph of the result is a tree and that the
/// (A, B) partition has its stated shape.
pub fn build_family_f(spec: &FamilyFSpec) -> Result<PartitionedGraph, FamilyError> {
    let q = spec.trees.len();
    if q == 0 {
        return Err(FamilyError::InvalidParameter("no trees given".into()));
    }
    if spec.glue_pairs.len() != q - 1 {
        return Err(FamilyError::GluePairCount {
            trees: q,
            expected: q - 1,
            got: spec.glue_pairs.len(),
        });
    }

    // line graphs of the coronas, with pendant-edge bookkeeping
    let mut line_graphs = Vec::with_capacity(q);
    let mut tree_orders = Vec::with_capacity(q);
    for (index, edges) in spec.trees.iter().enumerate() {
        let order = edges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .max()
            .map_or(0, |m| m + 1);
        if order < 2 {
            return Err(FamilyError::NotATree { index });
        }
        let tree = Graph::new(order, edges)?;
        if !tree.is_tree() {
            return Err(FamilyError::NotATree { index });
        }
        let corona = tree.corona()?;
        let (line, edge_map) = corona.line_graph()?;
        // pendant edges are (w, w + order); everything else is a tree edge
        let mut pendant_of = vec![usize::MAX; order];
        let mut b_local = VertexSet::EMPTY;
        for (lv, &(u, v)) in edge_map.iter().enumerate() {
            if v >= order {
                debug_assert_eq!(v, u + order);
                pendant_of[u] = lv;
                b_local = b_local.with(lv);
            }
        }
        tree_orders.push(order);
        line_graphs.push((line, pendant_of, b_local));
    }

    // disjoint union
    let total: usize = line_graphs.iter().map(|(l, _, _)| l.order()).sum();
    if total > MAX_ORDER {
        return Err(FamilyError::Graph(GraphError::UnsupportedOrder {
            n: total,
        }));
    }
    let mut offsets = Vec::with_capacity(q);
    let mut adj = Vec::with_capacity(total);
    let mut b_union = VertexSet::EMPTY;
    for (line, _, b_local) in &line_graphs {
        let off = adj.len();
        offsets.push(off);
        for v in line.vertices() {
            let shifted: VertexSet = line.neighbors(v).iter().map(|u| u + off).collect();
            adj.push(shifted);
        }
        for v in b_local.iter() {
            b_union = b_union.with(v + off);
        }
    }

    // resolve and validate glue references
    let mut glue_vertices = BTreeSet::new();
    let mut contractions = Vec::new();
    let union_graph = Graph::from_adjacency(adj.clone());
    for &(ga, gb) in &spec.glue_pairs {
        if ga.tree == gb.tree {
            return Err(FamilyError::SelfGlue { tree: ga.tree });
        }
        let mut resolve = |r: GlueRef| -> Result<Vertex, FamilyError> {
            if r.tree >= q || r.vertex >= tree_orders[r.tree] {
                return Err(FamilyError::BadGlueRef {
                    tree: r.tree,
                    vertex: r.vertex,
                });
            }
            let lv = line_graphs[r.tree].1[r.vertex];
            let global = offsets[r.tree] + lv;
            if !glue_vertices.insert(global) {
                return Err(FamilyError::DuplicateGlueVertex {
                    tree: r.tree,
                    vertex: r.vertex,
                });
            }
            if !union_graph.is_simplicial(global) {
                return Err(FamilyError::NotSimplicial { vertex: global });
            }
            Ok(global)
        };
        contractions.push((resolve(ga)?, resolve(gb)?));
    }

    // contract each pair, keeping the first vertex
    let mut alive = vec![true; total];
    for &(keep, drop) in &contractions {
        if adj[keep].contains(drop) || !adj[keep].is_disjoint(adj[drop]) {
            return Err(FamilyError::ParallelStructure { a: keep, b: drop });
        }
        let drop_neighbors = adj[drop];
        for w in drop_neighbors.iter() {
            adj[w] = adj[w].without(drop).with(keep);
        }
        adj[keep] = adj[keep].union(drop_neighbors);
        adj[drop] = VertexSet::EMPTY;
        alive[drop] = false;
    }

    // compact ids
    let mut new_id = vec![usize::MAX; total];
    let mut next = 0;
    for v in 0..total {
        if alive[v] {
            new_id[v] = next;
            next += 1;
        }
    }
    let compact: Vec<VertexSet> = (0..total)
        .filter(|&v| alive[v])
        .map(|v| adj[v].iter().map(|u| new_id[u]).collect())
        .collect();
    let mut graph = Graph::from_adjacency(compact);
    let n = graph.order();

    let b: VertexSet = b_union
        .iter()
        .filter(|&v| alive[v])
        .map(|v| new_id[v])
        .collect();
    let a = b.complement(n);
    for v in graph.vertices() {
        graph.set_label(v, if b.contains(v) { "b" } else { "a" });
    }

    // validation: global shape
    if !graph.is_connected() {
        return Err(FamilyError::PartitionInvariant("not connected".into()));
    }
    if !graph.is_claw_free() {
        return Err(FamilyError::PartitionInvariant("not claw-free".into()));
    }
    if graph.clique_graph().map(|cg| !cg.is_tree()).unwrap_or(true) {
        return Err(FamilyError::CliqueGraphNotTree);
    }
    // validation: the (A, B) partition
    if n.is_multiple_of(2) || b.len() != n.div_ceil(2) || a.len() != (n - 1) / 2 {
        return Err(FamilyError::PartitionInvariant(format!(
            "expected |A| = (n-1)/2 and |B| = (n+1)/2, got |A| = {}, |B| = {}, n = {n}",
            a.len(),
            b.len()
        )));
    }
    if !crate::invariants::is_independent(&graph, b) {
        return Err(FamilyError::PartitionInvariant(
            "B is not independent".into(),
        ));
    }
    for v in a.iter() {
        let nb = graph.neighbors(v).intersection(b).len();
        if nb != 2 {
            return Err(FamilyError::PartitionInvariant(format!(
                "vertex {v} of A has {nb} neighbors in B, expected 2"
            )));
        }
    }

    Ok(PartitionedGraph { graph, a, b })
}

/// Decodes a pruefer sequence into the labeled tree on `len + 2` vertices.
pub fn tree_from_prufer(seq: &[usize]) -> Result<Graph, FamilyError> {
    let n = seq.len() + 2;
    if n > MAX_ORDER {
        return Err(FamilyError::BadPrufer(format!("order {n} too large")));
    }
    if let Some(&bad) = seq.iter().find(|&&a| a >= n) {
        return Err(FamilyError::BadPrufer(format!(
            "entry {bad} out of range for order {n}"
        )));
    }
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, a));
        degree[leaf] -= 1;
        degree[a] -= 1;
    }
    let last: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
    debug_assert_eq!(last.len(), 2);
    edges.push((last[0], last[1]));
    Ok(Graph::new(n, &edges)?)
}

/// All `n^(n-2)` labeled trees on `n` vertices, by pruefer enumeration.
/// Capped at `n <= 6`.
pub fn labeled_trees(n: usize) -> Result<Vec<Graph>, FamilyError> {
    if n == 0 || n > 6 {
        return Err(FamilyError::InvalidParameter(format!(
            "labeled tree enumeration supports 1 <= n <= 6, got {n}"
        )));
    }
    if n == 1 {
        return Ok(vec![Graph::new(1, &[])?]);
    }
    let len = n - 2;
    let count = n.pow(len as u32);
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        let mut seq = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            seq.push(c % n);
            c /= n;
        }
        out.push(tree_from_prufer(&seq)?);
    }
    Ok(out)
}

/// Every family member generated from trees of the given orders with at most
/// `q_max` trees, over every admissible glue choice.
pub fn family_f_members(
    tree_orders: std::ops::RangeInclusive<usize>,
    q_max: usize,
) -> Result<Vec<PartitionedGraph>, FamilyError> {
    assert!(
        (1..=2).contains(&q_max),
        "member enumeration implemented for q <= 2"
    );
    let mut trees = Vec::new();
    for n in tree_orders {
        if n < 2 {
            continue;
        }
        trees.extend(labeled_trees(n)?);
    }
    let mut out = Vec::new();
    for t in &trees {
        out.push(build_family_f(&FamilyFSpec {
            trees: vec![t.edges()],
            glue_pairs: vec![],
        })?);
    }
    if q_max >= 2 {
        for t1 in &trees {
            for t2 in &trees {
                for v1 in t1.vertices() {
                    for v2 in t2.vertices() {
                        let spec = FamilyFSpec {
                            trees: vec![t1.edges(), t2.edges()],
                            glue_pairs: vec![(
                                GlueRef {
                                    tree: 0,
                                    vertex: v1,
                                },
                                GlueRef {
                                    tree: 1,
                                    vertex: v2,
                                },
                            )],
                        };
                        out.push(build_family_f(&spec)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Parses the plain-text family spec format:
///
/// ```text
/// # one tree per line, edges as u-v pairs
/// tree 0-1 1-2
/// tree 0-1
/// # glue pendant edges: treeIndex:vertexId treeIndex:vertexId
/// glue 0:2 1:0
/// ```
///
/// Blank lines and `#` comments (whole-line or trailing) are ignored.
pub fn parse_family_spec(text: &str) -> Result<FamilyFSpec, FamilyError> {
    let mut spec = FamilyFSpec::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut parts = content.split_whitespace();
        match parts.next() {
            Some("tree") => {
                let mut edges = Vec::new();
                for token in parts {
                    let (u, v) = token.split_once('-').ok_or_else(|| FamilyError::Parse {
                        line,
                        msg: format!("expected u-v edge, got {token:?}"),
                    })?;
                    let parse = |s: &str| {
                        s.parse::<usize>().map_err(|_| FamilyError::Parse {
                            line,
                            msg: format!("bad vertex id {s:?}"),
                        })
                    };
                    edges.push((parse(u)?, parse(v)?));
                }
                if edges.is_empty() {
                    return Err(FamilyError::Parse {
                        line,
                        msg: "tree line has no edges".into(),
                    });
                }
                spec.trees.push(edges);
            }
            Some("glue") => {
                let mut refs = Vec::new();
                for token in parts {
                    let (t, v) = token.split_once(':').ok_or_else(|| FamilyError::Parse {
                        line,
                        msg: format!("expected tree:vertex, got {token:?}"),
                    })?;
                    let parse = |s: &str| {
                        s.parse::<usize>().map_err(|_| FamilyError::Parse {
                            line,
                            msg: format!("bad index {s:?}"),
                        })
                    };
                    refs.push(GlueRef {
                        tree: parse(t)?,
                        vertex: parse(v)?,
                    });
                }
                if refs.len() != 2 {
                    return Err(FamilyError::Parse {
                        line,
                        msg: format!("glue line needs exactly two references, got {}", refs.len()),
                    });
                }
                spec.glue_pairs.push((refs[0], refs[1]));
            }
            Some(other) => {
                return Err(FamilyError::Parse {
                    line,
                    msg: format!("unknown directive {other:?}"),
                })
            }
            None => unreachable!("empty content filtered above"),
        }
    }
    if spec.trees.is_empty() {
        return Err(FamilyError::Parse {
            line: 0,
            msg: "spec contains no trees".into(),
        });
    }
    Ok(spec)
}
