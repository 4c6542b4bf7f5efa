//! Mixed graphs: a simple underlying graph in which any subset of the edges
//! carries a direction.
//!
//! Vertices are the dense indices `0..n`. Every edge is stored once, keyed by
//! its endpoints in increasing order, with an [`EdgeKind`] that records the
//! direction relative to that order. Deletions relabel the surviving vertices
//! and hand back the relabeling so callers can translate indices.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge between {u} and {v}")]
    DuplicatePair { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("no edge between {u} and {v}")]
    NoSuchEdge { u: usize, v: usize },
}

/// Direction of an edge `(u, v)` stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Undirected,
    /// Arc `u -> v`.
    Forward,
    /// Arc `v -> u`.
    Backward,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 3] = [EdgeKind::Undirected, EdgeKind::Forward, EdgeKind::Backward];

    /// Exponent `k` with `h_uv = i^k` when traversing from the smaller endpoint
    /// to the larger one.
    pub fn exponent(self) -> u8 {
        match self {
            EdgeKind::Undirected => 0,
            EdgeKind::Forward => 1,
            EdgeKind::Backward => 3,
        }
    }

    pub fn is_directed(self) -> bool {
        self != EdgeKind::Undirected
    }

    pub fn reversed(self) -> EdgeKind {
        match self {
            EdgeKind::Undirected => EdgeKind::Undirected,
            EdgeKind::Forward => EdgeKind::Backward,
            EdgeKind::Backward => EdgeKind::Forward,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
}

const NO_EDGE: u32 = u32::MAX;

/// A simple mixed graph. Immutable once built.
#[derive(Clone)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<Edge>,
    neighbors: Vec<Vec<usize>>,
    // n*n table of edge indices
    lookup: Vec<u32>,
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for MixedGraph {}

impl std::hash::Hash for MixedGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedGraph({})", self.compact())
    }
}

impl MixedGraph {
    /// Builds a graph from `(u, v, kind)` triples. Pairs may be given in
    /// either order; `(u, v, Forward)` always means the arc `u -> v`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, EdgeKind)>,
    {
        let mut list = Vec::new();
        for (u, v, kind) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let edge = if u < v {
                Edge { u, v, kind }
            } else {
                Edge {
                    u: v,
                    v: u,
                    kind: kind.reversed(),
                }
            };
            list.push(edge);
        }
        Self::from_canonical(n, list)
    }

    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new()).expect("edgeless graph is valid")
    }

    /// Undirected graph from unordered pairs.
    pub fn undirected<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(
            n,
            pairs.into_iter().map(|(u, v)| (u, v, EdgeKind::Undirected)),
        )
    }

    fn from_canonical(n: usize, mut edges: Vec<Edge>) -> Result<Self, GraphError> {
        edges.sort_by_key(|e| (e.u, e.v));
        let mut lookup = vec![NO_EDGE; n * n];
        let mut neighbors = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            debug_assert!(e.u < e.v);
            if lookup[e.u * n + e.v] != NO_EDGE {
                return Err(GraphError::DuplicatePair { u: e.u, v: e.v });
            }
            lookup[e.u * n + e.v] = i as u32;
            lookup[e.v * n + e.u] = i as u32;
            neighbors[e.u].push(e.v);
            neighbors[e.v].push(e.u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(MixedGraph {
            n,
            edges,
            neighbors,
            lookup,
        })
    }

    /// Same underlying graph with the edge kinds replaced, in edge order.
    pub fn with_kinds(&self, kinds: &[EdgeKind]) -> MixedGraph {
        assert_eq!(kinds.len(), self.edges.len(), "one kind per edge");
        let mut g = self.clone();
        for (e, &k) in g.edges.iter_mut().zip(kinds) {
            e.kind = k;
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn kinds(&self) -> Vec<EdgeKind> {
        self.edges.iter().map(|e| e.kind).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of the edge `{u, v}` in [`MixedGraph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.lookup[u * self.n + v] {
            NO_EDGE => None,
            i => Some(i as usize),
        }
    }

    /// Exponent `k` such that `h_uv = i^k`, or `None` when `u` and `v` are
    /// not adjacent.
    pub fn exponent(&self, u: usize, v: usize) -> Option<u8> {
        let e = &self.edges[self.edge_index(u, v)?];
        let k = e.kind.exponent();
        Some(if u < v { k } else { (4 - k) % 4 })
    }

    pub fn is_undirected(&self) -> bool {
        self.edges.iter().all(|e| e.kind == EdgeKind::Undirected)
    }

    /// The underlying graph: every edge made undirected.
    pub fn underlying(&self) -> MixedGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.kind = EdgeKind::Undirected;
        }
        g
    }

    /// Removes `v` and its incident edges. The returned map sends each old
    /// vertex to its new index (`None` for `v` itself).
    pub fn delete_vertex(&self, v: usize) -> Result<(MixedGraph, Vec<Option<usize>>), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        let (g, _) = self.induced_subgraph(&keep)?;
        let map = (0..self.n)
            .map(|w| match w.cmp(&v) {
                std::cmp::Ordering::Less => Some(w),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(w - 1),
            })
            .collect();
        Ok((g, map))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<MixedGraph, GraphError> {
        let idx = self
            .edge_index(u, v)
            .ok_or(GraphError::NoSuchEdge { u, v })?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Self::from_canonical(self.n, edges)
    }

    /// Subgraph induced on `vertices`. The new vertex `i` is the `i`-th
    /// smallest element of the set; that sorted list is returned as the map.
    pub fn induced_subgraph(
        &self,
        vertices: &[usize],
    ) -> Result<(MixedGraph, Vec<usize>), GraphError> {
        let mut set = vertices.to_vec();
        set.sort_unstable();
        set.dedup();
        if let Some(&w) = set.iter().find(|&&w| w >= self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: w,
                n: self.n,
            });
        }
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &w) in set.iter().enumerate() {
            new_index[w] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_index[e.u] != usize::MAX && new_index[e.v] != usize::MAX)
            .map(|e| Edge {
                u: new_index[e.u],
                v: new_index[e.v],
                kind: e.kind,
            })
            .collect();
        Ok((Self::from_canonical(set.len(), edges)?, set))
    }

    /// Appends a vertex joined to `u` by an undirected edge.
    pub fn with_pendant(&self, u: usize) -> Result<MixedGraph, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        let mut edges = self.edges.clone();
        edges.push(Edge {
            u,
            v: self.n,
            kind: EdgeKind::Undirected,
        });
        Self::from_canonical(self.n + 1, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> MixedGraph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.kind));
        MixedGraph::new(self.n, edges).expect("permutation preserves simplicity")
    }

    /// Connectivity of the underlying graph; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.neighbors[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edges.len() + 1 == self.n
    }

    /// Connected with every vertex of degree two.
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.neighbors.iter().all(|l| l.len() == 2)
    }

    /// One-line rendering of the `.mg` text, for reports and messages.
    pub fn compact(&self) -> String {
        self.to_string().trim_end().replace('\n', "; ")
    }
}

impl fmt::Display for MixedGraph {
    /// `.mg` serialization: a `v <n>` header, then one edge per line sorted by
    /// endpoints.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "v {}", self.n)?;
        for e in &self.edges {
            match e.kind {
                EdgeKind::Undirected => writeln!(f, "{} -- {}", e.u, e.v)?,
                EdgeKind::Forward => writeln!(f, "{} -> {}", e.u, e.v)?,
                EdgeKind::Backward => writeln!(f, "{} -> {}", e.v, e.u)?,
            }
        }
        Ok(())
    }
}

impl FromStr for MixedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_mixed_graph(s)
    }
}

/// Parses the `.mg` text format.
///
/// ```text
/// # optional comments
/// v 4
/// 0 -- 1
/// 1 -> 2
/// ```
pub fn parse_mixed_graph(text: &str) -> Result<MixedGraph, GraphError> {
    let syntax = |line: usize, message: String| GraphError::Syntax { line, message };
    let mut n = None;
    let mut edges: Vec<Edge> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            match tokens.as_slice() {
                ["v", count] => {
                    let count = count
                        .parse::<usize>()
                        .map_err(|_| syntax(line_no, format!("bad vertex count {count:?}")))?;
                    n = Some(count);
                    continue;
                }
                _ => return Err(syntax(line_no, "expected header \"v <n>\"".into())),
            }
        };
        let [a, op, b] = tokens.as_slice() else {
            return Err(syntax(
                line_no,
                format!("expected \"a -- b\" or \"a -> b\", got {line:?}"),
            ));
        };
        let parse_vertex = |tok: &str| -> Result<usize, GraphError> {
            let v = tok
                .parse::<usize>()
                .map_err(|_| syntax(line_no, format!("bad vertex {tok:?}")))?;
            if v >= count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: count,
                });
            }
            Ok(v)
        };
        let (a, b) = (parse_vertex(a)?, parse_vertex(b)?);
        let kind = match *op {
            "--" => EdgeKind::Undirected,
            "->" => EdgeKind::Forward,
            other => return Err(syntax(line_no, format!("unknown edge operator {other:?}"))),
        };
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        let edge = if a < b {
            Edge { u: a, v: b, kind }
        } else {
            Edge {
                u: b,
                v: a,
                kind: kind.reversed(),
            }
        };
        if edges.iter().any(|e| e.u == edge.u && e.v == edge.v) {
            return Err(GraphError::DuplicatePair {
                u: edge.u,
                v: edge.v,
            });
        }
        edges.push(edge);
    }
    let n = n.ok_or_else(|| syntax(0, "missing header \"v <n>\"".into()))?;
    MixedGraph::from_canonical(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    const D1: &str = "v 4\n0 -- 1\n0 -- 3\n1 -- 3\n1 -> 2\n2 -> 3";

    #[test]
    fn parses_single_edge() {
        let g: MixedGraph = "v 2\n0 -- 1".parse().unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(
            g.edges(),
            &[Edge {
                u: 0,
                v: 1,
                kind: EdgeKind::Undirected
            }]
        );
    }

    #[test]
    fn parses_d1_with_comments() {
        let g: MixedGraph = format!("# D1\n\n{D1}\n").parse().unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.exponent(1, 2), Some(1));
        assert_eq!(g.exponent(2, 1), Some(3));
        assert_eq!(g.exponent(3, 2), Some(3));
        assert_eq!(g.exponent(0, 3), Some(0));
        assert_eq!(g.exponent(0, 2), None);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            "v 2\n0 -- 1\n1 -> 0".parse::<MixedGraph>(),
            Err(GraphError::DuplicatePair { u: 0, v: 1 })
        );
        assert_eq!(
            "v 2\n1 -- 1".parse::<MixedGraph>(),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            "v 2\n0 -- 2".parse::<MixedGraph>(),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert!(matches!(
            "0 -- 1".parse::<MixedGraph>(),
            Err(GraphError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            "v 3\n0 => 1".parse::<MixedGraph>(),
            Err(GraphError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            "v 3\n0 -- x".parse::<MixedGraph>(),
            Err(GraphError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            "# only\n".parse::<MixedGraph>(),
            Err(GraphError::Syntax { .. })
        ));
    }

    #[test]
    fn serializes_sorted_with_arc_heads() {
        let g =
            MixedGraph::new(3, [(2, 0, EdgeKind::Forward), (0, 1, EdgeKind::Undirected)]).unwrap();
        assert_eq!(g.to_string(), "v 3\n0 -- 1\n2 -> 0\n");
        assert_eq!(g.to_string().parse::<MixedGraph>().unwrap(), g);
    }

    #[test]
    fn underlying_forgets_directions() {
        let p3 =
            MixedGraph::new(3, [(0, 1, EdgeKind::Forward), (1, 2, EdgeKind::Forward)]).unwrap();
        let u = p3.underlying();
        assert!(u.is_undirected());
        assert_eq!(u, MixedGraph::undirected(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(u.underlying(), u);
    }

    #[test]
    fn delete_vertex_relabels() {
        let d1: MixedGraph = D1.parse().unwrap();
        let (g, map) = d1.delete_vertex(2).unwrap();
        assert_eq!(map, vec![Some(0), Some(1), None, Some(2)]);
        assert_eq!(
            g,
            MixedGraph::undirected(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
        );

        let (empty, _) = MixedGraph::empty(1).delete_vertex(0).unwrap();
        assert_eq!(empty.n(), 0);
        assert!(empty.is_connected());

        let p3 = MixedGraph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.delete_vertex(1).unwrap().0, MixedGraph::empty(2));
        assert!(p3.delete_vertex(3).is_err());
    }

    #[test]
    fn delete_edge_keeps_vertices() {
        let k2 = MixedGraph::undirected(2, [(0, 1)]).unwrap();
        assert_eq!(k2.delete_edge(1, 0).unwrap(), MixedGraph::empty(2));
        assert_eq!(
            k2.delete_edge(0, 0),
            Err(GraphError::NoSuchEdge { u: 0, v: 0 })
        );
    }

    #[test]
    fn induced_subgraph_keeps_kinds() {
        let d1: MixedGraph = D1.parse().unwrap();
        let (g, map) = d1.induced_subgraph(&[3, 2, 1]).unwrap();
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(g.exponent(0, 1), Some(1));
        assert_eq!(g.exponent(1, 2), Some(1));
        assert_eq!(g.exponent(0, 2), Some(0));
        assert_eq!(d1.induced_subgraph(&[]).unwrap().0.n(), 0);
        assert_eq!(d1.induced_subgraph(&[0, 1, 2, 3]).unwrap().0, d1);
        assert!(d1.induced_subgraph(&[4]).is_err());
    }

    #[test]
    fn connectivity() {
        let d1: MixedGraph = D1.parse().unwrap();
        assert!(d1.is_connected());
        assert!(!MixedGraph::undirected(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(MixedGraph::empty(1).is_connected());
        assert!(MixedGraph::empty(0).is_connected());
    }
}
