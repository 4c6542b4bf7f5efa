//! Cycles, cycle values and elementary subgraphs of mixed graphs.
//!
//! Cycles are simple cycles of the underlying graph, stored in a canonical
//! traversal: smallest vertex first, and the second vertex smaller than the
//! last. That choice fixes both the rotation and the direction, so the value
//! of a cycle (the product of Hermitian entries along it) is well defined.
//!
//! Enumeration is a plain depth-first search and is exponential on dense
//! graphs. The graphs this crate classifies have few cycles.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeKind, MixedGraph};
use crate::spectra::GaussInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{0:?} is not a cycle of the graph")]
    NotACycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Puts an arbitrary traversal of a cycle into canonical form.
    pub fn new(mut vertices: Vec<usize>) -> Cycle {
        if let Some(pos) = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .map(|(i, _)| i)
        {
            vertices.rotate_left(pos);
        }
        let len = vertices.len();
        if len >= 3 && vertices[1] > vertices[len - 1] {
            vertices[1..].reverse();
        }
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive pairs along the canonical direction, closing pair included.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| (self.vertices[i], self.vertices[(i + 1) % len]))
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.steps()
            .any(|(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    /// The same cycle traversed the other way round (not canonical).
    pub fn reversed_traversal(&self) -> Vec<usize> {
        let mut r = self.vertices.clone();
        r[1..].reverse();
        r
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Value class of a cycle in its canonical direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CycleSign {
    Positive,
    Negative,
    ImagPlus,
    ImagMinus,
}

impl CycleSign {
    pub fn from_exponent(k: u8) -> CycleSign {
        match k % 4 {
            0 => CycleSign::Positive,
            1 => CycleSign::ImagPlus,
            2 => CycleSign::Negative,
            _ => CycleSign::ImagMinus,
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, CycleSign::Positive | CycleSign::Negative)
    }

    pub fn class(self) -> SignClass {
        match self {
            CycleSign::Positive => SignClass::Positive,
            CycleSign::Negative => SignClass::Negative,
            CycleSign::ImagPlus | CycleSign::ImagMinus => SignClass::Imaginary,
        }
    }
}

/// The three-way view used by the classification: the two imaginary values
/// are swapped by reversing the traversal, so they are one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SignClass {
    Positive,
    Negative,
    Imaginary,
}

/// All simple cycles of the underlying graph, canonical, sorted by length and
/// then vertex list.
pub fn enumerate_cycles(g: &MixedGraph) -> Vec<Cycle> {
    let n = g.n();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        extend_path(g, s, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
    }
    out.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    out
}

fn extend_path(
    g: &MixedGraph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().expect("path is never empty");
    for &w in g.neighbors(last) {
        if w == start {
            if path.len() >= 3 && path[1] < last {
                out.push(Cycle {
                    vertices: path.clone(),
                });
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend_path(g, start, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Sum of the exponents `k` (with `h = i^k`) along a closed traversal, mod 4.
pub fn walk_exponent(g: &MixedGraph, traversal: &[usize]) -> Result<u8, StructureError> {
    let len = traversal.len();
    let not_cycle = || StructureError::NotACycle(traversal.to_vec());
    if len < 3 {
        return Err(not_cycle());
    }
    let mut seen = traversal.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != len {
        return Err(not_cycle());
    }
    let mut total = 0u8;
    for i in 0..len {
        let k = g
            .exponent(traversal[i], traversal[(i + 1) % len])
            .ok_or_else(not_cycle)?;
        total = (total + k) % 4;
    }
    Ok(total)
}

/// `h(C)`: product of Hermitian entries along the canonical direction.
pub fn cycle_value(g: &MixedGraph, c: &Cycle) -> Result<GaussInt, StructureError> {
    walk_exponent(g, &c.vertices).map(GaussInt::unit)
}

pub fn classify_cycle(g: &MixedGraph, c: &Cycle) -> Result<CycleSign, StructureError> {
    walk_exponent(g, &c.vertices).map(CycleSign::from_exponent)
}

/// Number of directed edges on a cycle.
pub fn directed_edge_count(g: &MixedGraph, c: &Cycle) -> usize {
    c.steps()
        .filter_map(|(a, b)| g.edge_index(a, b))
        .filter(|&i| g.edges()[i].kind.is_directed())
        .count()
}

/// A cycle as the edge indices it uses, in canonical order, each flagged
/// `true` when the traversal runs from the larger endpoint to the smaller.
/// Lets callers evaluate the cycle under any kind vector for the same
/// underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSteps {
    pub steps: Vec<(usize, bool)>,
}

impl CycleSteps {
    pub fn new(g: &MixedGraph, c: &Cycle) -> Result<CycleSteps, StructureError> {
        let steps = c
            .steps()
            .map(|(a, b)| g.edge_index(a, b).map(|i| (i, a > b)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| StructureError::NotACycle(c.vertices.clone()))?;
        Ok(CycleSteps { steps })
    }

    /// Largest edge index on the cycle.
    pub fn last_edge(&self) -> usize {
        self.steps.iter().map(|s| s.0).max().unwrap_or(0)
    }

    /// Exponent sum mod 4 when the edges carry `kinds`.
    pub fn exponent(&self, kinds: &[EdgeKind]) -> u8 {
        self.steps.iter().fold(0u8, |acc, &(i, back)| {
            let k = kinds[i].exponent();
            (acc + if back { (4 - k) % 4 } else { k }) % 4
        })
    }

    pub fn sign(&self, kinds: &[EdgeKind]) -> CycleSign {
        CycleSign::from_exponent(self.exponent(kinds))
    }
}

/// Shortest cycle length of the underlying graph, `None` for forests.
///
/// Breadth-first search from every vertex; independent of
/// [`enumerate_cycles`].
pub fn girth(g: &MixedGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// No 4-cycle as a subgraph (not only as an induced subgraph): no two
/// distinct vertices share two neighbours.
pub fn is_c4_free(g: &MixedGraph) -> bool {
    let n = g.n();
    let mut seen_with = vec![usize::MAX; n];
    for a in 0..n {
        // mark vertices already reached from `a` through one middle vertex
        seen_with.iter_mut().for_each(|s| *s = usize::MAX);
        for &m in g.neighbors(a) {
            for &b in g.neighbors(m) {
                if b == a {
                    continue;
                }
                if seen_with[b] != usize::MAX && seen_with[b] != m {
                    return false;
                }
                seen_with[b] = m;
            }
        }
    }
    true
}

/// A vertex-disjoint union of single edges and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementarySubgraph {
    pub edges: Vec<(usize, usize)>,
    pub cycles: Vec<Cycle>,
}

impl ElementarySubgraph {
    pub fn order(&self) -> usize {
        2 * self.edges.len() + self.cycles.iter().map(Cycle::len).sum::<usize>()
    }

    /// `t(H)`: number of components.
    pub fn component_count(&self) -> usize {
        self.edges.len() + self.cycles.len()
    }

    /// `r(H)`: number of cycles.
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// `s(H)`: number of negative cycles in `g`.
    pub fn negative_cycle_count(&self, g: &MixedGraph) -> usize {
        self.cycles
            .iter()
            .filter(|c| classify_cycle(g, c) == Ok(CycleSign::Negative))
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleFilter {
    Any,
    /// Only subgraphs whose cycles are all real.
    RealOnly,
}

/// Calls `visit` once for every elementary subgraph of `g`, restricted to
/// order `order` when given. Nothing is materialized beyond the current
/// subgraph, so this is the form to use on larger graphs.
pub fn for_each_elementary<F>(
    g: &MixedGraph,
    order: Option<usize>,
    filter: CycleFilter,
    mut visit: F,
) where
    F: FnMut(&ElementarySubgraph),
{
    let n = g.n();
    if order.is_some_and(|o| o > n) {
        return;
    }
    let mut by_min: Vec<Vec<Cycle>> = vec![Vec::new(); n];
    for c in enumerate_cycles(g) {
        if filter == CycleFilter::RealOnly
            && !classify_cycle(g, &c)
                .map(CycleSign::is_real)
                .unwrap_or(false)
        {
            continue;
        }
        by_min[c.vertices[0]].push(c);
    }
    let mut state = ElementaryWalk {
        g,
        by_min,
        order,
        used: vec![false; n],
        covered: 0,
        current: ElementarySubgraph {
            edges: Vec::new(),
            cycles: Vec::new(),
        },
    };
    state.step(0, &mut visit);
}

struct ElementaryWalk<'a> {
    g: &'a MixedGraph,
    by_min: Vec<Vec<Cycle>>,
    order: Option<usize>,
    used: Vec<bool>,
    covered: usize,
    current: ElementarySubgraph,
}

impl ElementaryWalk<'_> {
    fn step<F: FnMut(&ElementarySubgraph)>(&mut self, v: usize, visit: &mut F) {
        let n = self.g.n();
        if let Some(o) = self.order {
            if self.covered > o || self.covered + (n - v) < o {
                return;
            }
        }
        if v == n {
            if self.order.is_none_or(|o| o == self.covered) {
                visit(&self.current);
            }
            return;
        }
        if self.used[v] {
            self.step(v + 1, visit);
            return;
        }
        self.step(v + 1, visit);

        for &w in self.g.neighbors(v) {
            if w > v && !self.used[w] {
                self.used[v] = true;
                self.used[w] = true;
                self.covered += 2;
                self.current.edges.push((v, w));
                self.step(v + 1, visit);
                self.current.edges.pop();
                self.covered -= 2;
                self.used[v] = false;
                self.used[w] = false;
            }
        }

        for ci in 0..self.by_min[v].len() {
            let fits = self.by_min[v][ci].vertices.iter().all(|&x| !self.used[x]);
            if !fits {
                continue;
            }
            let cycle = self.by_min[v][ci].clone();
            for &x in &cycle.vertices {
                self.used[x] = true;
            }
            self.covered += cycle.len();
            self.current.cycles.push(cycle);
            self.step(v + 1, visit);
            let cycle = self.current.cycles.pop().expect("pushed above");
            self.covered -= cycle.len();
            for &x in &cycle.vertices {
                self.used[x] = false;
            }
        }
    }
}

/// All elementary subgraphs of order `order`.
pub fn enumerate_elementary(
    g: &MixedGraph,
    order: usize,
    filter: CycleFilter,
) -> Vec<ElementarySubgraph> {
    let mut out = Vec::new();
    for_each_elementary(g, Some(order), filter, |h| out.push(h.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeKind;

    fn cycle_graph(n: usize) -> MixedGraph {
        MixedGraph::undirected(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn d2() -> MixedGraph {
        // u1..u4 -> 0..3
        "v 4\n3 -> 0\n0 -- 1\n2 -> 3\n0 -> 2\n2 -- 1\n3 -- 1"
            .parse()
            .unwrap()
    }

    #[test]
    fn canonical_cycle_form() {
        assert_eq!(Cycle::new(vec![3, 1, 2]).vertices(), &[1, 2, 3]);
        assert_eq!(Cycle::new(vec![2, 1, 3]).vertices(), &[1, 2, 3]);
        assert_eq!(Cycle::new(vec![4, 0, 5, 2]).vertices(), &[0, 4, 2, 5]);
    }

    #[test]
    fn hexagon_has_one_cycle() {
        let cycles = enumerate_cycles(&cycle_graph(6));
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn k4_cycles() {
        let cycles = enumerate_cycles(&d2());
        let lens: Vec<usize> = cycles.iter().map(Cycle::len).collect();
        assert_eq!(lens, vec![3, 3, 3, 3, 4, 4, 4]);
    }

    #[test]
    fn cycle_values_and_signs() {
        let tri = cycle_graph(3);
        let c = &enumerate_cycles(&tri)[0];
        assert_eq!(cycle_value(&tri, c), Ok(GaussInt::ONE));

        // u1 u2 u3 u4 of D2
        let g = d2();
        let quad = Cycle::new(vec![0, 1, 2, 3]);
        assert_eq!(cycle_value(&g, &quad), Ok(-GaussInt::ONE));
        assert_eq!(classify_cycle(&g, &quad), Ok(CycleSign::Negative));

        let directed = MixedGraph::new(
            3,
            [
                (0, 1, EdgeKind::Forward),
                (1, 2, EdgeKind::Forward),
                (2, 0, EdgeKind::Forward),
            ],
        )
        .unwrap();
        let c = &enumerate_cycles(&directed)[0];
        assert_eq!(c.vertices(), &[0, 1, 2]);
        assert_eq!(cycle_value(&directed, c), Ok(-GaussInt::I));
        assert_eq!(classify_cycle(&directed, c), Ok(CycleSign::ImagMinus));

        assert!(cycle_value(&tri, &Cycle::new(vec![0, 1])).is_err());
        assert!(cycle_value(&g, &Cycle::new(vec![0, 1, 4])).is_err());
    }

    #[test]
    fn girth_and_c4() {
        let path = MixedGraph::undirected(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(girth(&path), None);
        assert!(is_c4_free(&path));
        assert_eq!(girth(&d2()), Some(3));
        assert!(!is_c4_free(&d2()));
        assert!(!is_c4_free(&cycle_graph(4)));
        assert!(is_c4_free(&cycle_graph(5)));
        assert_eq!(girth(&cycle_graph(7)), Some(7));
    }

    #[test]
    fn elementary_counts() {
        let p3 = MixedGraph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(enumerate_elementary(&p3, 2, CycleFilter::Any).len(), 2);
        assert_eq!(enumerate_elementary(&p3, 0, CycleFilter::Any).len(), 1);
        assert_eq!(enumerate_elementary(&p3, 1, CycleFilter::Any).len(), 0);
        assert_eq!(
            enumerate_elementary(&cycle_graph(4), 4, CycleFilter::Any).len(),
            3
        );
        let k3 = cycle_graph(3);
        assert_eq!(enumerate_elementary(&k3, 3, CycleFilter::Any).len(), 1);
        assert_eq!(enumerate_elementary(&k3, 2, CycleFilter::Any).len(), 3);
        assert!(enumerate_elementary(&k3, 4, CycleFilter::Any).is_empty());

        let imag = MixedGraph::new(
            3,
            [
                (0, 1, EdgeKind::Forward),
                (1, 2, EdgeKind::Undirected),
                (0, 2, EdgeKind::Undirected),
            ],
        )
        .unwrap();
        assert_eq!(
            enumerate_elementary(&imag, 3, CycleFilter::RealOnly).len(),
            0
        );
        assert_eq!(enumerate_elementary(&imag, 3, CycleFilter::Any).len(), 1);
    }
}
