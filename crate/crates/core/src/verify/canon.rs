//! Canonical labeling and isomorph-free generation of small simple graphs.
//!
//! Graphs are adjacency bit rows on at most [`MAX_VERTICES`] vertices. The
//! canonical code is the least upper-triangle bit string over the leaves of
//! an individualization-refinement search tree. Cells whose vertices are
//! pairwise twins are branched on once, since swapping twins is an
//! automorphism.
//!
//! Generation adds one vertex at a time, joined to a subset of the existing
//! vertices, and deduplicates each level by canonical code. Every connected
//! graph has a vertex whose removal leaves it connected, and being `C4`-free
//! is inherited by subgraphs, so extending only the graphs of the previous
//! level reaches everything.

use std::collections::BTreeSet;

use crate::graph::MixedGraph;

pub const MAX_VERTICES: usize = 11;

/// Simple undirected graph as adjacency bit rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Adjacency {
    pub n: usize,
    pub rows: Vec<u16>,
}

impl Adjacency {
    pub fn from_graph(g: &MixedGraph) -> Self {
        assert!(
            g.n() <= MAX_VERTICES,
            "canonical labeling supports at most {MAX_VERTICES} vertices"
        );
        let mut rows = vec![0u16; g.n()];
        for e in g.edges() {
            rows[e.u] |= 1 << e.v;
            rows[e.v] |= 1 << e.u;
        }
        Adjacency { n: g.n(), rows }
    }

    pub fn has(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn to_graph(&self) -> MixedGraph {
        let pairs = (0..self.n).flat_map(|u| {
            (u + 1..self.n)
                .filter(move |&v| self.has(u, v))
                .map(move |v| (u, v))
        });
        MixedGraph::undirected(self.n, pairs.collect::<Vec<_>>())
            .expect("adjacency rows describe a simple graph")
    }

    /// Upper-triangle bits of the graph relabeled so that vertex `order[i]`
    /// becomes `i`.
    fn code_for(&self, order: &[usize]) -> u64 {
        let mut code = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code = code << 1 | u64::from(self.has(order[i], order[j]));
            }
        }
        code
    }

    pub fn from_code(n: usize, code: u64) -> Self {
        let mut rows = vec![0u16; n];
        let mut bit = n * n.saturating_sub(1) / 2;
        for i in 0..n {
            for j in i + 1..n {
                bit -= 1;
                if code >> bit & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Adjacency { n, rows }
    }

    fn are_twins(&self, x: usize, y: usize) -> bool {
        let mask = !((1u16 << x) | (1u16 << y));
        self.rows[x] & mask == self.rows[y] & mask
    }
}

/// Equitable refinement of an ordered partition given as a color per vertex.
/// New colors sort by (old color, multiset of neighbor colors), so the result
/// is invariant under relabeling.
fn refine(adj: &Adjacency, colors: &mut [usize]) {
    let n = adj.n;
    let mut cells = colors.iter().collect::<BTreeSet<_>>().len();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n)
                    .filter(|&w| adj.has(v, w))
                    .map(|w| colors[w])
                    .collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            colors[v] = distinct
                .binary_search(&&signatures[v])
                .expect("signature is present");
        }
        if distinct.len() == cells {
            return;
        }
        cells = distinct.len();
    }
}

fn search(adj: &Adjacency, colors: Vec<usize>, best: &mut Option<u64>) {
    let n = adj.n;
    let mut colors = colors;
    refine(adj, &mut colors);
    let mut cell_sizes = vec![0usize; n];
    for &c in &colors {
        cell_sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| cell_sizes[c] > 1) else {
        let mut order = vec![0; n];
        for v in 0..n {
            order[colors[v]] = v;
        }
        let code = adj.code_for(&order);
        *best = Some(best.map_or(code, |b| b.min(code)));
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let all_twins = cell
        .iter()
        .all(|&x| cell.iter().all(|&y| x == y || adj.are_twins(x, y)));
    let branches = if all_twins { &cell[..1] } else { &cell[..] };
    for &v in branches {
        // v keeps the cell's color, the rest of the cell moves just after it
        let next: Vec<usize> = (0..n)
            .map(|w| 2 * colors[w] + usize::from(colors[w] == target && w != v))
            .collect();
        search(adj, next, best);
    }
}

/// Canonical code: equal for two graphs exactly when they are isomorphic.
pub fn canonical_code(adj: &Adjacency) -> u64 {
    if adj.n <= 1 {
        return 0;
    }
    let mut best = None;
    search(adj, vec![0; adj.n], &mut best);
    best.expect("search reaches at least one leaf")
}

pub fn canonical_form(adj: &Adjacency) -> Adjacency {
    Adjacency::from_code(adj.n, canonical_code(adj))
}

/// Non-isomorphic graphs on exactly `n` vertices, as canonical codes in
/// increasing order, for every `n` in `1..=max_n`.
pub fn generate_levels(max_n: usize, connected: bool, c4_free: bool) -> Vec<Vec<u64>> {
    assert!(
        max_n <= MAX_VERTICES,
        "generation supports at most {MAX_VERTICES} vertices"
    );
    let mut levels: Vec<Vec<u64>> = Vec::new();
    if max_n == 0 {
        return levels;
    }
    levels.push(vec![0]);
    for k in 1..max_n {
        let mut next = BTreeSet::new();
        for &code in &levels[k - 1] {
            let base = Adjacency::from_code(k, code);
            let first = if connected { 1u16 } else { 0 };
            for subset in first..(1u16 << k) {
                if c4_free && !subset_keeps_c4_free(&base, subset) {
                    continue;
                }
                let mut rows = base.rows.clone();
                for (u, row) in rows.iter_mut().enumerate() {
                    if subset >> u & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                rows.push(subset);
                next.insert(canonical_code(&Adjacency { n: k + 1, rows }));
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

/// A new vertex joined to `subset` closes a 4-cycle exactly when two of its
/// neighbours already have a common neighbour.
fn subset_keeps_c4_free(base: &Adjacency, subset: u16) -> bool {
    let members: Vec<usize> = (0..base.n).filter(|&u| subset >> u & 1 == 1).collect();
    members.iter().enumerate().all(|(i, &a)| {
        members[i + 1..]
            .iter()
            .all(|&b| base.rows[a] & base.rows[b] == 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Least code over all relabelings.
    fn brute_canonical(adj: &Adjacency, perms: &[Vec<usize>]) -> u64 {
        perms.iter().map(|p| adj.code_for(p)).min().unwrap_or(0)
    }

    #[test]
    fn canonical_code_matches_brute_force_up_to_six() {
        for n in 1..=6usize {
            let perms = permutations(n);
            let pairs = n * (n - 1) / 2;
            let mut classes_fast = BTreeSet::new();
            let mut classes_slow = BTreeSet::new();
            for code in 0..(1u64 << pairs) {
                let adj = Adjacency::from_code(n, code);
                let fast = canonical_code(&adj);
                let slow = brute_canonical(&adj, &perms);
                classes_fast.insert(fast);
                classes_slow.insert(slow);
                // the fast code is the code of an actual relabeling
                assert!(perms.iter().any(|p| adj.code_for(p) == fast));
            }
            assert_eq!(classes_fast.len(), classes_slow.len(), "n = {n}");
        }
    }

    #[test]
    fn graph_counts_match_published_values() {
        let all: Vec<usize> = generate_levels(7, false, false)
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = generate_levels(7, true, false)
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
        let c4_free: Vec<usize> = generate_levels(7, true, true)
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(c4_free, vec![1, 1, 2, 3, 8, 19, 57]);
    }

    #[test]
    fn code_round_trip() {
        let adj = Adjacency::from_code(5, 0b1011001110);
        assert_eq!(adj.code_for(&[0, 1, 2, 3, 4]), 0b1011001110);
        assert_eq!(Adjacency::from_graph(&adj.to_graph()), adj);
    }
}
