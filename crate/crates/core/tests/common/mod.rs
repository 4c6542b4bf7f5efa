//! Independent oracles and generators shared by the integration tests.

#![allow(dead_code)]

use hermspec::{EdgeKind, MixedGraph};
use proptest::prelude::*;

/// `(re, im)` Gaussian integer product.
fn gmul(a: (i128, i128), b: (i128, i128)) -> (i128, i128) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

/// Entry of `H(D)` built straight from the arc list.
pub fn entry(g: &MixedGraph, u: usize, v: usize) -> (i128, i128) {
    for e in g.edges() {
        let (tail, head) = match e.kind {
            EdgeKind::Undirected => {
                if (e.u, e.v) == (u, v) || (e.u, e.v) == (v, u) {
                    return (1, 0);
                }
                continue;
            }
            EdgeKind::Forward => (e.u, e.v),
            EdgeKind::Backward => (e.v, e.u),
        };
        if (tail, head) == (u, v) {
            return (0, 1);
        }
        if (tail, head) == (v, u) {
            return (0, -1);
        }
    }
    (0, 0)
}

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

fn sign(p: &[usize]) -> i128 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// `det(xI − H(D))` by the permutation expansion.
pub fn char_value_at(g: &MixedGraph, x: i128) -> i128 {
    let n = g.n();
    let m: Vec<Vec<(i128, i128)>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    let (re, im) = entry(g, u, v);
                    if u == v {
                        (x, 0)
                    } else {
                        (-re, -im)
                    }
                })
                .collect()
        })
        .collect();
    let mut total = (0i128, 0i128);
    for p in permutations(n) {
        let mut prod = (sign(&p), 0);
        for (u, &v) in p.iter().enumerate() {
            prod = gmul(prod, m[u][v]);
        }
        total = (total.0 + prod.0, total.1 + prod.1);
    }
    assert_eq!(total.1, 0, "determinant of a Hermitian matrix is real");
    total.0
}

/// Number of simple cycles: Hamiltonian cycles of every induced subgraph,
/// counted by permutations that fix the least vertex, halved for direction.
pub fn brute_cycle_count(g: &MixedGraph) -> usize {
    let n = g.n();
    let mut count = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() < 3 {
            continue;
        }
        let rest = &vs[1..];
        let mut found = 0;
        for p in permutations(rest.len()) {
            let order: Vec<usize> = std::iter::once(vs[0])
                .chain(p.iter().map(|&i| rest[i]))
                .collect();
            if (0..order.len()).all(|i| g.has_edge(order[i], order[(i + 1) % order.len()])) {
                found += 1;
            }
        }
        count += found / 2;
    }
    count
}

/// `C_n` whose `i`-th edge joins `i` and `i + 1`; `Forward` points from `i`.
pub fn cycle(n: usize, kinds: &[EdgeKind]) -> MixedGraph {
    MixedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, kinds[i]))).unwrap()
}

/// Random mixed graphs on `1..=max_n` vertices.
pub fn mixed_graph(max_n: usize) -> impl Strategy<Value = MixedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0u8..5, pairs).prop_map(move |choice| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    // two of five choices leave the pair empty
                    match choice[k] {
                        0 => edges.push((u, v, EdgeKind::Undirected)),
                        1 => edges.push((u, v, EdgeKind::Forward)),
                        2 => edges.push((u, v, EdgeKind::Backward)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            MixedGraph::new(n, edges).unwrap()
        })
    })
}
