//! Hermitian adjacency matrices, exact characteristic polynomials, floating
//! point spectra and exact radius decisions.
//!
//! The characteristic polynomial `Φ(D, λ) = det(λI − H(D))` is computed two
//! ways that share no code: a trace recursion over exact Gaussian integers
//! ([`charpoly_leverrier`]) and a signed count of elementary subgraphs
//! ([`charpoly_sachs`]). Each is the other's check.

mod eigen;
mod gauss;
mod poly;
mod sturm;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::graph::MixedGraph;
use crate::structure::{enumerate_cycles, for_each_elementary, Cycle, CycleFilter};

pub use eigen::{eigenvalues, extremal_vertex_weights, hermitian_eigenvalues, spectral_radius};
pub use gauss::GaussInt;
pub use poly::IntPolynomial;
pub use sturm::{compare_radius_poly, compare_spectral_radii, RadiusComparison, RadiusRelation};

/// Dense `n × n` Hermitian matrix over the Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<GaussInt>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        HermitianMatrix {
            n,
            entries: vec![GaussInt::ZERO; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> GaussInt {
        self.entries[u * self.n + v]
    }

    /// Sets `(u, v)` to `value` and `(v, u)` to its conjugate.
    pub fn set_pair(&mut self, u: usize, v: usize, value: GaussInt) {
        self.entries[u * self.n + v] = value;
        self.entries[v * self.n + u] = value.conj();
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| self.get(u, v) == self.get(v, u).conj()))
    }

    /// Rows and columns restricted to `indices`, in the given order.
    pub fn principal_submatrix(&self, indices: &[usize]) -> HermitianMatrix {
        let k = indices.len();
        let mut entries = Vec::with_capacity(k * k);
        for &u in indices {
            for &v in indices {
                entries.push(self.get(u, v));
            }
        }
        HermitianMatrix { n: k, entries }
    }

    /// `(Re H, Im H)` as row-major `f64` arrays.
    pub fn to_f64_parts(&self) -> (Vec<f64>, Vec<f64>) {
        let re = self.entries.iter().map(|z| z.re as f64).collect();
        let im = self.entries.iter().map(|z| z.im as f64).collect();
        (re, im)
    }

    /// Characteristic polynomial by the Faddeev–LeVerrier trace recursion:
    /// `M_1 = I`, `c_k = −tr(H M_k)/k`, `M_{k+1} = H M_k + c_k I`.
    ///
    /// The recursion is run exactly. Every `c_k` must come out as a real
    /// integer; anything else means a bug upstream.
    ///
    /// # Panics
    ///
    /// If a coefficient is not a real integer, or on `i128` overflow.
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.n;
        let rows: Vec<Vec<(usize, GaussInt)>> = (0..n)
            .map(|u| {
                (0..n)
                    .filter_map(|w| Some((w, self.get(u, w))).filter(|(_, a)| !a.is_zero()))
                    .collect()
            })
            .collect();
        let mut desc = Vec::with_capacity(n + 1);
        desc.push(1i128);
        let mut m = vec![GaussInt::ZERO; n * n];
        for i in 0..n {
            m[i * n + i] = GaussInt::ONE;
        }
        let mut am = vec![GaussInt::ZERO; n * n];
        for k in 1..=n {
            am.iter_mut().for_each(|z| *z = GaussInt::ZERO);
            for (u, row) in rows.iter().enumerate() {
                let out = &mut am[u * n..(u + 1) * n];
                for &(w, a) in row {
                    let src = &m[w * n..(w + 1) * n];
                    if a.is_unit() {
                        let exp = unit_exponent(a);
                        for (o, s) in out.iter_mut().zip(src) {
                            *o += s.times_unit(exp);
                        }
                    } else {
                        for (o, s) in out.iter_mut().zip(src) {
                            *o += a * *s;
                        }
                    }
                }
            }
            let trace = (0..n).fold(GaussInt::ZERO, |acc, i| acc + am[i * n + i]);
            assert!(
                trace.is_real(),
                "trace recursion produced a non-real trace {trace} at step {k}"
            );
            let k_i = k as i128;
            assert!(
                trace.re % k_i == 0,
                "trace recursion produced a non-integral coefficient {}/{k} at step {k}",
                -trace.re
            );
            let c = -trace.re / k_i;
            desc.push(c);
            if k < n {
                std::mem::swap(&mut m, &mut am);
                for i in 0..n {
                    m[i * n + i] += GaussInt::from(c);
                }
            }
        }
        IntPolynomial::from_descending(desc)
    }
}

fn unit_exponent(a: GaussInt) -> u8 {
    match (a.re, a.im) {
        (1, 0) => 0,
        (0, 1) => 1,
        (-1, 0) => 2,
        _ => 3,
    }
}

/// `H(D)`: `1` for undirected edges, `i` at `(u, v)` for an arc `u → v`, `−i`
/// at `(v, u)`, zero elsewhere.
pub fn hermitian_matrix(g: &MixedGraph) -> HermitianMatrix {
    let mut h = HermitianMatrix::zeros(g.n());
    for e in g.edges() {
        h.set_pair(e.u, e.v, GaussInt::unit(e.kind.exponent()));
    }
    h
}

/// `Φ(D, λ)` by the exact trace recursion.
pub fn charpoly_leverrier(g: &MixedGraph) -> IntPolynomial {
    hermitian_matrix(g).charpoly()
}

/// `Φ(D, λ)` from elementary subgraphs: `c_i = Σ (−1)^(t+s) 2^r` over the
/// elementary subgraphs on `i` vertices whose cycles are all real.
pub fn charpoly_sachs(g: &MixedGraph) -> IntPolynomial {
    ElementaryCatalog::new(g).charpoly(g)
}

/// Decides `ρ(D)` against `bound` exactly, from the integer characteristic
/// polynomial.
pub fn compare_radius(g: &MixedGraph, bound: &BigRational) -> RadiusComparison {
    compare_radius_poly(&charpoly_leverrier(g), bound)
}

pub fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

#[derive(Debug, Clone)]
struct CatalogCycle {
    // (edge index, traversed from the smaller endpoint)
    steps: Vec<(usize, bool)>,
}

#[derive(Debug, Clone)]
struct CatalogEntry {
    order: usize,
    edge_components: usize,
    cycles: Vec<u32>,
    vertex_mask: u64,
    edge_list: Vec<u32>,
}

/// Every elementary subgraph of an underlying graph, recorded once so that the
/// Sachs-type coefficients of any orientation can be summed without
/// re-enumerating.
#[derive(Debug, Clone)]
pub struct ElementaryCatalog {
    n: usize,
    pairs: Vec<(usize, usize)>,
    cycles: Vec<Cycle>,
    catalog_cycles: Vec<CatalogCycle>,
    entries: Vec<CatalogEntry>,
}

impl ElementaryCatalog {
    /// Built from the underlying structure of `g`; directions are ignored.
    pub fn new(g: &MixedGraph) -> Self {
        let u = g.underlying();
        let cycles = enumerate_cycles(&u);
        let catalog_cycles = cycles
            .iter()
            .map(|c| CatalogCycle {
                steps: c
                    .steps()
                    .map(|(a, b)| (u.edge_index(a, b).expect("cycle step is an edge"), a < b))
                    .collect(),
            })
            .collect();
        let mut entries = Vec::new();
        for_each_elementary(&u, None, CycleFilter::Any, |h| {
            let ids = h
                .cycles
                .iter()
                .map(|c| {
                    cycles
                        .binary_search_by(|x| (x.len(), x.vertices()).cmp(&(c.len(), c.vertices())))
                        .expect("known cycle") as u32
                })
                .collect();
            let mut vertex_mask = 0u64;
            let mut edge_list = Vec::new();
            for &(a, b) in &h.edges {
                vertex_mask |= (1 << a) | (1 << b);
                edge_list.push(u.edge_index(a, b).expect("matching edge") as u32);
            }
            for c in &h.cycles {
                for (a, b) in c.steps() {
                    vertex_mask |= 1 << a;
                    edge_list.push(u.edge_index(a, b).expect("cycle step is an edge") as u32);
                }
            }
            entries.push(CatalogEntry {
                order: h.order(),
                edge_components: h.edges.len(),
                cycles: ids,
                vertex_mask,
                edge_list,
            });
        });
        let pairs = u.edges().iter().map(|e| (e.u, e.v)).collect();
        ElementaryCatalog {
            n: u.n(),
            pairs,
            cycles,
            catalog_cycles,
            entries,
        }
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Exponents `k` with `h(C) = i^k` for each catalogued cycle under the
    /// orientation `g`.
    pub fn cycle_exponents(&self, g: &MixedGraph) -> Vec<u8> {
        self.check_same_graph(g);
        let edges = g.edges();
        self.catalog_cycles
            .iter()
            .map(|c| {
                c.steps.iter().fold(0u8, |acc, &(e, up)| {
                    let k = edges[e].kind.exponent();
                    (acc + if up { k } else { (4 - k) % 4 }) % 4
                })
            })
            .collect()
    }

    fn check_same_graph(&self, g: &MixedGraph) {
        assert!(
            g.n() == self.n
                && g.edges()
                    .iter()
                    .map(|e| (e.u, e.v))
                    .eq(self.pairs.iter().copied()),
            "orientation does not match the catalogued underlying graph"
        );
    }

    /// Signed term `(−1)^(t+s) 2^r` of an entry, zero when it has an
    /// imaginary cycle.
    fn term(entry: &CatalogEntry, exps: &[u8]) -> i128 {
        let mut negative = 0usize;
        for &c in &entry.cycles {
            match exps[c as usize] {
                0 => {}
                2 => negative += 1,
                _ => return 0,
            }
        }
        let t = entry.edge_components + entry.cycles.len();
        let magnitude = 1i128 << entry.cycles.len();
        if (t + negative).is_multiple_of(2) {
            magnitude
        } else {
            -magnitude
        }
    }

    /// Sachs-type characteristic polynomial of the orientation `g`.
    pub fn charpoly(&self, g: &MixedGraph) -> IntPolynomial {
        let exps = self.cycle_exponents(g);
        let mut desc = vec![0i128; self.n + 1];
        for entry in &self.entries {
            desc[entry.order] += Self::term(entry, &exps);
        }
        debug_assert_eq!(desc[0], 1);
        IntPolynomial::from_descending(desc)
    }

    /// Sachs-type characteristic polynomials of every induced subgraph and
    /// every single-edge deletion of the orientation `g`, from one pass over
    /// the catalogue.
    pub fn subgraph_charpolys(&self, g: &MixedGraph) -> SubgraphCharpolys {
        assert!(self.n <= 16, "subgraph tables are limited to 16 vertices");
        let exps = self.cycle_exponents(g);
        let width = self.n + 1;
        let size = 1usize << self.n;
        // by_mask[S * width + i]: sum of the terms of order i with vertex set S
        let mut by_mask = vec![0i128; size * width];
        let mut through_edge = vec![0i128; self.pairs.len() * width];
        for entry in &self.entries {
            let term = Self::term(entry, &exps);
            if term == 0 {
                continue;
            }
            by_mask[entry.vertex_mask as usize * width + entry.order] += term;
            for &e in &entry.edge_list {
                through_edge[e as usize * width + entry.order] += term;
            }
        }
        // sum over subsets
        for bit in 0..self.n {
            for mask in 0..size {
                if mask >> bit & 1 == 1 {
                    let lower = mask ^ (1 << bit);
                    for i in 0..width {
                        by_mask[mask * width + i] += by_mask[lower * width + i];
                    }
                }
            }
        }
        let full = size - 1;
        let mut minus_edge = through_edge;
        for row in minus_edge.chunks_mut(width) {
            for (i, x) in row.iter_mut().enumerate() {
                *x = by_mask[full * width + i] - *x;
            }
        }
        SubgraphCharpolys {
            n: self.n,
            by_mask,
            minus_edge,
        }
    }
}

/// Characteristic polynomials of the subgraphs of one orientation, indexed
/// by vertex mask (induced subgraphs) or edge index (edge deletions).
#[derive(Debug, Clone)]
pub struct SubgraphCharpolys {
    n: usize,
    by_mask: Vec<i128>,
    minus_edge: Vec<i128>,
}

impl SubgraphCharpolys {
    /// Descending coefficients of `Φ(D[S])` for the vertex set `S` given as a
    /// bit mask; the slice has `|S| + 1` entries.
    pub fn induced_desc(&self, mask: u64) -> &[i128] {
        let width = self.n + 1;
        let k = mask.count_ones() as usize;
        &self.by_mask[mask as usize * width..mask as usize * width + k + 1]
    }

    /// `Φ(D[S])` for the vertex set `S` given as a bit mask.
    pub fn induced(&self, mask: u64) -> IntPolynomial {
        IntPolynomial::from_descending(self.induced_desc(mask).to_vec())
    }

    /// Descending coefficients of `Φ(D − e)`, `n + 1` entries.
    pub fn edge_deleted_desc(&self, e: usize) -> &[i128] {
        let width = self.n + 1;
        &self.minus_edge[e * width..(e + 1) * width]
    }

    /// `Φ(D − e)`: the elementary subgraphs that avoid edge `e`.
    pub fn edge_deleted(&self, e: usize) -> IntPolynomial {
        IntPolynomial::from_descending(self.edge_deleted_desc(e).to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeKind;

    fn poly(desc: &[i128]) -> IntPolynomial {
        IntPolynomial::from_descending(desc.to_vec())
    }

    fn cycle_with(kinds: &[EdgeKind]) -> MixedGraph {
        let n = kinds.len();
        MixedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, kinds[i]))).unwrap()
    }

    #[test]
    fn matrix_entries() {
        let arc = MixedGraph::new(2, [(0, 1, EdgeKind::Forward)]).unwrap();
        let h = hermitian_matrix(&arc);
        assert_eq!(h.get(0, 1), GaussInt::I);
        assert_eq!(h.get(1, 0), -GaussInt::I);
        assert_eq!(h.get(0, 0), GaussInt::ZERO);
        let k2 = MixedGraph::undirected(2, [(0, 1)]).unwrap();
        assert_eq!(hermitian_matrix(&k2).get(1, 0), GaussInt::ONE);
        assert!(h.is_hermitian());
    }

    #[test]
    fn small_charpolys() {
        let k2 = MixedGraph::undirected(2, [(0, 1)]).unwrap();
        assert_eq!(charpoly_leverrier(&k2), poly(&[1, 0, -1]));
        assert_eq!(charpoly_sachs(&k2), poly(&[1, 0, -1]));

        use EdgeKind::*;
        let imag = cycle_with(&[Forward, Forward, Forward]);
        assert_eq!(charpoly_leverrier(&imag), poly(&[1, 0, -3, 0]));
        assert_eq!(charpoly_sachs(&imag), poly(&[1, 0, -3, 0]));

        let empty = MixedGraph::empty(0);
        assert_eq!(charpoly_leverrier(&empty), IntPolynomial::one());
        assert_eq!(charpoly_sachs(&empty), IntPolynomial::one());
    }

    #[test]
    fn four_cycle_orientations() {
        use EdgeKind::*;
        let positive = cycle_with(&[Undirected; 4]);
        let negative = cycle_with(&[Forward, Forward, Undirected, Undirected]);
        assert_eq!(charpoly_sachs(&positive), poly(&[1, 0, -4, 0, 0]));
        assert_eq!(charpoly_sachs(&negative), poly(&[1, 0, -4, 0, 4]));
        assert_eq!(charpoly_leverrier(&negative), poly(&[1, 0, -4, 0, 4]));
    }

    #[test]
    fn generic_entries_in_trace_recursion() {
        // [[0, 1+i], [1-i, 0]] has λ^2 - 2
        let mut h = HermitianMatrix::zeros(2);
        h.set_pair(0, 1, GaussInt::new(1, 1));
        assert_eq!(h.charpoly(), poly(&[1, 0, -2]));
    }

    #[test]
    fn radius_against_two() {
        use EdgeKind::*;
        let c7 = cycle_with(&[Undirected; 7]);
        assert_eq!(
            compare_radius(&c7, &two()).relation,
            RadiusRelation::Exactly
        );
        let imag = cycle_with(&[Forward, Undirected, Undirected]);
        assert_eq!(
            compare_radius(&imag, &two()).relation,
            RadiusRelation::Below
        );
        let c3_1 = MixedGraph::undirected(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            compare_radius(&c3_1, &two()).relation,
            RadiusRelation::Above
        );
        assert_eq!(
            compare_radius(&MixedGraph::empty(0), &two()).relation,
            RadiusRelation::Below
        );
    }

    #[test]
    fn subgraph_tables_match_direct_computation() {
        let d1: MixedGraph = "v 4\n0 -- 1\n0 -- 3\n1 -- 3\n1 -> 2\n2 -> 3"
            .parse()
            .unwrap();
        let d2: MixedGraph = "v 4\n3 -> 0\n0 -- 1\n2 -> 3\n0 -> 2\n2 -- 1\n3 -- 1"
            .parse()
            .unwrap();
        for d in [d1, d2] {
            let table = ElementaryCatalog::new(&d).subgraph_charpolys(&d);
            for mask in 0u64..16 {
                let keep: Vec<usize> = (0..4).filter(|&v| mask >> v & 1 == 1).collect();
                let (sub, _) = d.induced_subgraph(&keep).unwrap();
                assert_eq!(
                    table.induced(mask),
                    charpoly_leverrier(&sub),
                    "mask {mask:b}"
                );
            }
            for (i, e) in d.edges().iter().enumerate() {
                assert_eq!(
                    table.edge_deleted(i),
                    charpoly_leverrier(&d.delete_edge(e.u, e.v).unwrap())
                );
            }
        }
    }
}
