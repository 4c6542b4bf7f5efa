mod common;

use common::{char_value_at, cycle, entry, mixed_graph};
use hermspec::families::FamilySpec;
use hermspec::spectra::{
    charpoly_leverrier, charpoly_sachs, compare_radius, eigenvalues, hermitian_matrix,
    spectral_radius, two, IntPolynomial, RadiusRelation,
};
use hermspec::{EdgeKind, MixedGraph};
use num_rational::BigRational;
use proptest::prelude::*;

use EdgeKind::{Forward as F, Undirected as U};

fn d2() -> MixedGraph {
    "v 4\n3 -> 0\n0 -- 1\n2 -> 3\n0 -> 2\n2 -- 1\n3 -- 1"
        .parse()
        .unwrap()
}

fn poly(desc: &[i128]) -> IntPolynomial {
    IntPolynomial::from_descending(desc.to_vec())
}

#[test]
fn small_charpolys() {
    let k2 = MixedGraph::undirected(2, [(0, 1)]).unwrap();
    assert_eq!(charpoly_leverrier(&k2), poly(&[1, 0, -1]));
    let tri = cycle(3, &[F, F, EdgeKind::Backward]);
    // 0→1, 1→2, 0→2 is an imaginary triangle
    assert_eq!(charpoly_sachs(&tri), poly(&[1, 0, -3, 0]));
    assert_eq!(charpoly_leverrier(&tri), poly(&[1, 0, -3, 0]));
    assert_eq!(charpoly_leverrier(&tri).to_string(), "λ^3 - 3λ");
    assert_eq!(
        charpoly_leverrier(&MixedGraph::empty(0)),
        IntPolynomial::one()
    );
}

#[test]
fn four_cycles_against_eigenvalues() {
    let plus = cycle(4, &[U; 4]);
    let minus = cycle(4, &[F, F, U, U]);
    assert_eq!(charpoly_leverrier(&plus), poly(&[1, 0, -4, 0, 0]));
    assert_eq!(charpoly_leverrier(&minus), poly(&[1, 0, -4, 0, 4]));
    // (λ² − 2)²: eigenvalues ±√2, each twice
    let r2 = 2f64.sqrt();
    for (a, b) in eigenvalues(&minus).iter().zip([r2, r2, -r2, -r2]) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn d2_matrix_entries() {
    let h = hermitian_matrix(&d2());
    // u1..u4 are vertices 0..3
    let i = |u, v| {
        let z = h.get(u, v);
        (z.re, z.im)
    };
    assert_eq!(i(3, 0), (0, 1));
    assert_eq!(i(0, 2), (0, 1));
    assert_eq!(i(2, 3), (0, 1));
    assert_eq!(i(0, 3), (0, -1));
    assert_eq!(i(0, 1), (1, 0));
    assert_eq!(i(1, 2), (1, 0));
    assert_eq!(i(1, 3), (1, 0));
    assert!(h.is_hermitian());
}

#[test]
fn radius_examples() {
    let d1: MixedGraph = "v 4\n0 -- 1\n0 -- 3\n1 -- 3\n1 -> 2\n2 -> 3"
        .parse()
        .unwrap();
    assert!((spectral_radius(&d1) - 2.0).abs() < 1e-9);
    assert!((spectral_radius(&d1.delete_edge(2, 3).unwrap()) - 2.170).abs() < 1e-3);
    let k14 = MixedGraph::undirected(5, (1..5).map(|v| (0, v))).unwrap();
    assert!((spectral_radius(&k14) - 2.0).abs() < 1e-12);
    assert_eq!(
        compare_radius(&k14, &two()).relation,
        RadiusRelation::Exactly
    );
    assert_eq!(
        compare_radius(&cycle(7, &[U; 7]), &two()).relation,
        RadiusRelation::Exactly
    );
    assert_eq!(
        compare_radius(&cycle(3, &[F, F, F]), &two()).relation,
        RadiusRelation::Below
    );
    let c3_1 = "C3(1)".parse::<FamilySpec>().unwrap().generate().unwrap();
    assert_eq!(
        compare_radius(&c3_1, &two()).relation,
        RadiusRelation::Above
    );
    let d2_u2 = d2().delete_vertex(1).unwrap().0;
    let rho = spectral_radius(&d2_u2);
    assert!((rho * rho - 3.0).abs() < 1e-9);
}

#[test]
fn radius_against_fractional_bounds() {
    let k2 = MixedGraph::undirected(2, [(0, 1)]).unwrap();
    let half = BigRational::new(1.into(), 2.into());
    assert_eq!(compare_radius(&k2, &half).relation, RadiusRelation::Above);
    let one = BigRational::from_integer(1.into());
    assert_eq!(compare_radius(&k2, &one).relation, RadiusRelation::Exactly);
    let c = compare_radius(&cycle(3, &[F, F, F]), &BigRational::new(7.into(), 4.into()));
    // √3 ≈ 1.732 < 1.75
    assert_eq!(c.relation, RadiusRelation::Below);
}

#[test]
fn cycle_spectra_closed_form() {
    for n in 3..=9usize {
        let mut expected: Vec<f64> = (0..n)
            .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        for (a, b) in eigenvalues(&cycle(n, &vec![U; n])).iter().zip(&expected) {
            assert!((a - b).abs() < 1e-9, "C{n}: {a} vs {b}");
        }
    }
}

fn reverse_all(g: &MixedGraph) -> MixedGraph {
    let kinds: Vec<EdgeKind> = g.kinds().into_iter().map(EdgeKind::reversed).collect();
    g.with_kinds(&kinds)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn leverrier_matches_determinant(g in mixed_graph(6)) {
        let p = charpoly_leverrier(&g);
        prop_assert_eq!(p.degree(), g.n());
        for x in -3..=3i128 {
            prop_assert_eq!(p.eval_int(x), char_value_at(&g, x));
        }
    }

    #[test]
    fn sachs_matches_leverrier(g in mixed_graph(8)) {
        prop_assert_eq!(charpoly_sachs(&g), charpoly_leverrier(&g));
    }

    #[test]
    fn trace_and_frobenius(g in mixed_graph(8)) {
        let ev = eigenvalues(&g);
        let sum: f64 = ev.iter().sum();
        let squares: f64 = ev.iter().map(|x| x * x).sum();
        prop_assert!(sum.abs() < 1e-9);
        prop_assert!((squares - 2.0 * g.edge_count() as f64).abs() < 1e-8);
        let p = charpoly_leverrier(&g);
        prop_assert_eq!(p.sachs_coeff(1), 0);
        if g.n() >= 2 {
            prop_assert_eq!(p.sachs_coeff(2), -(g.edge_count() as i128));
        }
    }

    #[test]
    fn reversing_every_arc_keeps_the_spectrum(g in mixed_graph(7)) {
        prop_assert_eq!(charpoly_leverrier(&reverse_all(&g)), charpoly_leverrier(&g));
    }

    #[test]
    fn relabeling_keeps_the_spectrum(g in mixed_graph(7), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(charpoly_leverrier(&g.permuted(&perm)), charpoly_leverrier(&g));
    }

    #[test]
    fn forests_match_their_underlying_graph(n in 1..9usize, seed in proptest::collection::vec((any::<usize>(), 0..3usize), 8)) {
        let edges: Vec<(usize, usize, EdgeKind)> = (1..n)
            .map(|v| (seed[v - 1].0 % v, v, EdgeKind::ALL[seed[v - 1].1]))
            .collect();
        let tree = MixedGraph::new(n, edges).unwrap();
        prop_assert_eq!(charpoly_leverrier(&tree), charpoly_leverrier(&tree.underlying()));
    }

    #[test]
    fn eigenvalues_are_roots(g in mixed_graph(6)) {
        let p = charpoly_leverrier(&g);
        let rho = spectral_radius(&g).max(1.0);
        for x in eigenvalues(&g) {
            // relative to the size of the terms in the polynomial
            let scale: f64 = p.ascending().iter().map(|c| c.abs() as f64).sum::<f64>() * rho.powi(g.n() as i32);
            prop_assert!(p.eval_f64(x).abs() <= 1e-7 * scale, "{} at {}", p, x);
        }
    }

    #[test]
    fn matrix_is_hermitian_and_matches_arcs(g in mixed_graph(6)) {
        let h = hermitian_matrix(&g);
        prop_assert!(h.is_hermitian());
        for u in 0..g.n() {
            for v in 0..g.n() {
                let z = h.get(u, v);
                prop_assert_eq!((z.re, z.im), entry(&g, u, v));
            }
        }
    }
}
