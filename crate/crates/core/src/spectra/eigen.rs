use nalgebra::{DMatrix, SymmetricEigen};

use super::{hermitian_matrix, HermitianMatrix};
use crate::graph::MixedGraph;

/// Real symmetric `2n × 2n` embedding `[[Re H, −Im H], [Im H, Re H]]`. Each
/// eigenvalue of `H` shows up twice in it.
fn real_embedding(h: &HermitianMatrix) -> DMatrix<f64> {
    let n = h.n();
    let (re, im) = h.to_f64_parts();
    DMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let (bu, u) = (r / n, r % n);
        let (bv, v) = (c / n, c % n);
        let idx = u * n + v;
        match (bu, bv) {
            (0, 0) | (1, 1) => re[idx],
            (0, 1) => -im[idx],
            _ => im[idx],
        }
    })
}

fn sorted_embedding_eigen(h: &HermitianMatrix) -> (Vec<f64>, DMatrix<f64>) {
    let eig = SymmetricEigen::new(real_embedding(h));
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(eig.eigenvectors.nrows(), order.len(), |r, c| {
        eig.eigenvectors[(r, order[c])]
    });
    (values, vectors)
}

/// Eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_eigenvalues(h: &HermitianMatrix) -> Vec<f64> {
    if h.n() == 0 {
        return Vec::new();
    }
    let (doubled, _) = sorted_embedding_eigen(h);
    // equal eigenvalues of the embedding come in adjacent pairs
    doubled
        .chunks(2)
        .map(|pair| 0.5 * (pair[0] + pair[1]))
        .collect()
}

/// Hermitian eigenvalues of `D`, descending.
pub fn eigenvalues(g: &MixedGraph) -> Vec<f64> {
    hermitian_eigenvalues(&hermitian_matrix(g))
}

/// `ρ(D)`; zero for the empty graph.
pub fn spectral_radius(g: &MixedGraph) -> f64 {
    eigenvalues(g)
        .iter()
        .fold(0.0f64, |acc, x| acc.max(x.abs()))
}

/// `ρ(D)` and, for each vertex `u`, the squared norm of the projection of
/// `e_u` onto the eigenspaces of eigenvalues `±ρ(D)`. A vertex has positive
/// weight exactly when some eigenvector for `±ρ` is nonzero there.
pub fn extremal_vertex_weights(g: &MixedGraph, tolerance: f64) -> (f64, Vec<f64>) {
    let n = g.n();
    if n == 0 {
        return (0.0, Vec::new());
    }
    let (values, vectors) = sorted_embedding_eigen(&hermitian_matrix(g));
    let rho = values.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let mut weights = vec![0.0; n];
    for (j, &lambda) in values.iter().enumerate() {
        if (lambda.abs() - rho).abs() > tolerance {
            continue;
        }
        for (u, w) in weights.iter_mut().enumerate() {
            let (a, b) = (vectors[(u, j)], vectors[(n + u, j)]);
            // each complex eigenvector contributes two real ones
            *w += 0.5 * (a * a + b * b);
        }
    }
    (rho, weights)
}
