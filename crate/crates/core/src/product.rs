//! Cartesian products of semigraphs and the Kronecker sum of their
//! adjacency matrices.
//!
//! The product adjacency equals `I ⊗ B + A ⊗ I` whenever vertex classes
//! survive the product unchanged, as they do for ordinary graphs. A vertex
//! that is an end of one copied edge and a middle of another becomes a
//! middle-end vertex in the product, and its neighbouring entries drop to
//! 1/2 or 1/4, so [`product_consistency_check`] measures rather than assumes
//! the identity.

use num_rational::Rational64;
use thiserror::Error;

use crate::graph::{GraphError, Semigraph, VertexId};
use crate::matrix::{adjacency_matrix, QuarterMatrix};
use crate::spectra::{self, multiset_distance, SpectraError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProductError {
    #[error("product violates the semigraph axioms: {0}")]
    ProductViolatesSemigraphAxiom(GraphError),
    #[error(transparent)]
    Spectrum(#[from] SpectraError),
}

/// Row-major bijection `(u, v) ↔ (u − 1)·n₂ + v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductVertexMap {
    left: usize,
    right: usize,
}

impl ProductVertexMap {
    pub fn new(left: usize, right: usize) -> Self {
        ProductVertexMap { left, right }
    }

    pub fn vertex_count(&self) -> usize {
        self.left * self.right
    }

    pub fn to_product(&self, u: VertexId, v: VertexId) -> VertexId {
        debug_assert!(u.0 >= 1 && u.0 <= self.left && v.0 >= 1 && v.0 <= self.right);
        VertexId((u.0 - 1) * self.right + v.0)
    }

    pub fn to_pair(&self, w: VertexId) -> (VertexId, VertexId) {
        let k = w.0 - 1;
        (VertexId(k / self.right + 1), VertexId(k % self.right + 1))
    }
}

pub fn cartesian_product(
    g1: &Semigraph,
    g2: &Semigraph,
) -> Result<(Semigraph, ProductVertexMap), ProductError> {
    let map = ProductVertexMap::new(g1.vertex_count(), g2.vertex_count());
    let mut edges: Vec<Vec<VertexId>> =
        Vec::with_capacity(g1.vertex_count() * g2.edge_count() + g2.vertex_count() * g1.edge_count());
    for u in g1.vertices() {
        for e in g2.edges() {
            edges.push(e.vertices().iter().map(|&v| map.to_product(u, v)).collect());
        }
    }
    for v in g2.vertices() {
        for e in g1.edges() {
            edges.push(e.vertices().iter().map(|&u| map.to_product(u, v)).collect());
        }
    }
    let g = Semigraph::from_vertex_lists(map.vertex_count(), edges)
        .map_err(ProductError::ProductViolatesSemigraphAxiom)?;
    Ok((g, map))
}

/// `I_m ⊗ B + A ⊗ I_n`, indexed row-major in `(u, v)`.
pub fn kronecker_sum(a: &QuarterMatrix, b: &QuarterMatrix) -> QuarterMatrix {
    let (m, n) = (a.dim(), b.dim());
    let mut q = vec![0u32; m * n * m * n];
    let size = m * n;
    for u in 0..m {
        for v in 0..n {
            let row = u * n + v;
            for v2 in 0..n {
                q[row * size + u * n + v2] += b.quarters(v, v2);
            }
            for u2 in 0..m {
                q[row * size + u2 * n + v] += a.quarters(u, u2);
            }
        }
    }
    QuarterMatrix::from_quarters(size, q).expect("Kronecker sum of symmetric zero-diagonal matrices")
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductCheck {
    pub matrices_equal: bool,
    pub max_entry_diff: Rational64,
    pub spectra_additive: bool,
    /// Multiset gap between the product spectrum and all pairwise sums.
    pub spectral_gap: f64,
}

pub const ADDITIVITY_TOLERANCE: f64 = 1e-8;

/// Pairwise sums `λᵢ + μⱼ` of two spectra.
pub fn pairwise_sums(left: &[f64], right: &[f64]) -> Vec<f64> {
    left.iter()
        .flat_map(|l| right.iter().map(move |r| l + r))
        .collect()
}

/// Compares the product's own adjacency matrix with the Kronecker sum of the
/// factor adjacencies, entrywise and spectrally.
pub fn product_consistency_check(g1: &Semigraph, g2: &Semigraph) -> Result<ProductCheck, ProductError> {
    let (product, _) = cartesian_product(g1, g2)?;
    let direct = adjacency_matrix(&product);
    let (a, b) = (adjacency_matrix(g1), adjacency_matrix(g2));
    let ksum = kronecker_sum(&a, &b);

    let max_quarters = direct
        .quarters_row_major()
        .iter()
        .zip(ksum.quarters_row_major())
        .map(|(x, y)| x.abs_diff(*y))
        .max()
        .unwrap_or(0);

    let product_spectrum = spectra::eigenvalues(&direct)?;
    let sums = pairwise_sums(
        spectra::eigenvalues(&a)?.eigenvalues(),
        spectra::eigenvalues(&b)?.eigenvalues(),
    );
    let spectral_gap = multiset_distance(product_spectrum.eigenvalues(), &sums);
    Ok(ProductCheck {
        matrices_equal: max_quarters == 0,
        max_entry_diff: Rational64::new(max_quarters as i64, QuarterMatrix::SCALE as i64),
        spectra_additive: spectral_gap <= ADDITIVITY_TOLERANCE,
        spectral_gap,
    })
}
