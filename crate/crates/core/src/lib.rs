//! Semigraphs and their adjacency spectra.
//!
//! A semigraph generalizes a graph: each edge is an ordered tuple of two or
//! more distinct vertices, any two edges share at most one vertex, and an
//! edge equals its reversal. This crate builds the weighted symmetric
//! adjacency matrix of a semigraph, computes its spectrum both numerically
//! and exactly, evaluates the energy ℰ = Σ|λᵢ| with three classical bounds,
//! and generates three star-like families with closed-form spectra.
//!
//! ```
//! use semigraph::{adjacency_matrix, spectra, Semigraph};
//!
//! let g = Semigraph::new(3, &[[1, 2, 3]]).unwrap();
//! let energy = spectra::energy(&adjacency_matrix(&g)).unwrap();
//! assert!((energy.value() - (2.0 + 2.0 * 3f64.sqrt())).abs() < 1e-12);
//! ```

pub mod bounds;
pub mod families;
pub mod graph;
pub mod matrix;
pub mod product;
pub mod random;
pub mod spectra;

pub use bounds::{check_rationality, energy_report, EnergyReport, MomentMode, RationalityClass};
pub use graph::{Edge, EdgeClass, EdgeCounts, GraphError, Semigraph, Skeleton, VertexClass, VertexId};
pub use matrix::{adjacency_matrix, degrees, second_moment_direct, second_moment_paper, QuarterMatrix};
pub use spectra::{char_poly_exact, IntCharPoly, Spectrum};
