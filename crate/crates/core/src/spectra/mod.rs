//! Numeric spectra, energy, and exact characteristic polynomials.

mod charpoly;
mod cubic;
mod eigen;

use thiserror::Error;

use crate::matrix::QuarterMatrix;

pub use charpoly::{char_poly_exact, IntCharPoly, RationalRoots};
pub use cubic::solve_cubic_depressed;
pub use eigen::symmetric_eigenvalues;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("eigenvalue {index} did not converge after {iterations} QL sweeps")]
    ConvergenceFailure { index: usize, iterations: usize },
}

/// Eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn from_unsorted(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Spectrum { eigenvalues }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }

    pub fn energy(&self) -> EnergyValue {
        EnergyValue(self.eigenvalues.iter().map(|x| x.abs()).sum())
    }

    /// Largest pointwise gap between two sorted multisets of equal size;
    /// infinite if the sizes differ.
    pub fn distance(&self, other: &Spectrum) -> f64 {
        multiset_distance(&self.eigenvalues, &other.eigenvalues)
    }
}

/// Max pointwise gap between two multisets after sorting both.
pub fn multiset_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| x.total_cmp(y));
    b.sort_by(|x, y| x.total_cmp(y));
    a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Sum of absolute eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EnergyValue(pub f64);

impl EnergyValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Working tolerance for a matrix: `1e-10 · n · max|aᵢⱼ|`.
pub fn tolerance(a: &QuarterMatrix) -> f64 {
    1e-10 * a.dim() as f64 * a.max_abs()
}

pub fn eigenvalues(a: &QuarterMatrix) -> Result<Spectrum, SpectraError> {
    Ok(Spectrum {
        eigenvalues: symmetric_eigenvalues(a.dim(), a.to_f64())?,
    })
}

pub fn energy(a: &QuarterMatrix) -> Result<EnergyValue, SpectraError> {
    Ok(eigenvalues(a)?.energy())
}

/// Rational eigenvalues of `p`, see [`IntCharPoly::rational_eigenvalues`].
pub fn rational_eigenvalues(p: &IntCharPoly) -> RationalRoots {
    p.rational_eigenvalues()
}
