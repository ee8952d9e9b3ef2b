//! Weighted adjacency matrices on the quarter-integer grid.
//!
//! Entries are stored as `4 * value` in unsigned integers, so an entry of
//! `1/4` is stored as `1`, `1/2` as `2` and a distance `d` as `4d`.

use num_rational::Rational64;
use thiserror::Error;

use crate::graph::{EdgeClass, Semigraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected {expected} entries for a {n}x{n} matrix, got {got}")]
    Shape { n: usize, expected: usize, got: usize },
    #[error("entry ({i}, {j}) differs from ({j}, {i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("diagonal entry {0} is nonzero")]
    NonzeroDiagonal(usize),
}

/// A symmetric, zero-diagonal matrix whose entries are multiples of 1/4.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarterMatrix {
    n: usize,
    quarters: Vec<u32>,
}

impl QuarterMatrix {
    /// Numerator over 4 of every entry.
    pub const SCALE: u32 = 4;

    pub fn zeros(n: usize) -> Self {
        QuarterMatrix {
            n,
            quarters: vec![0; n * n],
        }
    }

    /// Builds a matrix from row-major entries given in quarters.
    pub fn from_quarters(n: usize, quarters: Vec<u32>) -> Result<Self, MatrixError> {
        if quarters.len() != n * n {
            return Err(MatrixError::Shape {
                n,
                expected: n * n,
                got: quarters.len(),
            });
        }
        for i in 0..n {
            if quarters[i * n + i] != 0 {
                return Err(MatrixError::NonzeroDiagonal(i));
            }
            for j in i + 1..n {
                if quarters[i * n + j] != quarters[j * n + i] {
                    return Err(MatrixError::NotSymmetric { i, j });
                }
            }
        }
        Ok(QuarterMatrix { n, quarters })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)` (zero-based) times 4.
    pub fn quarters(&self, i: usize, j: usize) -> u32 {
        self.quarters[i * self.n + j]
    }

    pub fn quarters_row_major(&self) -> &[u32] {
        &self.quarters
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational64 {
        Rational64::new(self.quarters(i, j) as i64, Self::SCALE as i64)
    }

    pub fn entry_f64(&self, i: usize, j: usize) -> f64 {
        self.quarters(i, j) as f64 / Self::SCALE as f64
    }

    /// Row-major `f64` copy of the matrix values.
    pub fn to_f64(&self) -> Vec<f64> {
        self.quarters
            .iter()
            .map(|&q| q as f64 / Self::SCALE as f64)
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.quarters.iter().copied().max().unwrap_or(0) as f64 / Self::SCALE as f64
    }

    fn set_symmetric(&mut self, i: usize, j: usize, q: u32) {
        self.quarters[i * self.n + j] = q;
        self.quarters[j * self.n + i] = q;
    }

    /// trace(A²) as the exact sum of squared entries.
    pub fn second_moment(&self) -> Rational64 {
        let sum: i64 = self.quarters.iter().map(|&q| (q as i64) * (q as i64)).sum();
        Rational64::new(sum, (Self::SCALE * Self::SCALE) as i64)
    }

    /// Conjugate by a permutation: entry `(i, j)` moves to `(perm[i], perm[j])`.
    /// `perm` is zero-based.
    pub fn permuted(&self, perm: &[usize]) -> QuarterMatrix {
        let mut out = QuarterMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.quarters[perm[i] * self.n + perm[j]] = self.quarters(i, j);
            }
        }
        out
    }
}

/// Degree vector: exact row sums of the adjacency matrix, in quarters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector {
    quarters: Vec<u64>,
}

impl DegreeVector {
    pub fn len(&self) -> usize {
        self.quarters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quarters.is_empty()
    }

    pub fn get(&self, i: usize) -> Rational64 {
        Rational64::new(self.quarters[i] as i64, QuarterMatrix::SCALE as i64)
    }

    pub fn values(&self) -> Vec<Rational64> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }
}

/// The semigraph adjacency matrix.
///
/// Two vertices on a common edge get their skeleton distance along that
/// edge, except that a partial half edge gets 1/2 and a quarter edge gets
/// 1/4. Vertices sharing no edge get 0.
pub fn adjacency_matrix(g: &Semigraph) -> QuarterMatrix {
    let mut a = QuarterMatrix::zeros(g.vertex_count());
    for (k, edge) in g.edges().iter().enumerate() {
        let vs = edge.vertices();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let d = (j - i) as u32;
                a.set_symmetric(vs[i].index0(), vs[j].index0(), d * QuarterMatrix::SCALE);
            }
        }
        match g.edge_classes()[k] {
            EdgeClass::Full => {}
            EdgeClass::Quarter => {
                a.set_symmetric(edge.first().index0(), edge.last().index0(), 1);
            }
            EdgeClass::HalfOnePartial | EdgeClass::HalfTwoPartial => {
                for (u, v) in g.partial_half_edges_at(k) {
                    a.set_symmetric(u.index0(), v.index0(), 2);
                }
            }
        }
    }
    a
}

pub fn degrees(g: &Semigraph) -> DegreeVector {
    let a = adjacency_matrix(g);
    let n = a.dim();
    let quarters = (0..n)
        .map(|i| (0..n).map(|j| a.quarters(i, j) as u64).sum())
        .collect();
    DegreeVector { quarters }
}

/// Σλᵢ² computed directly as trace(A²).
pub fn second_moment_direct(a: &QuarterMatrix) -> Rational64 {
    a.second_moment()
}

/// Σλᵢ² by the closed edge-size formula
/// `(1/6) Σ rᵢ²(rᵢ²−1) − (15/8) m₂ − (3/4) m₃ − (1/2) m₄`.
///
/// Agrees with [`second_moment_direct`] when there are no half edges; with
/// half edges present the two differ (each partial half edge lowers
/// trace(A²) by 3/2, not the 3/4 this formula subtracts).
pub fn second_moment_paper(g: &Semigraph) -> Rational64 {
    let size_term: i64 = g
        .edges()
        .iter()
        .map(|e| {
            let r = e.len() as i64;
            r * r * (r * r - 1)
        })
        .sum();
    let c = g.edge_counts();
    Rational64::new(size_term, 6)
        - Rational64::new(15, 8) * c.m2 as i64
        - Rational64::new(3, 4) * c.m3 as i64
        - Rational64::new(1, 2) * c.m4 as i64
}
