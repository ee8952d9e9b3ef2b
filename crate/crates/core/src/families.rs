//! Three families of star-like semigraphs with closed-form spectra.
//!
//! - `T³ₙ`: n 3-edges `(v₁, v₂ᵢ, v₂ᵢ₊₁)` sharing the end vertex v₁.
//! - `S³ₙ`: n 3-edges sharing their middle vertex (vertex 1 here).
//! - `S³₂,ₙ`: one 3-edge `(v₂, v₁, v₃)` plus n pendant 2-edges at v₁.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::graph::Semigraph;
use crate::matrix::adjacency_matrix;
use crate::spectra::{self, multiset_distance, solve_cubic_depressed, SpectraError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    S3_2,
    S3,
    T3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::S3_2, Family::S3, Family::T3];

    pub fn name(self) -> &'static str {
        match self {
            Family::S3_2 => "s3_2",
            Family::S3 => "s3",
            Family::T3 => "t3",
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::S3_2 => "E(S3_2,n)",
            Family::S3 => "E(S3_n)",
            Family::T3 => "E(T3_n)",
        }
    }

    pub fn generate(self, n: usize) -> Semigraph {
        match self {
            Family::S3_2 => gen_s3_2(n),
            Family::S3 => gen_s3(n),
            Family::T3 => gen_t3(n),
        }
    }

    pub fn closed_spectrum(self, n: usize) -> ClosedFormSpectrum {
        match self {
            Family::S3_2 => closed_spectrum_s3_2(n),
            Family::S3 => closed_spectrum_s3(n),
            Family::T3 => closed_spectrum_t3(n),
        }
    }
}

/// Rooted 3-uniform tree `T³ₙ` on 2n+1 vertices. Panics if `n == 0`.
pub fn gen_t3(n: usize) -> Semigraph {
    assert!(n >= 1, "family size must be positive");
    let edges: Vec<[usize; 3]> = (1..=n).map(|i| [1, 2 * i, 2 * i + 1]).collect();
    Semigraph::new(2 * n + 1, &edges).expect("T3 edges meet only at v1")
}

/// 3-uniform star `S³ₙ` on 2n+1 vertices; vertex 1 is the shared middle.
/// Panics if `n == 0`.
pub fn gen_s3(n: usize) -> Semigraph {
    assert!(n >= 1, "family size must be positive");
    let edges: Vec<[usize; 3]> = (1..=n).map(|i| [2 * i, 1, 2 * i + 1]).collect();
    Semigraph::new(2 * n + 1, &edges).expect("S3 edges meet only at the centre")
}

/// Star `S³₂,ₙ` on n+3 vertices. Panics if `n == 0`.
pub fn gen_s3_2(n: usize) -> Semigraph {
    assert!(n >= 1, "family size must be positive");
    let mut edges: Vec<Vec<usize>> = vec![vec![2, 1, 3]];
    edges.extend((1..=n).map(|i| vec![1, 3 + i]));
    Semigraph::new(n + 3, &edges).expect("S3_2 edges meet only at v1")
}

/// A closed-form eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectralValue {
    Rational(Rational64),
    /// `base + sign·√radicand`, radicand not a perfect square.
    Surd { base: i64, negative: bool, radicand: i64 },
    /// The `index`-th largest real root of `λ³ + a2·λ² + a1·λ + a0`.
    CubicRoot {
        a2: Rational64,
        a1: Rational64,
        a0: Rational64,
        index: usize,
    },
}

fn to_f64(r: Rational64) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl SpectralValue {
    pub fn value(&self) -> f64 {
        match self {
            SpectralValue::Rational(r) => to_f64(*r),
            SpectralValue::Surd { base, negative, radicand } => {
                let s = (*radicand as f64).sqrt();
                *base as f64 + if *negative { -s } else { s }
            }
            SpectralValue::CubicRoot { a2, a1, a0, index } => {
                // λ = t − a2/3 gives t³ + p t + q
                let third = Rational64::new(1, 3);
                let shift = *a2 * third;
                let p = *a1 - *a2 * *a2 * third;
                let q = Rational64::new(2, 27) * *a2 * *a2 * *a2 - *a2 * *a1 * third + *a0;
                let roots = solve_cubic_depressed(to_f64(p), to_f64(q));
                roots.get(*index).map_or(f64::NAN, |t| t - to_f64(shift))
            }
        }
    }
}

fn fmt_rational(r: Rational64) -> String {
    let sign = if r.is_negative() { "−" } else { "" };
    let a = r.abs();
    if a.is_integer() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}{}/{}", a.numer(), a.denom())
    }
}

fn fmt_term(coeff: Rational64, power: &str, out: &mut String) {
    if coeff.is_zero() {
        return;
    }
    out.push_str(if coeff.is_negative() { " − " } else { " + " });
    let a = coeff.abs();
    if !(a == Rational64::from_integer(1) && !power.is_empty()) {
        out.push_str(&fmt_rational(a));
    }
    out.push_str(power);
}

impl fmt::Display for SpectralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralValue::Rational(r) => write!(f, "{}", fmt_rational(*r)),
            SpectralValue::Surd { base, negative, radicand } => {
                let op = if *negative { "−" } else { "+" };
                if *base == 0 {
                    let lead = if *negative { "−" } else { "" };
                    write!(f, "{lead}√{radicand}")
                } else {
                    write!(f, "{}{op}√{radicand}", fmt_rational(Rational64::from_integer(*base)))
                }
            }
            SpectralValue::CubicRoot { a2, a1, a0, index } => {
                let mut poly = String::from("λ³");
                fmt_term(*a2, "λ²", &mut poly);
                fmt_term(*a1, "λ", &mut poly);
                fmt_term(*a0, "", &mut poly);
                write!(f, "root {} of {}", index + 1, poly)
            }
        }
    }
}

/// Closed-form spectrum: distinct descriptors with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClosedFormSpectrum {
    atoms: Vec<(SpectralValue, usize)>,
}

impl ClosedFormSpectrum {
    pub fn atoms(&self) -> &[(SpectralValue, usize)] {
        &self.atoms
    }

    /// Adds `multiplicity` copies of `value`, merging equal rationals and
    /// turning surds of perfect squares into rationals.
    pub fn push(&mut self, value: SpectralValue, multiplicity: usize) {
        if multiplicity == 0 {
            return;
        }
        let value = match value {
            SpectralValue::Surd { base, negative, radicand } => {
                let root = (radicand as f64).sqrt().round() as i64;
                if root * root == radicand {
                    SpectralValue::Rational(Rational64::from_integer(
                        base + if negative { -root } else { root },
                    ))
                } else {
                    SpectralValue::Surd { base, negative, radicand }
                }
            }
            other => other,
        };
        if let Some(atom) = self.atoms.iter_mut().find(|(v, _)| *v == value) {
            atom.1 += multiplicity;
        } else {
            self.atoms.push((value, multiplicity));
        }
    }

    pub fn len(&self) -> usize {
        self.atoms.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// All eigenvalues numerically, with multiplicity, descending.
    pub fn expand(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .atoms
            .iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v.value(), *m))
            .collect();
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }

    pub fn energy(&self) -> f64 {
        self.expand().iter().map(|x| x.abs()).sum()
    }
}

impl fmt::Display for ClosedFormSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (value, m)) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match value {
                SpectralValue::Rational(_) => write!(f, "{value} (×{m})")?,
                _ if *m > 1 => write!(f, "{value} (×{m})")?,
                _ => write!(f, "{value}")?,
            }
        }
        Ok(())
    }
}

fn ri(v: i64) -> Rational64 {
    Rational64::from_integer(v)
}

fn push_cubic(spectrum: &mut ClosedFormSpectrum, a2: Rational64, a1: Rational64, a0: Rational64) {
    for index in 0..3 {
        spectrum.push(SpectralValue::CubicRoot { a2, a1, a0, index }, 1);
    }
}

/// `{−1, 1}` each n−1 times plus the roots of λ³ − (5n+1)λ − 4n.
pub fn closed_spectrum_t3(n: usize) -> ClosedFormSpectrum {
    let k = n as i64;
    let mut s = ClosedFormSpectrum::default();
    s.push(SpectralValue::Rational(ri(1)), n - 1);
    s.push(SpectralValue::Rational(ri(-1)), n - 1);
    push_cubic(&mut s, ri(0), ri(-(5 * k + 1)), ri(-4 * k));
    s
}

/// `{−2: n, 2: n−1, 1 ± √(2n+1)}`.
pub fn closed_spectrum_s3(n: usize) -> ClosedFormSpectrum {
    let k = n as i64;
    let mut s = ClosedFormSpectrum::default();
    s.push(SpectralValue::Rational(ri(-2)), n);
    s.push(SpectralValue::Rational(ri(2)), n - 1);
    s.push(SpectralValue::Surd { base: 1, negative: true, radicand: 2 * k + 1 }, 1);
    s.push(SpectralValue::Surd { base: 1, negative: false, radicand: 2 * k + 1 }, 1);
    s
}

/// `{0: n−1, −2: 1}` plus the roots of λ³ − 2λ² − ((n+8)/4)λ + n/2.
pub fn closed_spectrum_s3_2(n: usize) -> ClosedFormSpectrum {
    let k = n as i64;
    let mut s = ClosedFormSpectrum::default();
    s.push(SpectralValue::Rational(ri(0)), n - 1);
    s.push(SpectralValue::Rational(ri(-2)), 1);
    push_cubic(&mut s, ri(-2), -Rational64::new(k + 8, 4), Rational64::new(k, 2));
    s
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyRow {
    pub family: Family,
    /// Energies from the generated semigraphs, n = 1..=n_max.
    pub numeric: Vec<f64>,
    /// Energies from the closed-form spectra.
    pub closed_form: Vec<f64>,
    /// Largest multiset gap between closed-form and numeric spectra.
    pub max_spectrum_gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyTable {
    pub n_max: usize,
    pub rows: Vec<FamilyRow>,
}

/// Energies of `S³₂,ₙ`, `S³ₙ` and `T³ₙ` for n = 1..=n_max.
pub fn energy_table(n_max: usize) -> Result<EnergyTable, SpectraError> {
    let mut rows = Vec::with_capacity(3);
    for family in Family::ALL {
        let mut row = FamilyRow {
            family,
            numeric: Vec::with_capacity(n_max),
            closed_form: Vec::with_capacity(n_max),
            max_spectrum_gap: 0.0,
        };
        for n in 1..=n_max {
            let spectrum = spectra::eigenvalues(&adjacency_matrix(&family.generate(n)))?;
            let closed = family.closed_spectrum(n);
            row.numeric.push(spectrum.energy().value());
            row.closed_form.push(closed.energy());
            let gap = multiset_distance(spectrum.eigenvalues(), &closed.expand());
            row.max_spectrum_gap = row.max_spectrum_gap.max(gap);
        }
        rows.push(row);
    }
    Ok(EnergyTable { n_max, rows })
}

/// Rounds half-up to `decimals` places.
pub fn round_half_up(x: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (x * scale + 0.5).floor() / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeCounts, VertexId};
    use crate::matrix::second_moment_direct;

    #[test]
    fn generators() {
        assert_eq!(gen_t3(1).edges()[0].vertices(), &[VertexId(1), VertexId(2), VertexId(3)]);
        let t3 = gen_t3(3);
        assert_eq!(t3.vertex_count(), 7);
        assert_eq!(t3.edge_counts(), EdgeCounts { m1: 3, m2: 0, m3: 0, m4: 0 });
        assert!(t3.is_connected());

        let s3 = gen_s3(4);
        assert_eq!((s3.vertex_count(), s3.edge_count()), (9, 4));
        assert_eq!(s3.edge_counts().m1, 4);

        assert_eq!(gen_s3_2(1).edge_counts(), EdgeCounts { m1: 1, m2: 0, m3: 1, m4: 0 });
        assert_eq!(gen_s3_2(2).edge_counts(), EdgeCounts { m1: 1, m2: 0, m3: 2, m4: 0 });
    }

    #[test]
    fn t3_row_of_root() {
        let a = adjacency_matrix(&gen_t3(2));
        let row: Vec<f64> = (0..5).map(|j| a.entry_f64(0, j)).collect();
        assert_eq!(row, vec![0.0, 1.0, 2.0, 1.0, 2.0]);
    }

    #[test]
    fn s3_entries() {
        let a = adjacency_matrix(&gen_s3(2));
        let mut ones = 0;
        let mut twos = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                match a.quarters(i, j) {
                    4 => ones += 1,
                    8 => twos += 1,
                    0 => {}
                    q => panic!("unexpected entry {q}/4"),
                }
            }
        }
        assert_eq!((ones, twos), (4, 2));
    }

    #[test]
    fn s3_2_entries_and_moment() {
        let a = adjacency_matrix(&gen_s3_2(1));
        assert_eq!(a.entry(1, 2), ri(2));
        assert_eq!(a.entry(0, 1), ri(1));
        assert_eq!(a.entry(0, 2), ri(1));
        assert_eq!(a.entry(0, 3), Rational64::new(1, 2));
        assert_eq!(second_moment_direct(&adjacency_matrix(&gen_s3_2(2))), ri(13));
    }

    #[test]
    fn closed_forms_display() {
        assert_eq!(closed_spectrum_s3(1).to_string(), "−2 (×1), 1−√3, 1+√3");
        let s = closed_spectrum_s3(4);
        assert_eq!(s.to_string(), "−2 (×5), 2 (×3), 4 (×1)");
        assert_eq!(s.len(), 9);
        assert_eq!(
            closed_spectrum_s3_2(1).atoms()[1].0.to_string(),
            "root 1 of λ³ − 2λ² − 9/4λ + 1/2"
        );
    }

    #[test]
    fn closed_form_sizes() {
        for n in 1..6 {
            assert_eq!(closed_spectrum_t3(n).len(), 2 * n + 1);
            assert_eq!(closed_spectrum_s3(n).len(), 2 * n + 1);
            assert_eq!(closed_spectrum_s3_2(n).len(), n + 3);
        }
    }

    #[test]
    fn s3_energy_closed_form() {
        for n in 1..=10 {
            let r = (2.0 * n as f64 + 1.0).sqrt();
            let expected = 2.0 * n as f64 + 2.0 * (n as f64 - 1.0) + (1.0 - r).abs() + 1.0 + r;
            let numeric = spectra::energy(&adjacency_matrix(&gen_s3(n))).unwrap().value();
            assert!((numeric - expected).abs() < 1e-10, "n={n}");
        }
    }

    #[test]
    fn rounding() {
        assert_eq!(round_half_up(5.888236, 2), 5.89);
        assert_eq!(round_half_up(20.0, 2), 20.0);
        assert_eq!(round_half_up(0.125, 2), 0.13);
    }

    #[test]
    fn family_names_roundtrip() {
        for f in Family::ALL {
            assert_eq!(Family::parse(f.name()), Some(f));
        }
        assert_eq!(Family::parse("k4"), None);
    }
}
