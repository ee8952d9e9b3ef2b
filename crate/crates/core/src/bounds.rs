//! Energy bounds and the rational-energy dichotomy.
//!
//! All three bounds are driven by the second moment M₂ = Σλᵢ²:
//!
//! - `upper_cs`: ℰ ≤ √(n·M₂)
//! - `lower`:    ℰ ≥ √(2·M₂)
//! - `upper_l1`: ℰ ≤ λ₁ + √((n−1)(M₂ − λ₁²))
//!
//! [`MomentMode::Direct`] takes M₂ = trace(A²). [`MomentMode::Paper`] uses the
//! closed edge-size formula from [`second_moment_paper`], which can differ
//! from the true moment once half edges are present; in that mode a radicand
//! may go negative.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Semigraph;
use crate::matrix::{adjacency_matrix, second_moment_direct, second_moment_paper, QuarterMatrix};
use crate::spectra::{self, char_poly_exact, RationalRoots, SpectraError, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MomentMode {
    #[default]
    Direct,
    Paper,
}

impl MomentMode {
    pub fn as_str(self) -> &'static str {
        match self {
            MomentMode::Direct => "direct",
            MomentMode::Paper => "paper",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("{bound} bound has negative radicand {radicand}")]
    NegativeRadicand { bound: &'static str, radicand: f64 },
    #[error(transparent)]
    Spectrum(#[from] SpectraError),
}

/// Energy with its three bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub energy: f64,
    pub lower: f64,
    pub upper_cs: f64,
    pub upper_l1: f64,
    pub moment_mode: MomentMode,
    pub tight_l1: bool,
}

fn moment(g: &Semigraph, a: &QuarterMatrix, mode: MomentMode) -> f64 {
    let m = match mode {
        MomentMode::Direct => second_moment_direct(a),
        MomentMode::Paper => second_moment_paper(g),
    };
    *m.numer() as f64 / *m.denom() as f64
}

fn checked_sqrt(bound: &'static str, radicand: f64, slack: f64) -> Result<f64, BoundsError> {
    if radicand >= 0.0 {
        Ok(radicand.sqrt())
    } else if radicand >= -slack {
        Ok(0.0)
    } else {
        Err(BoundsError::NegativeRadicand { bound, radicand })
    }
}

fn cs_from(n: usize, m2: f64) -> Result<f64, BoundsError> {
    checked_sqrt("Cauchy-Schwarz upper", n as f64 * m2, 0.0)
}

fn lower_from(m2: f64) -> Result<f64, BoundsError> {
    checked_sqrt("lower", 2.0 * m2, 0.0)
}

fn l1_from(n: usize, m2: f64, spectrum: &Spectrum, tau: f64) -> Result<f64, BoundsError> {
    let lambda1 = spectrum.largest().unwrap_or(0.0);
    let radicand = (n as f64 - 1.0) * (m2 - lambda1 * lambda1);
    // rounding in λ₁ can push an exactly-zero radicand slightly negative
    let slack = (n as f64) * tau * (1.0 + lambda1.abs());
    Ok(lambda1 + checked_sqrt("largest-eigenvalue upper", radicand, slack)?)
}

/// √(n·M₂).
pub fn upper_bound_cs(g: &Semigraph, mode: MomentMode) -> Result<f64, BoundsError> {
    let a = adjacency_matrix(g);
    cs_from(g.vertex_count(), moment(g, &a, mode))
}

/// √(2·M₂).
pub fn lower_bound(g: &Semigraph, mode: MomentMode) -> Result<f64, BoundsError> {
    let a = adjacency_matrix(g);
    lower_from(moment(g, &a, mode))
}

/// λ₁ + √((n−1)(M₂ − λ₁²)) with λ₁ the largest numeric eigenvalue.
pub fn upper_bound_lambda1(g: &Semigraph, mode: MomentMode) -> Result<f64, BoundsError> {
    let a = adjacency_matrix(g);
    let spectrum = spectra::eigenvalues(&a)?;
    l1_from(
        g.vertex_count(),
        moment(g, &a, mode),
        &spectrum,
        spectra::tolerance(&a),
    )
}

/// Energy and all three bounds from a single eigensolve.
pub fn energy_report(g: &Semigraph, mode: MomentMode) -> Result<EnergyReport, BoundsError> {
    let a = adjacency_matrix(g);
    let spectrum = spectra::eigenvalues(&a)?;
    let tau = spectra::tolerance(&a);
    let n = g.vertex_count();
    let m2 = moment(g, &a, mode);
    let energy = spectrum.energy().value();
    let upper_l1 = l1_from(n, m2, &spectrum, tau)?;
    Ok(EnergyReport {
        energy,
        lower: lower_from(m2)?,
        upper_cs: cs_from(n, m2)?,
        upper_l1,
        moment_mode: mode,
        tight_l1: (energy - upper_l1).abs() <= tau,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalityClass {
    EvenInteger,
    /// Energy equals `numerator / 2^exponent` in lowest terms, `exponent ≥ 0`.
    Dyadic { numerator: BigInt, exponent: u32 },
    /// A rational energy whose denominator is not a power of two.
    NonDyadic,
    IrrationalPresent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityReport {
    pub all_rational: bool,
    pub energy_exact: Option<BigRational>,
    pub classification: RationalityClass,
    pub has_middle_end: bool,
    /// False when the concrete input contradicts the dichotomy: a rational
    /// energy must be an even integer without middle-end vertices and dyadic
    /// with them.
    pub dichotomy_holds: bool,
    pub roots: RationalRoots,
}

fn classify_rational(energy: &BigRational) -> RationalityClass {
    let two = BigInt::from(2);
    if energy.is_integer() && (energy.to_integer() % &two).is_zero() {
        return RationalityClass::EvenInteger;
    }
    let mut denom = energy.denom().clone();
    let mut exponent = 0;
    while (&denom % &two).is_zero() {
        denom /= &two;
        exponent += 1;
    }
    if denom.is_one() {
        RationalityClass::Dyadic {
            numerator: energy.numer().clone(),
            exponent,
        }
    } else {
        RationalityClass::NonDyadic
    }
}

/// Checks the rational-energy dichotomy on `g` using exact arithmetic.
pub fn check_rationality(g: &Semigraph) -> RationalityReport {
    let roots = char_poly_exact(&adjacency_matrix(g)).rational_eigenvalues();
    let has_middle_end = g.has_middle_end_vertex();
    if !roots.all_rational() {
        return RationalityReport {
            all_rational: false,
            energy_exact: None,
            classification: RationalityClass::IrrationalPresent,
            has_middle_end,
            dichotomy_holds: true,
            roots,
        };
    }
    let energy = roots
        .roots
        .iter()
        .fold(BigRational::zero(), |acc, (lambda, m)| {
            acc + lambda.abs() * BigRational::from_integer(BigInt::from(*m))
        });
    let classification = classify_rational(&energy);
    let dichotomy_holds = match &classification {
        RationalityClass::EvenInteger => true,
        RationalityClass::Dyadic { .. } => has_middle_end,
        _ => false,
    };
    RationalityReport {
        all_rational: true,
        energy_exact: Some(energy),
        classification,
        has_middle_end,
        dichotomy_holds,
        roots,
    }
}

/// Energy rounded to `f64`, when exact.
pub fn exact_energy_f64(report: &RationalityReport) -> Option<f64> {
    report.energy_exact.as_ref().and_then(|e| e.to_f64())
}
