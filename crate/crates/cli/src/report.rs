//! Machine-readable reports. JSON is the canonical form; text and TSV are
//! projections of the same documents.

use std::fmt::Write as _;

use semigraph::bounds::{lower_bound, upper_bound_cs, upper_bound_lambda1, BoundsError};
use semigraph::families::{energy_table, round_half_up, ClosedFormSpectrum, Family};
use semigraph::product::ProductCheck;
use semigraph::spectra::{self, char_poly_exact, multiset_distance, Spectrum};
use semigraph::{
    adjacency_matrix, check_rationality, degrees, second_moment_direct, second_moment_paper, EdgeCounts,
    MomentMode, RationalityClass, Semigraph,
};
use serde::Serialize;

use crate::CliError;

/// Rounds to 12 significant digits. Values within `zero_tol` of zero, and
/// negative zero, become `0.0`.
pub fn significant12(x: f64, zero_tol: f64) -> f64 {
    if x.abs() <= zero_tol || x == 0.0 {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// `p/q` in lowest terms, with `q = 1` for integers.
pub fn ratio_string<T: std::fmt::Display + Clone + num_integer::Integer>(r: &num_rational::Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeCountsDoc {
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
    pub m4: usize,
}

impl From<EdgeCounts> for EdgeCountsDoc {
    fn from(c: EdgeCounts) -> Self {
        EdgeCountsDoc { m1: c.m1, m2: c.m2, m3: c.m3, m4: c.m4 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsDoc {
    pub moment_mode: &'static str,
    pub second_moment: String,
    pub lower: Option<f64>,
    pub upper_cs: Option<f64>,
    pub upper_l1: Option<f64>,
    pub tight_l1: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RationalityDoc {
    pub all_rational: bool,
    pub energy_exact: Option<String>,
    pub classification: &'static str,
    pub has_middle_end: bool,
    pub dichotomy_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootDoc {
    pub value: String,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharPolyDoc {
    /// The polynomial is `det(μI − 4A)`; eigenvalues are `λ = μ/4`.
    pub variable: &'static str,
    pub scale: u32,
    /// Exact integer coefficients, constant term first.
    pub coefficients: Vec<String>,
    pub rational_eigenvalues: Vec<RootDoc>,
    /// Degree of the factor left after removing rational roots.
    pub remainder_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtomDoc {
    pub form: String,
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormDoc {
    pub family: &'static str,
    pub n: usize,
    pub descriptor: String,
    pub atoms: Vec<AtomDoc>,
    pub energy: f64,
    pub max_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductCheckDoc {
    pub matrices_equal: bool,
    pub max_entry_diff: String,
    pub spectra_additive: bool,
    pub spectral_gap: f64,
}

impl From<&ProductCheck> for ProductCheckDoc {
    fn from(c: &ProductCheck) -> Self {
        ProductCheckDoc {
            matrices_equal: c.matrices_equal,
            max_entry_diff: ratio_string(&c.max_entry_diff),
            spectra_additive: c.spectra_additive,
            spectral_gap: c.spectral_gap,
        }
    }
}

/// Summary of one semigraph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub n: usize,
    pub m: usize,
    pub edge_counts: EdgeCountsDoc,
    pub degrees: Vec<String>,
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rationality: Option<RationalityDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub char_poly: Option<CharPolyDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedFormDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_check: Option<ProductCheckDoc>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub exact: bool,
    pub bounds: bool,
    pub moment_mode: MomentMode,
}

fn rationality_name(c: &RationalityClass) -> &'static str {
    match c {
        RationalityClass::EvenInteger => "even_integer",
        RationalityClass::Dyadic { .. } => "dyadic",
        RationalityClass::NonDyadic => "non_dyadic",
        RationalityClass::IrrationalPresent => "irrational_present",
    }
}

/// Converts negative radicands into warnings, passes other errors through.
fn soft_bound(result: Result<f64, BoundsError>, warnings: &mut Vec<String>) -> Result<Option<f64>, CliError> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(e @ BoundsError::NegativeRadicand { .. }) => {
            warnings.push(e.to_string());
            Ok(None)
        }
        Err(BoundsError::Spectrum(e)) => Err(e.into()),
    }
}

fn bounds_doc(g: &Semigraph, spectrum: &Spectrum, mode: MomentMode) -> Result<BoundsDoc, CliError> {
    let a = adjacency_matrix(g);
    let moment = match mode {
        MomentMode::Direct => second_moment_direct(&a),
        MomentMode::Paper => second_moment_paper(g),
    };
    let mut warnings = Vec::new();
    let lower = soft_bound(lower_bound(g, mode), &mut warnings)?;
    let upper_cs = soft_bound(upper_bound_cs(g, mode), &mut warnings)?;
    let upper_l1 = soft_bound(upper_bound_lambda1(g, mode), &mut warnings)?;
    let tau = spectra::tolerance(&a);
    let energy = spectrum.energy().value();
    Ok(BoundsDoc {
        moment_mode: mode.as_str(),
        second_moment: ratio_string(&moment),
        lower,
        upper_cs,
        tight_l1: upper_l1.map(|u| (energy - u).abs() <= tau),
        upper_l1,
        warnings,
    })
}

fn char_poly_doc(g: &Semigraph) -> CharPolyDoc {
    let poly = char_poly_exact(&adjacency_matrix(g));
    let roots = poly.rational_eigenvalues();
    CharPolyDoc {
        variable: "mu = 4 lambda",
        scale: poly.scale(),
        coefficients: poly.coeffs().iter().map(|c| c.to_string()).collect(),
        rational_eigenvalues: roots
            .roots
            .iter()
            .map(|(r, m)| RootDoc { value: ratio_string(r), multiplicity: *m })
            .collect(),
        remainder_degree: roots.remainder.len() - 1,
    }
}

fn rationality_doc(g: &Semigraph) -> RationalityDoc {
    let r = check_rationality(g);
    RationalityDoc {
        all_rational: r.all_rational,
        energy_exact: r.energy_exact.as_ref().map(ratio_string),
        classification: rationality_name(&r.classification),
        has_middle_end: r.has_middle_end,
        dichotomy_holds: r.dichotomy_holds,
    }
}

pub fn closed_form_doc(family: Family, n: usize, closed: &ClosedFormSpectrum, numeric: &Spectrum) -> ClosedFormDoc {
    ClosedFormDoc {
        family: family.name(),
        n,
        descriptor: closed.to_string(),
        atoms: closed
            .atoms()
            .iter()
            .map(|(v, m)| AtomDoc { form: v.to_string(), value: significant12(v.value(), 0.0), multiplicity: *m })
            .collect(),
        energy: closed.energy(),
        max_gap: multiset_distance(numeric.eigenvalues(), &closed.expand()),
    }
}

impl ReportDocument {
    pub fn build(g: &Semigraph, options: ReportOptions) -> Result<ReportDocument, CliError> {
        let a = adjacency_matrix(g);
        let spectrum = spectra::eigenvalues(&a)?;
        let tau = spectra::tolerance(&a);
        Ok(ReportDocument {
            n: g.vertex_count(),
            m: g.edge_count(),
            edge_counts: g.edge_counts().into(),
            degrees: degrees(g).values().iter().map(ratio_string).collect(),
            eigenvalues: spectrum.eigenvalues().iter().map(|&x| significant12(x, tau)).collect(),
            energy: spectrum.energy().value(),
            bounds: if options.bounds {
                Some(bounds_doc(g, &spectrum, options.moment_mode)?)
            } else {
                None
            },
            rationality: options.exact.then(|| rationality_doc(g)),
            char_poly: options.exact.then(|| char_poly_doc(g)),
            closed_form: None,
            product_check: None,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.edge_counts;
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "m: {}", self.m);
        let _ = writeln!(out, "edge_counts: m1={} m2={} m3={} m4={}", c.m1, c.m2, c.m3, c.m4);
        let _ = writeln!(out, "degrees: {}", self.degrees.join(" "));
        let eigen: Vec<String> = self.eigenvalues.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "eigenvalues: {}", eigen.join(" "));
        let _ = writeln!(out, "energy: {} ({:.2})", self.energy, round_half_up(self.energy, 2));
        if let Some(b) = &self.bounds {
            let show = |v: Option<f64>| v.map_or("undefined".to_string(), |x| x.to_string());
            let _ = writeln!(out, "second_moment ({}): {}", b.moment_mode, b.second_moment);
            let _ = writeln!(out, "lower: {}", show(b.lower));
            let _ = writeln!(out, "upper_cs: {}", show(b.upper_cs));
            let _ = writeln!(out, "upper_l1: {}", show(b.upper_l1));
            if let Some(t) = b.tight_l1 {
                let _ = writeln!(out, "tight_l1: {t}");
            }
        }
        if let Some(p) = &self.char_poly {
            let _ = writeln!(out, "char_poly ({}, low to high): {}", p.variable, p.coefficients.join(" "));
            let roots: Vec<String> = p
                .rational_eigenvalues
                .iter()
                .map(|r| format!("{}:{}", r.value, r.multiplicity))
                .collect();
            let _ = writeln!(out, "rational_eigenvalues: {{{}}}", roots.join(", "));
            let _ = writeln!(out, "remainder_degree: {}", p.remainder_degree);
        }
        if let Some(r) = &self.rationality {
            let _ = writeln!(
                out,
                "rationality: {} (energy_exact {}, middle_end {}, dichotomy_holds {})",
                r.classification,
                r.energy_exact.as_deref().unwrap_or("none"),
                r.has_middle_end,
                r.dichotomy_holds
            );
        }
        if let Some(cf) = &self.closed_form {
            let _ = writeln!(out, "closed_form: {}", cf.descriptor);
            let _ = writeln!(out, "closed_form_energy: {}", cf.energy);
            let _ = writeln!(out, "closed_form_gap: {:e}", cf.max_gap);
        }
        if let Some(p) = &self.product_check {
            let _ = writeln!(out, "matrices_equal: {}", p.matrices_equal);
            let _ = writeln!(out, "max_entry_diff: {}", p.max_entry_diff);
            let _ = writeln!(out, "spectra_additive: {}", p.spectra_additive);
            let _ = writeln!(out, "spectral_gap: {:e}", p.spectral_gap);
        }
        out
    }

    /// Warnings that should also reach stderr.
    pub fn warnings(&self) -> Vec<String> {
        self.bounds.as_ref().map(|b| b.warnings.clone()).unwrap_or_default()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRowDoc {
    pub family: &'static str,
    pub label: &'static str,
    /// Energies rounded half-up to two decimals.
    pub rounded: Vec<f64>,
    /// Full-precision energies of the generated semigraphs.
    pub energy: Vec<f64>,
    /// Full-precision energies of the closed-form spectra.
    pub closed_form_energy: Vec<f64>,
    pub max_spectrum_gap: f64,
}

/// The family energy table for n = 1..=n_max.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableDocument {
    pub n_max: usize,
    pub rows: Vec<TableRowDoc>,
}

impl TableDocument {
    pub fn build(n_max: usize) -> Result<TableDocument, CliError> {
        let table = energy_table(n_max)?;
        Ok(TableDocument {
            n_max,
            rows: table
                .rows
                .iter()
                .map(|r| TableRowDoc {
                    family: r.family.name(),
                    label: r.family.label(),
                    rounded: r.numeric.iter().map(|&e| round_half_up(e, 2)).collect(),
                    energy: r.numeric.clone(),
                    closed_form_energy: r.closed_form.clone(),
                    max_spectrum_gap: r.max_spectrum_gap,
                })
                .collect(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    /// Long format: one line per family and n.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("family\tn\tenergy_2dp\tenergy\tclosed_form_energy\n");
        for row in &self.rows {
            for i in 0..self.n_max {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{:.2}\t{}\t{}",
                    row.family,
                    i + 1,
                    row.rounded[i],
                    row.energy[i],
                    row.closed_form_energy[i]
                );
            }
        }
        out
    }

    /// The table as printed, one row per family.
    pub fn to_text(&self) -> String {
        let mut out = String::from("family");
        for n in 1..=self.n_max {
            let _ = write!(out, "\tn={n}");
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(row.label);
            for v in &row.rounded {
                let _ = write!(out, "\t{v:.2}");
            }
            out.push('\n');
        }
        out
    }
}
