//! File format, reports and subcommands behind the `semigraph` binary.
//!
//! Every command returns its output as a string so that the binary only
//! prints and exits. Exit codes: 0 success, 1 parse or validation failure,
//! 2 numeric failure.

pub mod format;
pub mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use semigraph::families::Family;
use semigraph::product::{cartesian_product, product_consistency_check, ProductError};
use semigraph::spectra::{self, SpectraError};
use semigraph::{adjacency_matrix, MomentMode, Semigraph, VertexClass};
use thiserror::Error;

pub use format::{parse_semigraph, FileError, ParseError, SemigraphFile};
pub use report::{ReportDocument, ReportOptions, TableDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    File {
        path: PathBuf,
        #[source]
        source: FileError,
    },
    #[error("{0}")]
    Usage(String),
    #[error("ProductViolatesSemigraphAxiom: {0}")]
    Product(semigraph::GraphError),
    #[error("ConvergenceFailure: {0}")]
    Numeric(#[from] SpectraError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numeric(_) => 2,
            _ => 1,
        }
    }
}

impl From<ProductError> for CliError {
    fn from(e: ProductError) -> Self {
        match e {
            ProductError::ProductViolatesSemigraphAxiom(g) => CliError::Product(g),
            ProductError::Spectrum(s) => CliError::Numeric(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Tsv,
}

/// Result of a successful command.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutput {
    pub stdout: String,
    pub warnings: Vec<String>,
}

impl CommandOutput {
    fn text(stdout: String) -> Self {
        CommandOutput { stdout, warnings: Vec::new() }
    }
}

pub fn load_semigraph(path: &Path) -> Result<Semigraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_semigraph(&text).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn render(doc: &ReportDocument, format: OutputFormat) -> CommandOutput {
    let stdout = match format {
        OutputFormat::Json => doc.to_json() + "\n",
        _ => doc.to_text(),
    };
    CommandOutput { stdout, warnings: doc.warnings() }
}

fn connectivity_line(g: &Semigraph) -> String {
    if g.is_connected() {
        return "connected".into();
    }
    let isolated: Vec<String> = g.isolated_vertices().iter().map(|v| v.0.to_string()).collect();
    match isolated.len() {
        0 => "not connected".into(),
        1 => format!("not connected (isolated vertex {})", isolated[0]),
        _ => format!("not connected (isolated vertices {})", isolated.join(", ")),
    }
}

/// Checks a file; the output lists class counts and connectivity.
pub fn cmd_validate(path: &Path) -> Result<CommandOutput, CliError> {
    let g = load_semigraph(path)?;
    let mut counts = [0usize; 4];
    for class in g.vertex_classes() {
        let slot = match class {
            VertexClass::PureEnd => 0,
            VertexClass::PureMiddle => 1,
            VertexClass::MiddleEnd => 2,
            VertexClass::Isolated => 3,
        };
        counts[slot] += 1;
    }
    let c = g.edge_counts();
    let mut out = String::new();
    let _ = writeln!(out, "valid semigraph: n = {}, m = {}", g.vertex_count(), g.edge_count());
    let _ = writeln!(
        out,
        "vertices: pure_end {}, pure_middle {}, middle_end {}, isolated {}",
        counts[0], counts[1], counts[2], counts[3]
    );
    let _ = writeln!(out, "edges: m1 {}, m2 {}, m3 {}, m4 {}", c.m1, c.m2, c.m3, c.m4);
    let _ = writeln!(out, "{}", connectivity_line(&g));
    Ok(CommandOutput::text(out))
}

/// Numeric eigenvalues; with `exact` also the characteristic polynomial of
/// 4A, its rational roots and the rationality classification.
pub fn cmd_spectrum(path: &Path, exact: bool, format: OutputFormat) -> Result<CommandOutput, CliError> {
    let g = load_semigraph(path)?;
    let doc = ReportDocument::build(&g, ReportOptions { exact, ..Default::default() })?;
    Ok(render(&doc, format))
}

/// Energy; with `bounds` also the three bounds under `mode`.
pub fn cmd_energy(path: &Path, bounds: bool, mode: MomentMode, format: OutputFormat) -> Result<CommandOutput, CliError> {
    let g = load_semigraph(path)?;
    let doc = ReportDocument::build(
        &g,
        ReportOptions {
            bounds,
            moment_mode: mode,
            ..Default::default()
        },
    )?;
    Ok(render(&doc, format))
}

/// Report for a family member, or with `emit_file` the member as a file.
pub fn family_report(family: Family, n: usize, closed_form: bool) -> Result<ReportDocument, CliError> {
    let g = family.generate(n);
    let mut doc = ReportDocument::build(&g, ReportOptions::default())?;
    if closed_form {
        let numeric = spectra::eigenvalues(&adjacency_matrix(&g))?;
        doc.closed_form = Some(report::closed_form_doc(family, n, &family.closed_spectrum(n), &numeric));
    }
    Ok(doc)
}

pub fn cmd_family(
    family: Family,
    n: usize,
    emit_file: bool,
    closed_form: bool,
    format: OutputFormat,
) -> Result<CommandOutput, CliError> {
    if n == 0 {
        return Err(CliError::Usage("family members are defined for n >= 1".into()));
    }
    if emit_file {
        let file = SemigraphFile::from_semigraph(&family.generate(n));
        return Ok(CommandOutput::text(format!("# {} n={n}\n{file}", family.name())));
    }
    Ok(render(&family_report(family, n, closed_form)?, format))
}

pub fn cmd_table(n_max: usize, format: OutputFormat) -> Result<CommandOutput, CliError> {
    if n_max == 0 {
        return Err(CliError::Usage("table needs n_max >= 1".into()));
    }
    let table = TableDocument::build(n_max)?;
    Ok(CommandOutput::text(match format {
        OutputFormat::Json => table.to_json() + "\n",
        OutputFormat::Tsv => table.to_tsv(),
        OutputFormat::Text => table.to_text(),
    }))
}

/// Report on the Cartesian product; with `check` also the comparison
/// against the Kronecker sum of the factor matrices.
pub fn cmd_product(left: &Path, right: &Path, check: bool, format: OutputFormat) -> Result<CommandOutput, CliError> {
    let g1 = load_semigraph(left)?;
    let g2 = load_semigraph(right)?;
    let (p, _) = cartesian_product(&g1, &g2)?;
    let mut doc = ReportDocument::build(&p, ReportOptions::default())?;
    if check {
        doc.product_check = Some((&product_consistency_check(&g1, &g2)?).into());
    }
    Ok(render(&doc, format))
}
