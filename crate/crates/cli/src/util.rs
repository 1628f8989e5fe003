//! Shared CLI plumbing: error-to-exit-code mapping, file IO with context,
//! rational argument parsing, and wall-clock deadlines for the exact
//! searches.

use std::path::Path;
use std::time::{Duration, Instant};

use rptri_core::formats;
use rptri_core::hull::PointConfiguration;
use rptri_core::ratmath::Rational;

/// Exit codes: 1 check failure, 2 usage/parse errors, 3 precondition
/// failures.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Precondition(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m)
            | CliError::Parse(m)
            | CliError::Precondition(m)
            | CliError::Io(m) => m,
        }
    }
}

pub fn parse_rational_arg(name: &str, s: &str) -> Result<Rational, CliError> {
    formats::parse_rational(s)
        .ok_or_else(|| CliError::Usage(format!("--{name}: `{s}` is not a rational (use p/q)")))
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))
}

pub fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))
}

pub fn load_points(path: &Path) -> Result<PointConfiguration, CliError> {
    let text = read_file(path)?;
    formats::parse_points(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn load_facets(path: &Path) -> Result<rptri_core::complex::SimplicialComplex, CliError> {
    let text = read_file(path)?;
    formats::parse_facets(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// A stop callback that fires once the wall-clock budget is spent.
pub fn deadline_stop(seconds: u64) -> impl FnMut() -> bool {
    let deadline = Instant::now() + Duration::from_secs(seconds);
    move || Instant::now() >= deadline
}

pub use rptri_core::ratmath::rational_to_f64;

pub fn config_to_floats(config: &PointConfiguration) -> Vec<Vec<f64>> {
    config
        .points()
        .iter()
        .map(|p| p.entries().iter().map(rational_to_f64).collect())
        .collect()
}

pub fn format_usize_vec(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", inner.join(", "))
}
