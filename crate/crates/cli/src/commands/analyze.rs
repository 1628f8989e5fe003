//! Threshold-graph tables for point files and combinatorial summaries for
//! facet files.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use rptri_core::complex::automorphism_group;
use rptri_core::graphs::{chromatic_number, degree_profile, threshold_graph};
use rptri_core::ratmath::{format_rational, Rational};

use crate::util::{deadline_stop, load_facets, load_points, CliError};

pub struct AnalyzeArgs {
    pub points: Option<PathBuf>,
    pub facets: Option<PathBuf>,
    pub thresholds: Vec<Rational>,
    pub chromatic: bool,
    pub time_limit: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub threshold: String,
    pub regular: Option<usize>,
    pub edges: usize,
    pub chromatic_exact: Option<usize>,
    pub chromatic_bounds: Option<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FacetSummary {
    pub n_vertices: usize,
    pub dim: usize,
    pub pure: bool,
    pub f_vector: Vec<usize>,
    pub edge_count: usize,
    pub automorphism_order: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub command: String,
    pub rows: Vec<ThresholdRow>,
    pub facet_summary: Option<FacetSummary>,
}

pub fn run(args: &AnalyzeArgs) -> Result<AnalyzeOutput, CliError> {
    let mut out = AnalyzeOutput {
        command: "analyze".to_string(),
        rows: Vec::new(),
        facet_summary: None,
    };
    if args.points.is_none() && args.facets.is_none() {
        return Err(CliError::Usage(
            "analyze needs --points and/or --facets".to_string(),
        ));
    }
    if let Some(path) = &args.points {
        let config = load_points(path)?;
        for t in &args.thresholds {
            let g = threshold_graph(&config, t);
            let profile = degree_profile(&g);
            let mut row = ThresholdRow {
                threshold: format_rational(t),
                regular: profile.regular,
                edges: profile.edge_count,
                chromatic_exact: None,
                chromatic_bounds: None,
            };
            if args.chromatic {
                let mut stop = deadline_stop(args.time_limit);
                let result = chromatic_number(&g, &mut stop);
                match result.chromatic_number() {
                    Some(chi) => row.chromatic_exact = Some(chi),
                    None => {
                        row.chromatic_bounds = Some((result.lower_bound, result.upper_bound))
                    }
                }
            }
            out.rows.push(row);
        }
    }
    if let Some(path) = &args.facets {
        let complex = load_facets(path)?;
        let aut = automorphism_group(&complex);
        out.facet_summary = Some(FacetSummary {
            n_vertices: complex.n_vertices(),
            dim: complex.dim(),
            pure: complex.is_pure(),
            f_vector: complex.f_vector(),
            edge_count: complex.skeleton_graph().edge_count(),
            automorphism_order: aut.order().to_string(),
        });
    }
    Ok(out)
}

pub fn render_text(out: &AnalyzeOutput) -> String {
    use std::fmt::Write;
    let mut s = String::new();
    if !out.rows.is_empty() {
        let _ = writeln!(s, "{:>10}  {:>9}  {:>7}  chromatic", "threshold", "regular", "edges");
        for row in &out.rows {
            let reg = match row.regular {
                Some(d) => format!("{d}-regular"),
                None => "irregular".to_string(),
            };
            let chi = match (row.chromatic_exact, row.chromatic_bounds) {
                (Some(c), _) => format!("{c}"),
                (None, Some((lo, hi))) => format!("[{lo}, {hi}]"),
                _ => "-".to_string(),
            };
            let _ = writeln!(s, "{:>10}  {:>9}  {:>7}  {chi}", row.threshold, reg, row.edges);
        }
    }
    if let Some(f) = &out.facet_summary {
        let fv: Vec<String> = f.f_vector.iter().map(usize::to_string).collect();
        let _ = writeln!(
            s,
            "facets: {} vertices, dim {}, pure: {}, f-vector ({}), {} edges, automorphism order {}",
            f.n_vertices,
            f.dim,
            f.pure,
            fv.join(", "),
            f.edge_count,
            f.automorphism_order
        );
    }
    s
}
