//! The discovery pipeline commands: annealing search, L1 sparsification, and
//! rationalization. Each writes its artifact in the points file format and
//! prints a short summary; all are deterministic for fixed seeds.

use std::path::PathBuf;

use rptri_core::formats;
use rptri_core::ratmath::format_rational;
use rptri_core::search::{
    antipodal_edge_objective, l1_sparsify, minmax_edge_search, rationalize, AnnealSchedule,
};

use crate::util::{config_to_floats, load_points, write_file, CliError};

pub struct SearchArgs {
    pub n: usize,
    pub dim: usize,
    pub seed: u64,
    pub iters: u64,
    pub t_initial: f64,
    pub t_final: f64,
    pub out: Option<PathBuf>,
}

pub fn run_search(args: &SearchArgs) -> Result<String, CliError> {
    let schedule = AnnealSchedule {
        t_initial: args.t_initial,
        t_final: args.t_final,
        ..AnnealSchedule::default()
    };
    let state = minmax_edge_search(args.n, args.dim, args.seed, args.iters, &schedule)
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    let mut full: Vec<Vec<f64>> = state.best_points.clone();
    for p in &state.best_points {
        full.push(p.iter().map(|x| -x).collect());
    }
    let mut summary = format!(
        "n={} d={} seed={} iterations={}\ninitial best objective: {:.12}\nfinal best objective:   {:.12}\nimprovement events: {}\n",
        args.n,
        args.dim,
        state.seed,
        state.iterations,
        state.trace.first().map_or(f64::NAN, |t| t.1),
        state.best_objective,
        state.trace.len(),
    );
    if let Some(out) = &args.out {
        write_file(out, &formats::render_float_points(&full, args.dim))?;
        summary.push_str(&format!("configuration written to {}\n", out.display()));
    }
    Ok(summary)
}

pub struct SparsifyArgs {
    pub points: PathBuf,
    pub seed: u64,
    pub sweeps: usize,
    pub out: Option<PathBuf>,
}

pub fn run_sparsify(args: &SparsifyArgs) -> Result<String, CliError> {
    let config = load_points(&args.points)?;
    let floats = config_to_floats(&config);
    let (frame, f_value) = l1_sparsify(&floats, args.seed, args.sweeps)
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    let rotated: Vec<Vec<f64>> = floats.iter().map(|p| frame.apply(p)).collect();
    let near_zero = rotated
        .iter()
        .flat_map(|p| p.iter())
        .filter(|x| x.abs() < 1e-6)
        .count();
    let mut summary = format!(
        "l1 objective: {f_value:.12}\northogonality defect: {:.3e}\nnear-zero coordinates (|x| < 1e-6): {near_zero}\n",
        frame.orthogonality_defect(),
    );
    if let Some(out) = &args.out {
        write_file(out, &formats::render_float_points(&rotated, config.dim()))?;
        summary.push_str(&format!("rotated configuration written to {}\n", out.display()));
    }
    Ok(summary)
}

pub struct RationalizeArgs {
    pub points: PathBuf,
    pub max_den: u64,
    pub out: Option<PathBuf>,
}

pub fn run_rationalize(args: &RationalizeArgs) -> Result<String, CliError> {
    let config = load_points(&args.points)?;
    let floats = config_to_floats(&config);
    let exact = rationalize(&floats, args.max_den)
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    let norms: std::collections::BTreeSet<String> = exact
        .points()
        .iter()
        .map(|p| format_rational(&p.norm_sq()))
        .collect();
    let norms: Vec<String> = norms.into_iter().collect();
    let objective = antipodal_edge_objective(
        &config_to_floats(&exact)[..exact.len() / 2].to_vec(),
    );
    let mut summary = format!(
        "{} exact points, denominator cap {}\nsquared norms: {}\n",
        exact.len(),
        args.max_den,
        norms.join(", "),
    );
    if let Some(obj) = objective {
        summary.push_str(&format!("float edge objective of the rounded set: {obj:.12}\n"));
    }
    if let Some(out) = &args.out {
        write_file(out, &formats::render_points(&exact))?;
        summary.push_str(&format!("exact configuration written to {}\n", out.display()));
    }
    Ok(summary)
}
