//! Command-line interface over the exact polytope/triangulation toolkit.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rptri_cli::commands::{analyze, complexops, pipeline, verify_rp5, verify_rp6};
use rptri_cli::report::VerificationReport;
use rptri_cli::util::{parse_rational_arg, write_file, CliError};

#[derive(Parser)]
#[command(
    name = "rptri",
    version,
    about = "Exact toolkit for centrally symmetric polytopes whose antipodal quotients triangulate real projective spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the 48-point 6-polytope and its 24-vertex quotient
    VerifyRp5 {
        /// smallest parameter, as p/q
        #[arg(long, default_value = "3/7")]
        alpha: String,
        /// middle parameter, as p/q
        #[arg(long, default_value = "4/7")]
        beta: String,
        /// largest parameter, as p/q
        #[arg(long, default_value = "5/7")]
        gamma: String,
        /// verify a points file (must match the canonical frame up to a
        /// signed coordinate permutation)
        #[arg(long)]
        points: Option<PathBuf>,
        /// also compute integer homology of the quotient
        #[arg(long)]
        integer_homology: bool,
        /// also compute the chromatic numbers of the threshold table
        #[arg(long)]
        chromatic: bool,
        /// per-graph time limit for exact coloring, in seconds
        #[arg(long, default_value_t = 600)]
        time_limit: u64,
        /// write the report as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Verify a 7-dimensional construction and its quotient
    VerifyRp6 {
        /// points file (pairing i <-> i+n/2); default is the built-in
        /// 90-point configuration
        #[arg(long)]
        points: Option<PathBuf>,
        /// build the perturbed cylinder over the 48-point polytope instead
        #[arg(long)]
        cone_cylinder: bool,
        /// apex height for the cylinder construction, as p/q
        #[arg(long, default_value = "2")]
        apex: String,
        /// perturbation magnitude, as p/q
        #[arg(long, default_value = "1/1000")]
        delta: String,
        /// base seed for the perturbation sweep
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// seeds to try before giving up
        #[arg(long, default_value_t = 32)]
        max_tries: u64,
        /// also compute integer homology of the quotient
        #[arg(long)]
        integer_homology: bool,
        /// write the report as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Threshold-graph table for a points file, or a facet-file summary
    Analyze {
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long)]
        facets: Option<PathBuf>,
        /// threshold, as p/q (repeatable)
        #[arg(long = "threshold")]
        thresholds: Vec<String>,
        /// compute chromatic numbers for each threshold row
        #[arg(long)]
        chromatic: bool,
        /// per-graph time limit for exact coloring, in seconds
        #[arg(long, default_value_t = 600)]
        time_limit: u64,
        /// write the table as JSON
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Simulated annealing over centrally symmetric spherical configurations
    Search {
        /// total point count (antipodal pairs count twice)
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200_000)]
        iters: u64,
        /// initial annealing temperature
        #[arg(long, default_value_t = 0.15)]
        t_initial: f64,
        /// final annealing temperature
        #[arg(long, default_value_t = 1e-4)]
        t_final: f64,
        /// output points file (decimal coordinates)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rotate a configuration into the frame minimizing the L1 norm sum
    Sparsify {
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        sweeps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Round a float configuration to exact rationals with bounded
    /// denominators, restoring exact antipodal symmetry
    Rationalize {
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        max_den: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Antipodal quotient of a hull boundary (from points) or a facet list
    Quotient {
        #[arg(long)]
        points: Option<PathBuf>,
        #[arg(long)]
        facets: Option<PathBuf>,
        /// output facets file for the quotient
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Homology of a facet-list complex
    Homology {
        #[arg(long)]
        facets: PathBuf,
        /// full integer homology (Smith normal form) instead of mod-2 only
        #[arg(long)]
        integer: bool,
    },
    /// Combinatorial automorphism group of a facet-list complex
    Automorphisms {
        #[arg(long)]
        facets: PathBuf,
        /// print the generator permutations
        #[arg(long)]
        generators: bool,
    },
}

fn emit_report(report: &VerificationReport, json: &Option<PathBuf>) -> Result<ExitCode, CliError> {
    print!("{}", report.render_text());
    if let Some(path) = json {
        let body =
            serde_json::to_string_pretty(report).map_err(|e| CliError::Io(e.to_string()))?;
        write_file(path, &body)?;
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn dispatch(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::VerifyRp5 {
            alpha,
            beta,
            gamma,
            points,
            integer_homology,
            chromatic,
            time_limit,
            json,
        } => {
            let args = verify_rp5::VerifyRp5Args {
                alpha: parse_rational_arg("alpha", &alpha)?,
                beta: parse_rational_arg("beta", &beta)?,
                gamma: parse_rational_arg("gamma", &gamma)?,
                points,
                integer_homology,
                chromatic,
                time_limit,
            };
            let report = verify_rp5::run(&args)?;
            emit_report(&report, &json)
        }
        Command::VerifyRp6 {
            points,
            cone_cylinder,
            apex,
            delta,
            seed,
            max_tries,
            integer_homology,
            json,
        } => {
            let source = match (points, cone_cylinder) {
                (Some(_), true) => {
                    return Err(CliError::Usage(
                        "--points and --cone-cylinder are mutually exclusive".to_string(),
                    ))
                }
                (Some(path), false) => verify_rp6::Rp6Source::PointsFile(path),
                (None, true) => verify_rp6::Rp6Source::ConeCylinder,
                (None, false) => verify_rp6::Rp6Source::BuiltinP790,
            };
            let args = verify_rp6::VerifyRp6Args {
                source,
                apex_height: parse_rational_arg("apex", &apex)?,
                delta: parse_rational_arg("delta", &delta)?,
                seed,
                max_tries,
                integer_homology,
            };
            let report = verify_rp6::run(&args)?;
            emit_report(&report, &json)
        }
        Command::Analyze {
            points,
            facets,
            thresholds,
            chromatic,
            time_limit,
            json,
        } => {
            let thresholds = thresholds
                .iter()
                .map(|t| parse_rational_arg("threshold", t))
                .collect::<Result<Vec<_>, _>>()?;
            let args = analyze::AnalyzeArgs {
                points,
                facets,
                thresholds,
                chromatic,
                time_limit,
            };
            let output = analyze::run(&args)?;
            print!("{}", analyze::render_text(&output));
            if let Some(path) = json {
                let body = serde_json::to_string_pretty(&output)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                write_file(&path, &body)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search {
            n,
            dim,
            seed,
            iters,
            t_initial,
            t_final,
            out,
        } => {
            let summary = pipeline::run_search(&pipeline::SearchArgs {
                n,
                dim,
                seed,
                iters,
                t_initial,
                t_final,
                out,
            })?;
            print!("{summary}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Sparsify {
            points,
            seed,
            sweeps,
            out,
        } => {
            let summary = pipeline::run_sparsify(&pipeline::SparsifyArgs {
                points,
                seed,
                sweeps,
                out,
            })?;
            print!("{summary}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Rationalize { points, max_den, out } => {
            let summary =
                pipeline::run_rationalize(&pipeline::RationalizeArgs { points, max_den, out })?;
            print!("{summary}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { points, facets, out } => {
            let summary =
                complexops::run_quotient(&complexops::QuotientArgs { points, facets, out })?;
            print!("{summary}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Homology { facets, integer } => {
            let summary = complexops::run_homology(&complexops::HomologyArgs { facets, integer })?;
            print!("{summary}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Automorphisms { facets, generators } => {
            let summary = complexops::run_automorphisms(&complexops::AutomorphismsArgs {
                facets,
                print_generators: generators,
            })?;
            print!("{summary}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
