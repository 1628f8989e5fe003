//! Direct complex operations on files: antipodal quotients, homology, and
//! automorphism groups.

use std::path::PathBuf;

use rptri_core::complex::{antipodal_quotient, automorphism_group, Involution, SimplicialComplex};
use rptri_core::formats;
use rptri_core::homology::{betti_mod2, integer_homology};
use rptri_core::hull::{facet_enumeration, PointConfiguration};

use crate::commands::render_homology;
use crate::util::{format_usize_vec, load_facets, load_points, write_file, CliError};

pub struct QuotientArgs {
    pub points: Option<PathBuf>,
    pub facets: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

/// Quotient either the boundary complex of a points file's hull or a facet
/// file directly; the pairing convention is `i <-> i + n/2`.
pub fn run_quotient(args: &QuotientArgs) -> Result<String, CliError> {
    let complex: SimplicialComplex = match (&args.points, &args.facets) {
        (Some(path), None) => {
            let loaded = load_points(path)?;
            let config =
                PointConfiguration::with_half_pairing(loaded.points().to_vec(), loaded.dim())
                    .map_err(|e| CliError::Precondition(e.to_string()))?;
            let hull = facet_enumeration(&config)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
            hull.boundary_complex()
                .map_err(|e| CliError::Precondition(e.to_string()))?
        }
        (None, Some(path)) => load_facets(path)?,
        _ => {
            return Err(CliError::Usage(
                "quotient needs exactly one of --points or --facets".to_string(),
            ))
        }
    };
    let n = complex.n_vertices();
    let tau = Involution::half(n).map_err(|e| CliError::Precondition(e.to_string()))?;
    let quotient =
        antipodal_quotient(&complex, &tau).map_err(|e| CliError::Precondition(e.to_string()))?;
    let mut summary = format!(
        "input: {} vertices, f-vector {}\nquotient: {} vertices, f-vector {}\n",
        n,
        format_usize_vec(&complex.f_vector()),
        quotient.complex.n_vertices(),
        format_usize_vec(&quotient.complex.f_vector()),
    );
    if let Some(out) = &args.out {
        write_file(out, &formats::render_facets(&quotient.complex))?;
        summary.push_str(&format!("facets written to {}\n", out.display()));
    }
    Ok(summary)
}

pub struct HomologyArgs {
    pub facets: PathBuf,
    pub integer: bool,
}

pub fn run_homology(args: &HomologyArgs) -> Result<String, CliError> {
    let complex = load_facets(&args.facets)?;
    let b2 = betti_mod2(&complex);
    let mut out = format!("mod-2 betti numbers: {}\n", format_usize_vec(&b2));
    if args.integer {
        let h = integer_homology(&complex);
        out.push_str(&format!("integer homology:    {}\n", render_homology(&h)));
    }
    Ok(out)
}

pub struct AutomorphismsArgs {
    pub facets: PathBuf,
    pub print_generators: bool,
}

pub fn run_automorphisms(args: &AutomorphismsArgs) -> Result<String, CliError> {
    let complex = load_facets(&args.facets)?;
    let group = automorphism_group(&complex);
    let mut out = format!("automorphism group order: {}\n", group.order());
    if args.print_generators {
        for g in group.generators() {
            let images: Vec<String> = g.iter().map(u32::to_string).collect();
            out.push_str(&format!("generator: [{}]\n", images.join(" ")));
        }
    }
    Ok(out)
}
