//! Verification pipeline for the 7-dimensional constructions whose quotients
//! triangulate six-dimensional projective space: the built-in 90-point
//! configuration, an external points file, or the perturbed cylinder over
//! the 48-point polytope.

use std::path::PathBuf;

use rptri_core::complex::{antipodal_quotient, check_disjoint_stars, Involution};
use rptri_core::constructions::{
    build_p648, build_p790, cone_cylinder_verified, default_parameters,
};
use rptri_core::formats;
use rptri_core::homology::{betti_mod2, integer_homology};
use rptri_core::hull::{facet_enumeration, HullStructure, PointConfiguration};
use rptri_core::ratmath::Rational;

use crate::commands::render_homology;
use crate::report::{Outcome, Runner, VerificationReport};
use crate::util::{format_usize_vec, load_points, CliError};

pub enum Rp6Source {
    BuiltinP790,
    PointsFile(PathBuf),
    ConeCylinder,
}

pub struct VerifyRp6Args {
    pub source: Rp6Source,
    pub apex_height: Rational,
    pub delta: Rational,
    pub seed: u64,
    pub max_tries: u64,
    pub integer_homology: bool,
}

pub fn run(args: &VerifyRp6Args) -> Result<VerificationReport, CliError> {
    let mut r = Runner::new("verify-rp6");

    // obtain configuration and hull; the cylinder path carries its own
    // seed-retry protocol and reports the seed that worked
    let obtained: Option<(PointConfiguration, Option<HullStructure>)> = match &args.source {
        Rp6Source::BuiltinP790 => {
            let config = build_p790();
            r.report
                .add_input("configuration", formats::render_points(&config).as_bytes());
            r.check("source", "builtin 90-point configuration", || {
                Outcome::Pass((), format!("{} points in R^{}", config.len(), config.dim()))
            });
            Some((config, None))
        }
        Rp6Source::PointsFile(path) => {
            let loaded = load_points(path)?;
            r.report
                .add_input(path.display().to_string(), formats::render_points(&loaded).as_bytes());
            let n = loaded.len();
            let dim = loaded.dim();
            let paired = r.check("source", "points file with pairing i <-> i+n/2", || {
                match PointConfiguration::with_half_pairing(loaded.points().to_vec(), dim) {
                    Ok(config) => Outcome::Pass(config, format!("{n} points in R^{dim}")),
                    Err(e) => Outcome::FailHard(e.to_string()),
                }
            });
            paired.map(|config| (config, None))
        }
        Rp6Source::ConeCylinder => {
            let (a, b, g) = default_parameters();
            let base = build_p648(&a, &b, &g).map_err(|e| CliError::Precondition(e.to_string()))?;
            let outcome = r.check(
                "source",
                format!("perturbed cylinder, seed sweep up to {}", args.max_tries),
                || {
                    match cone_cylinder_verified(
                        &base,
                        &args.apex_height,
                        &args.delta,
                        args.seed,
                        args.max_tries,
                    ) {
                        Ok(outcome) => {
                            let msg = format!(
                                "98 points, seed {} ({} failed seeds)",
                                outcome.seed,
                                outcome.failures.len()
                            );
                            Outcome::Pass(outcome, msg)
                        }
                        Err(e) => Outcome::FailHard(e.to_string()),
                    }
                },
            );
            outcome.map(|o| {
                r.report
                    .add_input("configuration", formats::render_points(&o.config).as_bytes());
                (o.config, Some(o.hull))
            })
        }
    };

    let Some((config, prebuilt_hull)) = obtained else {
        return Ok(r.into_report());
    };
    let n = config.len();
    let d = config.dim();

    let hull = match prebuilt_hull {
        Some(h) => {
            r.check("hull enumeration", "full-dimensional hull", || {
                Outcome::Pass((), format!("{} facets", h.facets().len()))
            });
            Some(h)
        }
        None => r.check("hull enumeration", "full-dimensional hull", || {
            match facet_enumeration(&config) {
                Ok(h) => {
                    let count = h.facets().len();
                    Outcome::Pass(h, format!("{count} facets"))
                }
                Err(e) => Outcome::FailHard(e.to_string()),
            }
        }),
    };
    let Some(hull) = hull else {
        return Ok(r.into_report());
    };

    r.check("all points are vertices", format!("{n}"), || {
        let count = hull.hull_vertices().len();
        if count == n {
            Outcome::Pass((), format!("{count}"))
        } else {
            Outcome::Fail(format!("{count}"))
        }
    });

    let simplicial = r.check("simplicial", format!("every facet has {d} vertices"), || {
        match hull.is_simplicial() {
            Ok(()) => Outcome::Pass((), "simplicial".into()),
            Err(e) => Outcome::FailHard(e.to_string()),
        }
    });
    if simplicial.is_none() {
        return Ok(r.into_report());
    }
    let boundary = match hull.boundary_complex() {
        Ok(b) => b,
        Err(_) => return Ok(r.into_report()),
    };

    r.check("boundary f-vector", "recorded", || {
        Outcome::Pass((), format_usize_vec(&boundary.f_vector()))
    });

    let tau = Involution::half(n).expect("even point count");
    let stars = r.check(
        "disjoint antipodal stars",
        "skeleton and star routes agree: disjoint",
        || {
            let report = check_disjoint_stars(&boundary, &tau);
            if report.ok {
                Outcome::Pass((), "disjoint".into())
            } else {
                let sample: Vec<(u32, u32)> =
                    report.violations.iter().take(4).copied().collect();
                Outcome::FailHard(format!(
                    "{} violating pairs, e.g. {sample:?}",
                    report.violations.len()
                ))
            }
        },
    );
    if stars.is_none() {
        return Ok(r.into_report());
    }

    let quotient = r.check("antipodal quotient", format!("{} vertices", n / 2), || {
        match antipodal_quotient(&boundary, &tau) {
            Ok(q) => {
                let count = q.complex.n_vertices();
                if count == n / 2 {
                    Outcome::Pass(q.complex, format!("{count} vertices"))
                } else {
                    Outcome::Fail(format!("{count} vertices"))
                }
            }
            Err(e) => Outcome::FailHard(e.to_string()),
        }
    });
    let Some(quotient) = quotient else {
        return Ok(r.into_report());
    };

    r.check(
        "quotient mod-2 homology",
        "(1, 1, 1, 1, 1, 1, 1)",
        || {
            let b2 = betti_mod2(&quotient);
            let rendered = format_usize_vec(&b2);
            if b2 == vec![1usize; 7] {
                Outcome::Pass((), rendered)
            } else {
                Outcome::Fail(rendered)
            }
        },
    );

    if args.integer_homology {
        r.check(
            "quotient integer homology",
            "(Z, Z/2, 0, Z/2, 0, Z/2, 0)",
            || {
                let h = integer_homology(&quotient);
                let rendered = render_homology(&h);
                if rendered == "(Z, Z/2, 0, Z/2, 0, Z/2, 0)" {
                    Outcome::Pass((), rendered)
                } else {
                    Outcome::Fail(rendered)
                }
            },
        );
    } else {
        r.skip(
            "quotient integer homology",
            "(Z, Z/2, 0, Z/2, 0, Z/2, 0)",
            "pass --integer-homology to enable",
        );
    }

    Ok(r.into_report())
}
