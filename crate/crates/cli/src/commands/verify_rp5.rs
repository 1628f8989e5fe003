//! Full verification pipeline for the 48-point configuration: construction,
//! norms, symmetry, hull, boundary combinatorics, the quotient triangulation
//! of five-dimensional projective space, homology, symmetry groups, link
//! classification, support structure, and the threshold-graph table.

use std::path::PathBuf;

use rptri_core::complex::{
    antipodal_quotient, automorphism_group, check_disjoint_stars, classify_face_links, Involution,
};
use rptri_core::constructions::{
    build_p648, default_parameters, find_frame_alignment, generator_matrices, group_closure,
    matrix_action, max_facet_cube_contribution, support_partition, verify_support_cubes,
};
use rptri_core::formats;
use rptri_core::graphs::{
    chromatic_number, degree_profile, threshold_graph, verify_edge_rule,
};
use rptri_core::homology::{betti_mod2, integer_homology};
use rptri_core::hull::facet_enumeration;
use rptri_core::ratmath::{format_rational, rat, Rational};

use crate::commands::render_homology;
use crate::report::{Outcome, Runner, VerificationReport};
use crate::util::{deadline_stop, format_usize_vec, load_points, CliError};

pub struct VerifyRp5Args {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub points: Option<PathBuf>,
    pub integer_homology: bool,
    pub chromatic: bool,
    pub time_limit: u64,
}

pub fn run(args: &VerifyRp5Args) -> Result<VerificationReport, CliError> {
    // parameter validation is a precondition, not a check
    let config = build_p648(&args.alpha, &args.beta, &args.gamma)
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    let (da, db, dg) = default_parameters();
    let canonical_values =
        args.alpha == da && args.beta == db && args.gamma == dg;

    let mut r = Runner::new("verify-rp5");
    r.report.add_input(
        "configuration",
        formats::render_points(&config).as_bytes(),
    );

    // an input file must be the same configuration in a (possibly) signed
    // permuted coordinate frame; all checks then run on the canonical frame
    if let Some(path) = &args.points {
        let loaded = load_points(path)?;
        r.report
            .add_input(path.display().to_string(), formats::render_points(&loaded).as_bytes());
        r.check("frame alignment", "signed coordinate permutation", || {
            match find_frame_alignment(&config, &loaded) {
                Some(_) => Outcome::Pass((), "aligned".to_string()),
                None => {
                    Outcome::FailHard("no signed permutation matches the canonical frame".into())
                }
            }
        });
    } else {
        r.check("frame alignment", "signed coordinate permutation", || {
            Outcome::Pass((), "aligned".to_string())
        });
    }

    let expected_norm =
        &args.alpha * &args.alpha + &args.beta * &args.beta + &args.gamma * &args.gamma;
    r.check(
        "squared norms",
        format!("all {}", format_rational(&expected_norm)),
        || {
            if config.points().iter().all(|p| p.norm_sq() == expected_norm) {
                Outcome::Pass((), format!("all {}", format_rational(&expected_norm)))
            } else {
                Outcome::Fail("points lie on different spheres".into())
            }
        },
    );

    r.check("central symmetry", "pairing i <-> i+24 exact", || {
        let ok = (0..24).all(|i| config.point(i + 24) == &config.point(i).neg());
        if ok {
            Outcome::Pass((), "exact".into())
        } else {
            Outcome::Fail("violated".into())
        }
    });

    let hull = r.check("hull enumeration", "full-dimensional hull", || {
        match facet_enumeration(&config) {
            Ok(h) => {
                let count = h.facets().len();
                Outcome::Pass(h, format!("{count} facets"))
            }
            Err(e) => Outcome::FailHard(e.to_string()),
        }
    });

    let hull = match hull {
        Some(h) => h,
        None => return Ok(r.into_report()),
    };

    r.check("all points are vertices", "48", || {
        let n = hull.hull_vertices().len();
        if n == 48 {
            Outcome::Pass((), "48".into())
        } else {
            Outcome::Fail(format!("{n}"))
        }
    });

    r.check("simplicial", "every facet has 6 vertices", || {
        match hull.is_simplicial() {
            Ok(()) => Outcome::Pass((), "simplicial".into()),
            Err(e) => Outcome::FailHard(e.to_string()),
        }
    });

    let boundary = match hull.boundary_complex() {
        Ok(b) => b,
        Err(_) => return Ok(r.into_report()),
    };

    let expected_fv = "(48, 552, 2432, 4776, 4272, 1424)";
    r.check(
        "boundary f-vector",
        if canonical_values {
            expected_fv.to_string()
        } else {
            "Euler characteristic 0".to_string()
        },
        || {
            let fv = boundary.f_vector();
            let rendered = format_usize_vec(&fv);
            let ok = if canonical_values {
                rendered == expected_fv
            } else {
                boundary.euler_characteristic() == 0
            };
            if ok {
                Outcome::Pass((), rendered)
            } else {
                Outcome::Fail(rendered)
            }
        },
    );

    let tau = Involution::half(48).expect("48 is even");
    let stars_ok = r.check(
        "disjoint antipodal stars",
        "skeleton and star routes agree: disjoint",
        || {
            let report = check_disjoint_stars(&boundary, &tau);
            if report.ok {
                Outcome::Pass((), "disjoint".into())
            } else {
                Outcome::FailHard(format!("{} violating pairs", report.violations.len()))
            }
        },
    );
    if stars_ok.is_none() {
        return Ok(r.into_report());
    }

    let quotient = r.check("antipodal quotient", "24 vertices", || {
        match antipodal_quotient(&boundary, &tau) {
            Ok(q) => {
                let n = q.complex.n_vertices();
                if n == 24 {
                    Outcome::Pass(q.complex, "24 vertices".into())
                } else {
                    Outcome::Fail(format!("{n} vertices"))
                }
            }
            Err(e) => Outcome::FailHard(e.to_string()),
        }
    });
    let quotient = match quotient {
        Some(q) => q,
        None => return Ok(r.into_report()),
    };

    r.check(
        "quotient f-vector",
        if canonical_values {
            "(24, 276, 1216, 2388, 2136, 712)".to_string()
        } else {
            "half of the boundary f-vector".to_string()
        },
        || {
            let qv = quotient.f_vector();
            let bv = boundary.f_vector();
            let halved = bv.iter().zip(&qv).all(|(b, q)| *b == 2 * q);
            let rendered = format_usize_vec(&qv);
            let ok = if canonical_values {
                rendered == "(24, 276, 1216, 2388, 2136, 712)" && halved
            } else {
                halved
            };
            if ok {
                Outcome::Pass((), rendered)
            } else {
                Outcome::Fail(rendered)
            }
        },
    );

    r.check("quotient skeleton", "complete graph on 24 vertices", || {
        let g = quotient.skeleton_graph();
        if g.n() == 24 && g.edge_count() == 276 {
            Outcome::Pass((), "K24".into())
        } else {
            Outcome::Fail(format!("{} vertices, {} edges", g.n(), g.edge_count()))
        }
    });

    r.check("quotient mod-2 homology", "(1, 1, 1, 1, 1, 1)", || {
        let b2 = betti_mod2(&quotient);
        let rendered = format_usize_vec(&b2);
        if b2 == vec![1, 1, 1, 1, 1, 1] {
            Outcome::Pass((), rendered)
        } else {
            Outcome::Fail(rendered)
        }
    });

    if args.integer_homology {
        r.check(
            "quotient integer homology",
            "(Z, Z/2, 0, Z/2, 0, Z)",
            || {
                let h = integer_homology(&quotient);
                let rendered = render_homology(&h);
                if rendered == "(Z, Z/2, 0, Z/2, 0, Z)" {
                    Outcome::Pass((), rendered)
                } else {
                    Outcome::Fail(rendered)
                }
            },
        );
    } else {
        r.skip(
            "quotient integer homology",
            "(Z, Z/2, 0, Z/2, 0, Z)",
            "pass --integer-homology to enable",
        );
    }

    let (mb, mc) = generator_matrices();
    let actions = r.check(
        "generator matrices stabilize the point set",
        "both act as vertex permutations",
        || {
            match (matrix_action(&mb, &config), matrix_action(&mc, &config)) {
                (Ok(pb), Ok(pc)) => Outcome::Pass((pb, pc), "both act".into()),
                (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
            }
        },
    );

    let closure = actions.and_then(|(pb, pc)| {
        r.check("matrix group closure order", "192", || {
            let group = group_closure(48, &[pb.clone(), pc.clone()], 100_000);
            match group.order_u64() {
                Some(192) => Outcome::Pass(group, "192".into()),
                Some(n) => Outcome::Fail(n.to_string()),
                None => Outcome::Fail("order beyond cap".into()),
            }
        })
    });

    let aut = r.check("combinatorial automorphism order", "192", || {
        let aut = automorphism_group(&boundary);
        match aut.order_u64() {
            Some(192) => Outcome::Pass(aut, "192".into()),
            Some(n) => Outcome::Fail(n.to_string()),
            None => Outcome::Fail("order beyond cap".into()),
        }
    });

    match (&closure, &aut) {
        (Some(g1), Some(g2)) => {
            r.check(
                "automorphisms equal matrix closure",
                "equal as permutation sets",
                || match g1.same_elements(g2) {
                    Some(true) => Outcome::Pass((), "equal".into()),
                    Some(false) => Outcome::Fail("different sets".into()),
                    None => Outcome::Fail("element lists unavailable".into()),
                },
            );
        }
        _ => r.skip(
            "automorphisms equal matrix closure",
            "equal as permutation sets",
            "group computations unavailable",
        ),
    }

    r.check(
        "vertex links",
        "one type: 4-sphere, 23 vertices, 178 facets",
        || {
            let classes = classify_face_links(&boundary, 0);
            if classes.len() == 1
                && classes[0].sample_f_vector.first() == Some(&23)
                && classes[0].sample_f_vector.last() == Some(&178)
            {
                Outcome::Pass((), "1 type (23 vertices, 178 facets)".into())
            } else {
                Outcome::Fail(format!("{} types", classes.len()))
            }
        },
    );

    r.check("2-face links", "9 types", || {
        let classes = classify_face_links(&boundary, 2);
        if classes.len() == 9 {
            Outcome::Pass((), "9 types".into())
        } else {
            Outcome::Fail(format!("{} types", classes.len()))
        }
    });

    r.check(
        "support partition",
        "six 3-supports x 8 vertices, each a cube",
        || match support_partition(&config) {
            Ok(family) => {
                if family.match_reference().is_none() {
                    return Outcome::Fail("family differs from the reference".into());
                }
                match verify_support_cubes(&config, &family) {
                    Ok(()) => Outcome::Pass(family, "6 cubes".into()),
                    Err(e) => Outcome::Fail(e.to_string()),
                }
            }
            Err(e) => Outcome::Fail(e.to_string()),
        },
    )
    .map(|family| {
        r.check("facet contribution per cube", "at most 2 vertices", || {
            let max = max_facet_cube_contribution(&family, &hull);
            if max <= 2 {
                Outcome::Pass((), format!("max {max}"))
            } else {
                Outcome::Fail(format!("max {max}"))
            }
        });
    });

    r.check(
        "edge rule",
        "hull edges are exactly positive inner products",
        || {
            let report = verify_edge_rule(&config, &hull);
            if report.ok {
                Outcome::Pass((), "holds, 552 edges".into())
            } else {
                Outcome::Fail(format!("counterexample {:?}", report.counterexample))
            }
        },
    );

    if canonical_values {
        r.check(
            "thresholds 0 and 11/49 give the same graph",
            "no inner products in (0, 11/49]",
            || {
                let g0 = threshold_graph(&config, &Rational::from_integer(0.into()));
                let g11 = threshold_graph(&config, &rat(11, 49));
                if g0 == g11 {
                    Outcome::Pass((), "identical edge sets".into())
                } else {
                    Outcome::Fail("edge sets differ".into())
                }
            },
        );

        r.check(
            "tight antipodal adjacency",
            "every vertex adjacent to exactly one of each pair",
            || {
                let g0 = threshold_graph(&config, &Rational::from_integer(0.into()));
                for w in 0..48 {
                    for v in 0..24 {
                        if v == w || v + 24 == w {
                            continue;
                        }
                        let count = usize::from(g0.has_edge(w, v))
                            + usize::from(g0.has_edge(w, v + 24));
                        if count != 1 {
                            return Outcome::Fail(format!(
                                "vertex {w} adjacent to {count} of pair ({v}, {})",
                                v + 24
                            ));
                        }
                    }
                }
                Outcome::Pass((), "tight".into())
            },
        );

        let rows: [(i64, usize, usize, usize); 4] = [
            (19, 10, 240, 4),
            (17, 11, 264, 6),
            (15, 15, 360, 7),
            (11, 23, 552, 12),
        ];
        for (num, degree, edges, chi) in rows {
            let g = threshold_graph(&config, &rat(num, 49));
            r.check(
                &format!("threshold graph t={num}/49"),
                format!("{degree}-regular, {edges} edges"),
                || {
                    let profile = degree_profile(&g);
                    let actual = match profile.regular {
                        Some(d) => format!("{d}-regular, {} edges", profile.edge_count),
                        None => format!("irregular, {} edges", profile.edge_count),
                    };
                    if profile.regular == Some(degree) && profile.edge_count == edges {
                        Outcome::Pass((), actual)
                    } else {
                        Outcome::Fail(actual)
                    }
                },
            );
            if args.chromatic {
                r.check(
                    &format!("chromatic number t={num}/49"),
                    format!("{chi} (exact)"),
                    || {
                        let mut stop = deadline_stop(args.time_limit);
                        let result = chromatic_number(&g, &mut stop);
                        match result.chromatic_number() {
                            Some(value) if value == chi => {
                                Outcome::Pass((), format!("{value} (exact)"))
                            }
                            Some(value) => Outcome::Fail(format!("{value} (exact)")),
                            None => Outcome::Fail(format!(
                                "bounds [{}, {}] after time limit",
                                result.lower_bound, result.upper_bound
                            )),
                        }
                    },
                );
            } else {
                r.skip(
                    &format!("chromatic number t={num}/49"),
                    format!("{chi} (exact)"),
                    "pass --chromatic to enable",
                );
            }
        }
    } else {
        r.skip(
            "threshold table",
            "published rows",
            "published threshold values apply to the default parameters",
        );
    }

    Ok(r.into_report())
}
