//! Text formats for point configurations and facet lists.
//!
//! Points file: a header line `d n`, then `n` lines of `d` whitespace
//! separated coordinates, each an integer, a fraction `p/q`, or a decimal
//! (decimals are read exactly). Facets file: one facet per line, 0-based
//! vertex indices. Lines starting with `#` and blank lines are ignored in
//! both.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Pow, Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::hull::PointConfiguration;
use crate::ratmath::{format_rational, RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FormatError {}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

/// Parses an integer, `p/q`, or decimal token into an exact rational.
pub fn parse_rational(token: &str) -> Option<Rational> {
    if let Some((num, den)) = token.split_once('/') {
        let num: BigInt = num.parse().ok()?;
        let den: BigInt = den.parse().ok()?;
        if den <= BigInt::zero() || den.to_string() != den.to_string().trim_start_matches('+') {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    if let Some((whole, frac)) = token.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_mag: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let frac_num: BigInt = frac.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mag = Rational::new(whole_mag.abs() * &scale + frac_num, scale);
        return Some(if negative { -mag } else { mag });
    }
    let n: BigInt = token.parse().ok()?;
    Some(Rational::from_integer(n))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a points file. No pairing is attached; callers add one when the
/// configuration is meant to be centrally symmetric.
pub fn parse_points(text: &str) -> Result<PointConfiguration, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| err(0, "empty points file"))?;
    let mut parts = header.split_whitespace();
    let d: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(header_line, "header must be `d n`"))?;
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(header_line, "header must be `d n`"))?;
    if parts.next().is_some() {
        return Err(err(header_line, "header must be exactly `d n`"));
    }
    let mut points = Vec::with_capacity(n);
    for (line_no, line) in lines {
        let mut coords = Vec::with_capacity(d);
        for token in line.split_whitespace() {
            let value = parse_rational(token)
                .ok_or_else(|| err(line_no, alloc::format!("bad coordinate `{token}`")))?;
            coords.push(value);
        }
        if coords.len() != d {
            return Err(err(
                line_no,
                alloc::format!("expected {d} coordinates, got {}", coords.len()),
            ));
        }
        points.push(RatVector::new(coords));
        if points.len() > n {
            return Err(err(line_no, "more points than the header announced"));
        }
    }
    if points.len() != n {
        return Err(err(0, alloc::format!("expected {n} points, got {}", points.len())));
    }
    PointConfiguration::new(points, d).map_err(|e| err(0, e.to_string()))
}

pub fn render_points(config: &PointConfiguration) -> String {
    let mut out = alloc::format!("{} {}\n", config.dim(), config.len());
    for p in config.points() {
        let coords: Vec<String> = p.entries().iter().map(format_rational).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

/// Decimal rendering used for float configurations emitted by the search
/// pipeline; the same parser reads them back exactly.
pub fn render_float_points(points: &[Vec<f64>], dim: usize) -> String {
    let mut out = alloc::format!("{} {}\n", dim, points.len());
    for p in points {
        let coords: Vec<String> = p.iter().map(|x| alloc::format!("{x:.17}")).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a facets file into a complex; vertex count is one past the largest
/// index. Validation (maximality, repeated vertices) happens on construction.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex, FormatError> {
    let mut facets: Vec<Vec<u32>> = Vec::new();
    let mut max_vertex: u32 = 0;
    let mut any = false;
    for (line_no, line) in content_lines(text) {
        let mut facet = Vec::new();
        for token in line.split_whitespace() {
            let v: u32 = token
                .parse()
                .map_err(|_| err(line_no, alloc::format!("bad vertex index `{token}`")))?;
            max_vertex = max_vertex.max(v);
            facet.push(v);
            any = true;
        }
        if facet.is_empty() {
            return Err(err(line_no, "empty facet"));
        }
        facets.push(facet);
    }
    if !any {
        return Err(err(0, "empty facets file"));
    }
    SimplicialComplex::from_facets(max_vertex as usize + 1, facets)
        .map_err(|e| err(0, e.to_string()))
}

pub fn render_facets(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        let verts: Vec<String> = f.iter().map(u32::to_string).collect();
        out.push_str(&verts.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmath::rat;

    #[test]
    fn rational_token_forms() {
        assert_eq!(parse_rational("3/7"), Some(rat(3, 7)));
        assert_eq!(parse_rational("-3/7"), Some(rat(-3, 7)));
        assert_eq!(parse_rational("5"), Some(rat(5, 1)));
        assert_eq!(parse_rational("0.5"), Some(rat(1, 2)));
        assert_eq!(parse_rational("-0.125"), Some(rat(-1, 8)));
        assert_eq!(parse_rational("3/0"), None);
        assert_eq!(parse_rational("3/-7"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn points_round_trip() {
        let text = "2 3\n# a comment\n1/2 -3\n0.25 7/9\n-1 0\n";
        let config = parse_points(text).unwrap();
        assert_eq!(config.dim(), 2);
        assert_eq!(config.len(), 3);
        assert_eq!(config.point(0)[0], rat(1, 2));
        let rendered = render_points(&config);
        let reparsed = parse_points(&rendered).unwrap();
        assert_eq!(&reparsed, &config);
    }

    #[test]
    fn points_errors_carry_line_numbers() {
        let bad = "2 2\n1 2\n3 4 5\n";
        let e = parse_points(bad).unwrap_err();
        assert_eq!(e.line, 3);
        let bad = "2 2\n1 2\n3 x\n";
        let e = parse_points(bad).unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn float_points_round_trip_exactly() {
        let pts = alloc::vec![alloc::vec![0.5f64, -0.333], alloc::vec![1.0, 2.0]];
        let text = render_float_points(&pts, 2);
        let config = parse_points(&text).unwrap();
        assert_eq!(config.point(0)[0], rat(1, 2));
    }

    #[test]
    fn facets_parse_and_validate() {
        let text = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n";
        let c = parse_facets(text).unwrap();
        assert_eq!(c.n_vertices(), 4);
        assert_eq!(c.facets().len(), 4);
        let rendered = render_facets(&c);
        assert_eq!(parse_facets(&rendered).unwrap(), c);

        // non-maximal input is flagged
        let bad = "0 1 2\n0 1\n";
        assert!(parse_facets(bad).is_err());
    }
}
