//! Exact convex hull facet enumeration in low dimension (≤ 8).
//!
//! Incremental beneath-beyond insertion with exact predicates. Internally the
//! boundary is kept triangulated (coplanar simplices allowed); after the last
//! insertion, coplanar groups are merged into true facets by canonical
//! hyperplane, incidence sets are recomputed against every input point, and
//! the resulting facet family is validated (supporting inequalities, ridge
//! pairing, connectivity). The validated output is therefore independent of
//! insertion order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::ratmath::{cross_product, make_primitive, RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigError {
    Empty,
    DimMismatch { index: usize, expected: usize, got: usize },
    PairingWrongLength,
    PairingNotInvolution { index: usize },
    PairingHasFixedPoint { index: usize },
    PairingNotAntipodal { index: usize },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Empty => write!(f, "point configuration is empty"),
            ConfigError::DimMismatch { index, expected, got } => {
                write!(f, "point {index} has dimension {got}, expected {expected}")
            }
            ConfigError::PairingWrongLength => write!(f, "pairing length differs from point count"),
            ConfigError::PairingNotInvolution { index } => {
                write!(f, "pairing is not an involution at index {index}")
            }
            ConfigError::PairingHasFixedPoint { index } => {
                write!(f, "pairing fixes index {index}")
            }
            ConfigError::PairingNotAntipodal { index } => {
                write!(f, "point {index} is not the exact negation of its partner")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ConfigError {}

/// Labeled list of exact rational points, optionally with an antipodal
/// pairing (a free involution `i <-> pairing[i]` with `p[pairing[i]] = -p[i]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    points: Vec<RatVector>,
    dim: usize,
    pairing: Option<Vec<usize>>,
}

impl PointConfiguration {
    pub fn new(points: Vec<RatVector>, dim: usize) -> Result<Self, ConfigError> {
        if points.is_empty() {
            return Err(ConfigError::Empty);
        }
        for (i, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(ConfigError::DimMismatch {
                    index: i,
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        Ok(PointConfiguration {
            points,
            dim,
            pairing: None,
        })
    }

    pub fn with_pairing(
        points: Vec<RatVector>,
        dim: usize,
        pairing: Vec<usize>,
    ) -> Result<Self, ConfigError> {
        let mut config = Self::new(points, dim)?;
        if pairing.len() != config.points.len() {
            return Err(ConfigError::PairingWrongLength);
        }
        for (i, &j) in pairing.iter().enumerate() {
            if j >= pairing.len() || pairing[j] != i {
                return Err(ConfigError::PairingNotInvolution { index: i });
            }
            if j == i {
                return Err(ConfigError::PairingHasFixedPoint { index: i });
            }
            if config.points[j] != config.points[i].neg() {
                return Err(ConfigError::PairingNotAntipodal { index: i });
            }
        }
        config.pairing = Some(pairing);
        Ok(config)
    }

    /// The conventional pairing `i <-> i + n/2 (mod n)`, validated exactly.
    pub fn with_half_pairing(points: Vec<RatVector>, dim: usize) -> Result<Self, ConfigError> {
        let n = points.len();
        if n % 2 != 0 {
            return Err(ConfigError::PairingWrongLength);
        }
        let pairing = (0..n).map(|i| (i + n / 2) % n).collect();
        Self::with_pairing(points, dim, pairing)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &RatVector {
        &self.points[i]
    }

    pub fn points(&self) -> &[RatVector] {
        &self.points
    }

    pub fn pairing(&self) -> Option<&[usize]> {
        self.pairing.as_deref()
    }
}

/// Oriented supporting hyperplane `normal . x <= offset` with integer data,
/// jointly primitive; every hull point satisfies the inequality, facet points
/// with equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Hyperplane {
    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    /// `offset - normal . p`; nonnegative on the hull, zero on the facet.
    pub fn slack(&self, p: &RatVector) -> Rational {
        let mut dot = Rational::zero();
        for (n, x) in self.normal.iter().zip(p.entries()) {
            dot += Rational::from_integer(n.clone()) * x;
        }
        Rational::from_integer(self.offset.clone()) - dot
    }
}

/// A facet record: all input points lying on the supporting hyperplane, plus
/// the hyperplane itself. `vertices` is sorted; it has exactly `d` members
/// for a simplicial facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub vertices: Vec<usize>,
    pub plane: Hyperplane,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HullError {
    TooFewPoints { needed: usize, got: usize },
    DuplicatePoints(usize, usize),
    Degenerate { affine_rank: usize },
    NotSimplicial { facet: Vec<usize> },
    Structural(String),
}

impl fmt::Display for HullError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HullError::TooFewPoints { needed, got } => {
                write!(f, "need at least {needed} points, got {got}")
            }
            HullError::DuplicatePoints(i, j) => write!(f, "points {i} and {j} coincide"),
            HullError::Degenerate { affine_rank } => {
                write!(f, "points span only an affine subspace of dimension {affine_rank}")
            }
            HullError::NotSimplicial { facet } => {
                write!(f, "hull is not simplicial; facet {facet:?}")
            }
            HullError::Structural(msg) => write!(f, "internal hull inconsistency: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HullError {}

/// Complete exact facet description of a full-dimensional hull.
#[derive(Debug, Clone)]
pub struct HullStructure {
    config: PointConfiguration,
    facets: Vec<Facet>,
    /// sorted ridge vertex set -> the two incident facet indices
    ridges: BTreeMap<Vec<usize>, [usize; 2]>,
    hull_vertices: Vec<usize>,
}

impl HullStructure {
    pub fn config(&self) -> &PointConfiguration {
        &self.config
    }

    pub fn dim(&self) -> usize {
        self.config.dim()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn ridges(&self) -> &BTreeMap<Vec<usize>, [usize; 2]> {
        &self.ridges
    }

    /// Indices of the extreme points, sorted.
    pub fn hull_vertices(&self) -> &[usize] {
        &self.hull_vertices
    }

    /// `Ok` iff every facet has exactly `d` vertices; otherwise the first
    /// violating facet (in canonical facet order).
    pub fn is_simplicial(&self) -> Result<(), HullError> {
        let d = self.dim();
        match self.facets.iter().find(|f| f.vertices.len() != d) {
            None => Ok(()),
            Some(f) => Err(HullError::NotSimplicial {
                facet: f.vertices.clone(),
            }),
        }
    }

    /// The boundary complex of a simplicial hull, vertex labels preserved.
    pub fn boundary_complex(&self) -> Result<SimplicialComplex, HullError> {
        self.is_simplicial()?;
        let facets: Vec<Vec<u32>> = self
            .facets
            .iter()
            .map(|f| f.vertices.iter().map(|&v| v as u32).collect())
            .collect();
        SimplicialComplex::from_facets(self.config.len(), facets)
            .map_err(|e| HullError::Structural(format!("boundary complex: {e}")))
    }

    /// Edge set of the 1-skeleton (simplicial hulls only).
    pub fn edges(&self) -> Result<BTreeSet<(usize, usize)>, HullError> {
        self.is_simplicial()?;
        let mut edges = BTreeSet::new();
        for f in &self.facets {
            for (a, &u) in f.vertices.iter().enumerate() {
                for &v in &f.vertices[a + 1..] {
                    edges.insert((u, v));
                }
            }
        }
        Ok(edges)
    }
}

/// Integer-scaled copy of a point: `ints / lcm` with `lcm > 0`.
struct ScaledPoint {
    lcm: BigInt,
    ints: Vec<BigInt>,
}

impl ScaledPoint {
    fn of(p: &RatVector) -> Self {
        let (lcm, ints) = p.to_integer_scaled();
        ScaledPoint { lcm, ints }
    }
}

fn side(plane: &Hyperplane, sp: &ScaledPoint) -> i8 {
    let mut dot = BigInt::zero();
    for (n, x) in plane.normal.iter().zip(&sp.ints) {
        dot += n * x;
    }
    let diff = dot - &plane.offset * &sp.lcm;
    match diff.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

struct PseudoFacet {
    verts: Vec<usize>,
    plane: Hyperplane,
}

/// Hyperplane through the `d` affinely independent points `idx`, oriented so
/// the interior reference point is strictly on the `<` side. `None` when the
/// points are affinely dependent or the reference lies on the plane.
fn plane_through(
    idx: &[usize],
    points: &[RatVector],
    interior: &ScaledPoint,
) -> Option<Hyperplane> {
    let base = &points[idx[0]];
    let diffs: Vec<RatVector> = idx[1..].iter().map(|&i| points[i].sub(base)).collect();
    let normal = cross_product(&diffs, base.dim());
    if normal.iter().all(Zero::is_zero) {
        return None;
    }
    // offset = normal . base, cleared to an integer jointly with the normal
    let mut offset = Rational::zero();
    for (n, x) in normal.iter().zip(base.entries()) {
        offset += Rational::from_integer(n.clone()) * x;
    }
    let den = offset.denom().clone();
    let mut homo: Vec<BigInt> = normal.into_iter().map(|n| n * &den).collect();
    homo.push(offset.numer().clone());
    make_primitive(&mut homo);
    let offset = homo.pop().expect("nonempty");
    let mut plane = Hyperplane { normal: homo, offset };
    match side(&plane, interior) {
        0 => None,
        1 => {
            for n in &mut plane.normal {
                *n = -&*n;
            }
            plane.offset = -plane.offset;
            Some(plane)
        }
        _ => Some(plane),
    }
}

/// Greedily extends an affine basis; returns `d+1` indices of affinely
/// independent points, or the achieved affine rank on failure.
fn affine_basis(config: &PointConfiguration) -> Result<Vec<usize>, usize> {
    let d = config.dim();
    let mut basis = alloc::vec![0usize];
    let mut diffs: Vec<RatVector> = Vec::new();
    for i in 1..config.len() {
        if basis.len() == d + 1 {
            break;
        }
        let v = config.point(i).sub(config.point(basis[0]));
        let mut trial = diffs.clone();
        trial.push(v);
        let m = crate::ratmath::RatMatrix::from_rows(trial.clone()).expect("equal dims");
        if m.rank() == trial.len() {
            diffs = trial;
            basis.push(i);
        }
    }
    if basis.len() == d + 1 {
        Ok(basis)
    } else {
        Err(diffs.len())
    }
}

/// One complete insertion pass in the given order. The first `d+1` entries of
/// `order` must be affinely independent.
fn insert_all(
    config: &PointConfiguration,
    scaled: &[ScaledPoint],
    order: &[usize],
    interior: &ScaledPoint,
) -> Result<Vec<PseudoFacet>, String> {
    let d = config.dim();
    let mut facets: Vec<PseudoFacet> = Vec::new();
    // initial simplex
    let simplex = &order[..d + 1];
    for skip in 0..=d {
        let verts: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, &i)| i)
            .collect();
        let plane = plane_through(&verts, config.points(), interior)
            .ok_or("initial simplex facet degenerate")?;
        let mut verts = verts;
        verts.sort_unstable();
        facets.push(PseudoFacet { verts, plane });
    }

    for &p in &order[d + 1..] {
        let sp = &scaled[p];
        let visible: BTreeSet<usize> = (0..facets.len())
            .filter(|&f| side(&facets[f].plane, sp) > 0)
            .collect();
        if visible.is_empty() {
            continue; // inside or on the boundary; never a vertex
        }
        // horizon: boundary subsimplices appearing exactly once among visible
        let mut counts: BTreeMap<Vec<usize>, u32> = BTreeMap::new();
        for &f in &visible {
            let verts = &facets[f].verts;
            for skip in 0..verts.len() {
                let key: Vec<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                *counts.entry(key).or_insert(0) += 1;
            }
        }
        let mut new_facets: Vec<PseudoFacet> = Vec::new();
        for (key, count) in counts {
            match count {
                1 => {
                    let mut verts = key;
                    verts.push(p);
                    let plane = plane_through(&verts, config.points(), interior)
                        .ok_or("degenerate cone facet")?;
                    verts.sort_unstable();
                    new_facets.push(PseudoFacet { verts, plane });
                }
                2 => {}
                k => return Err(format!("ridge multiplicity {k} in visible region")),
            }
        }
        if new_facets.is_empty() {
            return Err(String::from("visible region has empty horizon"));
        }
        let mut keep: Vec<PseudoFacet> = Vec::with_capacity(facets.len());
        for (i, f) in facets.into_iter().enumerate() {
            if !visible.contains(&i) {
                keep.push(f);
            }
        }
        keep.extend(new_facets);
        facets = keep;
    }
    Ok(facets)
}

/// Coordinate columns making the projection of the facet's affine flat
/// injective, found greedily by rank extension.
fn projection_chart(points: &[&RatVector], target_rank: usize) -> Vec<usize> {
    let base = points[0];
    let diffs: Vec<RatVector> = points[1..].iter().map(|p| p.sub(base)).collect();
    let dim = base.dim();
    let mut cols: Vec<usize> = Vec::new();
    let mut kept: Vec<Vec<Rational>> = alloc::vec![Vec::new(); diffs.len()];
    for c in 0..dim {
        if cols.len() == target_rank {
            break;
        }
        let mut trial = kept.clone();
        for (row, dv) in trial.iter_mut().zip(&diffs) {
            row.push(dv[c].clone());
        }
        let m = crate::ratmath::RatMatrix::from_rows(
            trial.iter().map(|r| RatVector::new(r.clone())).collect(),
        )
        .expect("rect");
        if m.rank() == cols.len() + 1 {
            kept = trial;
            cols.push(c);
        }
    }
    cols
}

fn merge_and_validate(
    config: &PointConfiguration,
    scaled: &[ScaledPoint],
    pseudo: Vec<PseudoFacet>,
) -> Result<HullStructure, String> {
    let d = config.dim();
    let planes: BTreeSet<Hyperplane> = pseudo.into_iter().map(|f| f.plane).collect();
    let mut facets: Vec<Facet> = Vec::with_capacity(planes.len());
    for plane in planes {
        let mut vertices = Vec::new();
        for (i, sp) in scaled.iter().enumerate() {
            match side(&plane, sp) {
                0 => vertices.push(i),
                1 => return Err(format!("point {i} outside supporting hyperplane")),
                _ => {}
            }
        }
        if vertices.len() < d {
            return Err(format!("facet with {} incident points", vertices.len()));
        }
        facets.push(Facet { vertices, plane });
    }

    // ridges and per-facet extreme vertices; non-simplicial facets get a
    // recursive sub-hull in their own affine chart
    let mut ridge_map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut extreme: BTreeSet<usize> = BTreeSet::new();
    for (fid, facet) in facets.iter().enumerate() {
        if facet.vertices.len() == d {
            extreme.extend(facet.vertices.iter().copied());
            if d >= 2 {
                for skip in 0..d {
                    let key: Vec<usize> = facet
                        .vertices
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    ridge_map.entry(key).or_default().push(fid);
                }
            }
        } else {
            let members: Vec<&RatVector> =
                facet.vertices.iter().map(|&i| config.point(i)).collect();
            let chart = projection_chart(&members, d - 1);
            if chart.len() != d - 1 {
                return Err(String::from("facet flat has deficient rank"));
            }
            let sub_points: Vec<RatVector> = members
                .iter()
                .map(|p| RatVector::new(chart.iter().map(|&c| p[c].clone()).collect()))
                .collect();
            let sub_cfg = PointConfiguration::new(sub_points, d - 1)
                .map_err(|e| format!("sub-hull config: {e}"))?;
            let sub = enumerate(&sub_cfg).map_err(|e| format!("sub-hull: {e}"))?;
            for v in sub.hull_vertices() {
                extreme.insert(facet.vertices[*v]);
            }
            if d >= 2 {
                for sub_facet in sub.facets() {
                    let mut key: Vec<usize> = sub_facet
                        .vertices
                        .iter()
                        .map(|&v| facet.vertices[v])
                        .collect();
                    key.sort_unstable();
                    ridge_map.entry(key).or_default().push(fid);
                }
            }
        }
    }

    let mut ridges: BTreeMap<Vec<usize>, [usize; 2]> = BTreeMap::new();
    if d >= 2 {
        let mut adjacency: Vec<Vec<usize>> = alloc::vec![Vec::new(); facets.len()];
        for (key, fids) in ridge_map {
            if fids.len() != 2 {
                return Err(format!("ridge {key:?} lies in {} facets", fids.len()));
            }
            adjacency[fids[0]].push(fids[1]);
            adjacency[fids[1]].push(fids[0]);
            ridges.insert(key, [fids[0], fids[1]]);
        }
        // the facet/ridge graph of a polytope boundary is connected
        let mut seen = alloc::vec![false; facets.len()];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        while let Some(f) = stack.pop() {
            for &g in &adjacency[f] {
                if !seen[g] {
                    seen[g] = true;
                    stack.push(g);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(String::from("facet/ridge graph is disconnected"));
        }
    }

    Ok(HullStructure {
        config: config.clone(),
        facets,
        ridges,
        hull_vertices: extreme.into_iter().collect(),
    })
}

fn enumerate(config: &PointConfiguration) -> Result<HullStructure, HullError> {
    let d = config.dim();
    let n = config.len();
    if d == 0 {
        return Err(HullError::Degenerate { affine_rank: 0 });
    }
    if n < d + 1 {
        return Err(HullError::TooFewPoints { needed: d + 1, got: n });
    }
    let mut seen: BTreeMap<&RatVector, usize> = BTreeMap::new();
    for (i, p) in config.points().iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(HullError::DuplicatePoints(j, i));
        }
        seen.insert(p, i);
    }
    let basis = affine_basis(config).map_err(|r| HullError::Degenerate { affine_rank: r })?;
    let scaled: Vec<ScaledPoint> = config.points().iter().map(ScaledPoint::of).collect();
    let centroid = {
        let mut acc = RatVector::zero(d);
        for &i in &basis {
            acc = acc.add(config.point(i));
        }
        acc.scale(&crate::ratmath::rat(1, (d + 1) as i64))
    };
    let interior = ScaledPoint::of(&centroid);

    // The merged result is a geometric invariant; insertion order only
    // affects the intermediate triangulation. Degenerate intermediate
    // configurations the horizon rule cannot express are escaped by
    // retrying in shuffled order.
    let mut last_err = String::new();
    for attempt in 0..8u64 {
        let mut order: Vec<usize> = basis.clone();
        let mut rest: Vec<usize> = (0..n).filter(|i| !basis.contains(i)).collect();
        if attempt > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15 ^ attempt);
            for k in (1..rest.len()).rev() {
                let j = (rng.next_u64() % (k as u64 + 1)) as usize;
                rest.swap(k, j);
            }
        }
        order.extend(rest);
        match insert_all(config, &scaled, &order, &interior)
            .and_then(|pseudo| merge_and_validate(config, &scaled, pseudo))
        {
            Ok(hull) => return Ok(hull),
            Err(e) => last_err = e,
        }
    }
    Err(HullError::Structural(last_err))
}

/// Enumerates all facets of the convex hull of `config`, which must span
/// `R^d` affinely. The facet family, ridges and hull vertices are exact and
/// independent of the order points are listed in.
pub fn facet_enumeration(config: &PointConfiguration) -> Result<HullStructure, HullError> {
    enumerate(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmath::{rat, rat_int};

    fn cfg(points: &[&[i64]], dim: usize) -> PointConfiguration {
        PointConfiguration::new(
            points.iter().map(|p| RatVector::from_i64(p)).collect(),
            dim,
        )
        .unwrap()
    }

    fn cross_polytope(d: usize) -> PointConfiguration {
        let mut points = Vec::new();
        for sign in [1i64, -1] {
            for i in 0..d {
                let mut coords = alloc::vec![0i64; d];
                coords[i] = sign;
                points.push(RatVector::from_i64(&coords));
            }
        }
        PointConfiguration::with_half_pairing(points, d).unwrap()
    }

    #[test]
    fn octahedron_has_eight_triangles() {
        let hull = facet_enumeration(&cross_polytope(3)).unwrap();
        assert_eq!(hull.facets().len(), 8);
        assert!(hull.facets().iter().all(|f| f.vertices.len() == 3));
        assert!(hull.is_simplicial().is_ok());
        assert_eq!(hull.hull_vertices(), &[0, 1, 2, 3, 4, 5]);
        // each ridge in exactly two facets comes from construction; count them
        assert_eq!(hull.ridges().len(), 12);
    }

    #[test]
    fn unit_square_has_four_edges() {
        let config = cfg(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]], 2);
        let hull = facet_enumeration(&config).unwrap();
        assert_eq!(hull.facets().len(), 4);
        assert!(hull.is_simplicial().is_ok());
    }

    #[test]
    fn cube_is_not_simplicial_with_witness() {
        let mut points = Vec::new();
        for x in [0i64, 1] {
            for y in [0i64, 1] {
                for z in [0i64, 1] {
                    points.push(RatVector::from_i64(&[x, y, z]));
                }
            }
        }
        let hull = facet_enumeration(&PointConfiguration::new(points, 3).unwrap()).unwrap();
        assert_eq!(hull.facets().len(), 6);
        let witness = hull.is_simplicial().unwrap_err();
        match witness {
            HullError::NotSimplicial { facet } => assert_eq!(facet.len(), 4),
            other => panic!("unexpected: {other:?}"),
        }
        assert_eq!(hull.hull_vertices().len(), 8);
        assert_eq!(hull.ridges().len(), 12);
    }

    #[test]
    fn simplex_boundary() {
        let config = cfg(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        let hull = facet_enumeration(&config).unwrap();
        assert_eq!(hull.facets().len(), 4);
        let complex = hull.boundary_complex().unwrap();
        assert_eq!(complex.f_vector(), alloc::vec![4, 6, 4]);
    }

    #[test]
    fn centroid_is_not_a_vertex() {
        let mut config_pts = alloc::vec![
            RatVector::from_i64(&[0, 0]),
            RatVector::from_i64(&[2, 0]),
            RatVector::from_i64(&[2, 2]),
            RatVector::from_i64(&[0, 2]),
            RatVector::new(alloc::vec![rat_int(1), rat_int(1)]),
        ];
        config_pts.rotate_left(2); // vertex status must not depend on order
        let config = PointConfiguration::new(config_pts, 2).unwrap();
        let hull = facet_enumeration(&config).unwrap();
        assert_eq!(hull.facets().len(), 4);
        assert_eq!(hull.hull_vertices().len(), 4);
    }

    #[test]
    fn edge_midpoint_is_incident_but_not_a_vertex() {
        let config = cfg(&[&[0, 0], &[2, 0], &[2, 2], &[0, 2], &[1, 0]], 2);
        let hull = facet_enumeration(&config).unwrap();
        assert_eq!(hull.facets().len(), 4);
        assert_eq!(hull.hull_vertices(), &[0, 1, 2, 3]);
        let bottom = hull
            .facets()
            .iter()
            .find(|f| f.vertices.contains(&4))
            .expect("midpoint lies on the bottom edge");
        assert_eq!(bottom.vertices, alloc::vec![0, 1, 4]);
    }

    #[test]
    fn grid_cube_merges_coplanar_points() {
        let mut points = Vec::new();
        for x in 0..3i64 {
            for y in 0..3i64 {
                for z in 0..3i64 {
                    points.push(RatVector::from_i64(&[x, y, z]));
                }
            }
        }
        let hull = facet_enumeration(&PointConfiguration::new(points, 3).unwrap()).unwrap();
        assert_eq!(hull.facets().len(), 6);
        assert!(hull.facets().iter().all(|f| f.vertices.len() == 9));
        assert_eq!(hull.hull_vertices().len(), 8);
        assert_eq!(hull.ridges().len(), 12);
    }

    #[test]
    fn supporting_inequalities_hold_exactly() {
        let hull = facet_enumeration(&cross_polytope(4)).unwrap();
        for f in hull.facets() {
            for (i, p) in hull.config().points().iter().enumerate() {
                let slack = f.plane.slack(p);
                assert!(slack >= rat_int(0), "point {i} beyond facet");
                assert_eq!(slack.numer() == &num_bigint::BigInt::from(0), f.vertices.contains(&i));
            }
        }
    }

    #[test]
    fn degenerate_input_reports_rank() {
        let config = cfg(&[&[0, 0], &[1, 1], &[2, 2], &[3, 3]], 2);
        match facet_enumeration(&config) {
            Err(HullError::Degenerate { affine_rank }) => assert_eq!(affine_rank, 1),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn too_few_points_rejected() {
        let config = cfg(&[&[0, 0, 0], &[1, 0, 0]], 3);
        assert!(matches!(
            facet_enumeration(&config),
            Err(HullError::TooFewPoints { .. })
        ));
    }

    #[test]
    fn duplicate_points_rejected() {
        let config = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 0]], 2);
        assert!(matches!(
            facet_enumeration(&config),
            Err(HullError::DuplicatePoints(1, 3))
        ));
    }

    #[test]
    fn insertion_order_independence_on_degenerate_grid() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut points = Vec::new();
        for x in 0..3i64 {
            for y in 0..3i64 {
                points.push(RatVector::from_i64(&[x, y, x + y - 2]));
            }
        }
        points.push(RatVector::from_i64(&[1, 1, 3]));
        points.push(RatVector::from_i64(&[1, 1, -5]));
        let reference: Vec<Vec<usize>> = {
            let hull =
                facet_enumeration(&PointConfiguration::new(points.clone(), 3).unwrap()).unwrap();
            hull.facets().iter().map(|f| f.vertices.clone()).collect()
        };
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..points.len()).collect();
            perm.shuffle(&mut rng);
            let shuffled: Vec<RatVector> = perm.iter().map(|&i| points[i].clone()).collect();
            let hull =
                facet_enumeration(&PointConfiguration::new(shuffled, 3).unwrap()).unwrap();
            let mut families: Vec<Vec<usize>> = hull
                .facets()
                .iter()
                .map(|f| {
                    let mut mapped: Vec<usize> = f.vertices.iter().map(|&v| perm[v]).collect();
                    mapped.sort_unstable();
                    mapped
                })
                .collect();
            families.sort();
            let mut expected = reference.clone();
            expected.sort();
            assert_eq!(families, expected);
        }
    }

    #[test]
    fn rational_coordinates_are_exact() {
        // a square with rational vertices keeps primitive integer planes
        let config = PointConfiguration::new(
            alloc::vec![
                RatVector::new(alloc::vec![rat(1, 2), rat(1, 2)]),
                RatVector::new(alloc::vec![rat(-1, 2), rat(1, 2)]),
                RatVector::new(alloc::vec![rat(-1, 2), rat(-1, 2)]),
                RatVector::new(alloc::vec![rat(1, 2), rat(-1, 2)]),
            ],
            2,
        )
        .unwrap();
        let hull = facet_enumeration(&config).unwrap();
        assert_eq!(hull.facets().len(), 4);
        for f in hull.facets() {
            let g = f.plane.normal().iter().fold(f.plane.offset().clone(), |acc, n| {
                num_integer::Integer::gcd(&acc, n)
            });
            assert_eq!(g, num_bigint::BigInt::from(1));
        }
    }

    #[test]
    fn pairing_validation() {
        let points = alloc::vec![
            RatVector::from_i64(&[1, 0]),
            RatVector::from_i64(&[0, 1]),
            RatVector::from_i64(&[-1, 0]),
            RatVector::from_i64(&[0, -1]),
        ];
        assert!(PointConfiguration::with_half_pairing(points.clone(), 2).is_ok());
        let bad = PointConfiguration::with_pairing(points, 2, alloc::vec![0, 1, 2, 3]);
        assert!(matches!(bad, Err(ConfigError::PairingHasFixedPoint { .. })));
    }
}
