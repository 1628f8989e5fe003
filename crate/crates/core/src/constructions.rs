//! Canonical generators and embedded data: the three-parameter 48-point
//! configuration, its support partition into cubes and the two generator
//! matrices, the 90-point 7-dimensional configuration, the cylinder-plus-cones
//! construction with symmetric perturbation, the rational icosahedron, and
//! the projective lower-bound formula.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{check_disjoint_stars, Involution};
use crate::hull::{facet_enumeration, HullStructure, PointConfiguration};
use crate::perm::PermutationGroup;
use crate::ratmath::{rat, rat_int, RatMatrix, RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    BadParameters(String),
    UnexpectedSupport { vertex: usize, support: Vec<usize> },
    SupportClassNotCube { support: Vec<usize>, reason: String },
    NotStabilizing { point_index: usize },
    NotAPermutation,
    DimensionTooSmall { d: usize },
    MissingPairing,
    RetriesExhausted { attempts: Vec<(u64, String)> },
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::BadParameters(msg) => write!(f, "bad parameters: {msg}"),
            ConstructionError::UnexpectedSupport { vertex, support } => {
                write!(f, "vertex {vertex} has unexpected support {support:?}")
            }
            ConstructionError::SupportClassNotCube { support, reason } => {
                write!(f, "support class {support:?} is not a cube: {reason}")
            }
            ConstructionError::NotStabilizing { point_index } => {
                write!(
                    f,
                    "matrix does not stabilize the point set; image of point {point_index} unmatched"
                )
            }
            ConstructionError::NotAPermutation => {
                write!(f, "matrix action is not injective on the point set")
            }
            ConstructionError::DimensionTooSmall { d } => {
                write!(f, "dimension {d} is below 3")
            }
            ConstructionError::MissingPairing => {
                write!(f, "configuration has no antipodal pairing")
            }
            ConstructionError::RetriesExhausted { attempts } => {
                write!(
                    f,
                    "no seed produced a valid perturbation in {} attempts",
                    attempts.len()
                )
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ConstructionError {}

/// Sign/position pattern of the first 24 points; codes 1, 2, 3 stand for the
/// three parameters, negatives for their negations. The remaining 24 points
/// are the negations, giving the pairing `i <-> i + 24`.
const P648_PATTERN: [[i8; 6]; 24] = [
    [0, 3, 1, 2, 0, 0],
    [1, 0, 0, -3, -2, 0],
    [2, 3, -1, 0, 0, 0],
    [-2, 3, -1, 0, 0, 0],
    [-3, 0, 0, -1, -2, 0],
    [0, 0, 2, 0, 1, -3],
    [0, 0, 2, 0, -3, -1],
    [-3, 0, 0, -1, 2, 0],
    [0, 2, 0, 0, -1, -3],
    [0, -3, -1, 2, 0, 0],
    [0, -2, 0, 0, 3, -1],
    [0, -2, 0, 0, -3, 1],
    [-3, 0, 0, 1, 0, 2],
    [-3, 0, 0, 1, 0, -2],
    [0, 0, 2, 0, -1, 3],
    [1, 0, 0, 3, 0, 2],
    [0, 1, -3, 2, 0, 0],
    [1, 0, 0, -3, 2, 0],
    [2, -1, -3, 0, 0, 0],
    [0, 2, 0, 0, 1, 3],
    [0, 0, 2, 0, 3, 1],
    [2, 1, 3, 0, 0, 0],
    [1, 0, 0, 3, 0, -2],
    [0, 1, -3, -2, 0, 0],
];

/// The 48-point centrally symmetric configuration in `R^6` over parameters
/// `0 < alpha < beta < gamma`; at the defaults `3/7, 4/7, 5/7` every point
/// has squared norm `50/49`.
pub fn build_p648(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Result<PointConfiguration, ConstructionError> {
    let zero = Rational::zero();
    if alpha <= &zero {
        return Err(ConstructionError::BadParameters(
            "parameters must be positive".into(),
        ));
    }
    if !(alpha < beta && beta < gamma) {
        return Err(ConstructionError::BadParameters(
            "parameters must satisfy alpha < beta < gamma".into(),
        ));
    }
    let value = |code: i8| -> Rational {
        let base = match code.abs() {
            0 => return Rational::zero(),
            1 => alpha.clone(),
            2 => beta.clone(),
            _ => gamma.clone(),
        };
        if code < 0 {
            -base
        } else {
            base
        }
    };
    let mut points: Vec<RatVector> = P648_PATTERN
        .iter()
        .map(|row| RatVector::new(row.iter().map(|&c| value(c)).collect()))
        .collect();
    let negated: Vec<RatVector> = points.iter().map(RatVector::neg).collect();
    points.extend(negated);
    Ok(PointConfiguration::with_half_pairing(points, 6).expect("pairing holds by construction"))
}

pub fn default_parameters() -> (Rational, Rational, Rational) {
    (rat(3, 7), rat(4, 7), rat(5, 7))
}

/// The two signed-permutation generator matrices of the configuration's
/// symmetry group.
pub fn generator_matrices() -> (RatMatrix, RatMatrix) {
    let b = RatMatrix::from_i64(&[
        &[-1, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 0, -1],
        &[0, 0, 0, 0, 1, 0],
    ]);
    let c = RatMatrix::from_i64(&[
        &[0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, -1],
        &[0, -1, 0, 0, 0, 0],
        &[0, 0, 0, -1, 0, 0],
        &[-1, 0, 0, 0, 0, 0],
    ]);
    (b, c)
}

/// The six coordinate supports (0-based) carried by the 48 points.
pub fn reference_support_family() -> Vec<Vec<usize>> {
    alloc::vec![
        alloc::vec![0, 1, 2],
        alloc::vec![0, 3, 4],
        alloc::vec![0, 3, 5],
        alloc::vec![1, 2, 3],
        alloc::vec![1, 4, 5],
        alloc::vec![2, 4, 5],
    ]
}

#[derive(Debug, Clone)]
pub struct SupportClass {
    pub support: Vec<usize>,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct SupportFamily {
    pub classes: Vec<SupportClass>,
}

impl SupportFamily {
    /// A coordinate permutation carrying this family onto the reference one,
    /// if any; makes the support checks independent of the axis frame.
    pub fn match_reference(&self) -> Option<Vec<usize>> {
        let reference = reference_support_family();
        if self.classes.len() != reference.len() {
            return None;
        }
        let dim = 6;
        let mut perm: Vec<usize> = (0..dim).collect();
        let mut all = Vec::new();
        fn permutations(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == 1 {
                out.push(perm.clone());
                return;
            }
            for i in 0..k {
                permutations(k - 1, perm, out);
                if k % 2 == 0 {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
            }
        }
        permutations(dim, &mut perm, &mut all);
        'outer: for p in all {
            let mut mapped: Vec<Vec<usize>> = self
                .classes
                .iter()
                .map(|c| {
                    let mut ms: Vec<usize> = c.support.iter().map(|&col| p[col]).collect();
                    ms.sort_unstable();
                    ms
                })
                .collect();
            mapped.sort();
            for (a, b) in mapped.iter().zip(&reference) {
                if a != b {
                    continue 'outer;
                }
            }
            return Some(p);
        }
        None
    }
}

/// Classifies the configuration's points by coordinate support. Valid
/// configurations split into six classes of eight; each class must map
/// bijectively onto the sign cube of its support.
pub fn support_partition(config: &PointConfiguration) -> Result<SupportFamily, ConstructionError> {
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, p) in config.points().iter().enumerate() {
        let support: Vec<usize> = (0..config.dim()).filter(|&c| !p[c].is_zero()).collect();
        if support.len() != 3 {
            return Err(ConstructionError::UnexpectedSupport { vertex: i, support });
        }
        classes.entry(support).or_default().push(i);
    }
    if classes.len() != 6 || classes.values().any(|m| m.len() != 8) {
        return Err(ConstructionError::BadParameters(
            "support classes are not six groups of eight".into(),
        ));
    }
    for (support, members) in &classes {
        let mut sign_vectors: Vec<[i8; 3]> = Vec::new();
        for &i in members {
            let p = config.point(i);
            let mut sv = [0i8; 3];
            for (k, &c) in support.iter().enumerate() {
                sv[k] = if p[c].is_positive() { 1 } else { -1 };
            }
            sign_vectors.push(sv);
        }
        sign_vectors.sort_unstable();
        sign_vectors.dedup();
        if sign_vectors.len() != 8 {
            return Err(ConstructionError::SupportClassNotCube {
                support: support.clone(),
                reason: "sign vectors do not exhaust the cube".into(),
            });
        }
    }
    Ok(SupportFamily {
        classes: classes
            .into_iter()
            .map(|(support, members)| SupportClass { support, members })
            .collect(),
    })
}

/// Checks that the convex hull of each support class, inside its own
/// 3-dimensional coordinate subspace, has the cube graph: edges exactly the
/// pairs differing in one sign.
pub fn verify_support_cubes(
    config: &PointConfiguration,
    family: &SupportFamily,
) -> Result<(), ConstructionError> {
    for class in &family.classes {
        let not_cube = |reason: String| ConstructionError::SupportClassNotCube {
            support: class.support.clone(),
            reason,
        };
        let points: Vec<RatVector> = class
            .members
            .iter()
            .map(|&i| {
                RatVector::new(
                    class
                        .support
                        .iter()
                        .map(|&c| config.point(i)[c].clone())
                        .collect(),
                )
            })
            .collect();
        let sub = PointConfiguration::new(points.clone(), 3).map_err(|e| not_cube(e.to_string()))?;
        let hull = facet_enumeration(&sub).map_err(|e| not_cube(e.to_string()))?;
        // in dimension 3 the ridges are exactly the edges
        let mut hull_edges: Vec<(usize, usize)> =
            hull.ridges().keys().map(|r| (r[0], r[1])).collect();
        hull_edges.sort_unstable();
        let mut sign_edges: Vec<(usize, usize)> = Vec::new();
        for a in 0..8 {
            for b in a + 1..8 {
                let differing = (0..3)
                    .filter(|&k| points[a][k].is_positive() != points[b][k].is_positive())
                    .count();
                if differing == 1 {
                    sign_edges.push((a, b));
                }
            }
        }
        if hull_edges != sign_edges {
            return Err(not_cube(
                "hull edges differ from single-sign-change pairs".into(),
            ));
        }
    }
    Ok(())
}

/// Largest number of vertices any facet shares with any support class.
pub fn max_facet_cube_contribution(family: &SupportFamily, hull: &HullStructure) -> usize {
    let mut max = 0;
    for facet in hull.facets() {
        for class in &family.classes {
            let count = facet
                .vertices
                .iter()
                .filter(|v| class.members.contains(v))
                .count();
            max = max.max(count);
        }
    }
    max
}

/// The permutation a matrix induces on the point set, or an error naming the
/// first point whose image is not in the set.
pub fn matrix_action(
    m: &RatMatrix,
    config: &PointConfiguration,
) -> Result<Vec<u32>, ConstructionError> {
    let index: BTreeMap<&RatVector, usize> = config
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut perm = Vec::with_capacity(config.len());
    for (i, p) in config.points().iter().enumerate() {
        let image = m.mat_vec(p);
        match index.get(&image) {
            Some(&j) => perm.push(j as u32),
            None => return Err(ConstructionError::NotStabilizing { point_index: i }),
        }
    }
    let mut seen = alloc::vec![false; config.len()];
    for &j in &perm {
        if seen[j as usize] {
            return Err(ConstructionError::NotAPermutation);
        }
        seen[j as usize] = true;
    }
    Ok(perm)
}

/// Closure of point-set permutations; elements listed up to the cap, exact
/// order either way.
pub fn group_closure(degree: usize, perms: &[Vec<u32>], cap: usize) -> PermutationGroup {
    PermutationGroup::closure(degree, perms, cap)
}

/// 45 exact points in `R^7` as `(numerator, denominator)` rows; the full
/// configuration is these together with their negations.
const P790_TABLE: [[(i64, i64); 7]; 45] = [
    [(103, 134), (0, 1), (0, 1), (0, 1), (0, 1), (-27, 73), (107, 205)],
    [(0, 1), (-25, 102), (79, 99), (16, 123), (0, 1), (15, 104), (-17, 33)],
    [(0, 1), (87, 175), (2, 13), (-74, 141), (17, 50), (31, 116), (63, 122)],
    [(46, 141), (-73, 147), (0, 1), (0, 1), (-47, 80), (5, 74), (103, 189)],
    [(-76, 111), (-47, 200), (0, 1), (173, 389), (-16, 99), (0, 1), (109, 217)],
    [(69, 173), (0, 1), (3, 49), (0, 1), (36, 89), (-41, 90), (-43, 63)],
    [(-16, 181), (19, 70), (93, 137), (-13, 61), (-31, 61), (-3, 49), (19, 49)],
    [(0, 1), (-59, 109), (55, 274), (-32, 91), (67, 95), (-28, 131), (0, 1)],
    [(0, 1), (-6, 53), (-16, 67), (0, 1), (28, 71), (38, 75), (-77, 107)],
    [(31, 69), (81, 121), (0, 1), (0, 1), (-7, 85), (0, 1), (58, 99)],
    [(0, 1), (24, 83), (24, 43), (-129, 212), (31, 92), (-8, 23), (0, 1)],
    [(-9, 35), (0, 1), (-59, 100), (49, 100), (0, 1), (-1, 4), (-33, 62)],
    [(-143, 199), (0, 1), (55, 102), (-47, 107), (0, 1), (0, 1), (0, 1)],
    [(7, 124), (-56, 337), (-21, 79), (0, 1), (-44, 75), (66, 115), (-46, 97)],
    [(3, 26), (0, 1), (51, 148), (45, 92), (19, 39), (-18, 65), (-23, 41)],
    [(15, 73), (49, 60), (-9, 29), (-18, 139), (13, 34), (-7, 52), (-5, 43)],
    [(103, 205), (0, 1), (10, 37), (0, 1), (-107, 140), (43, 143), (0, 1)],
    [(10, 97), (-34, 77), (-6, 41), (0, 1), (29, 79), (21, 83), (97, 128)],
    [(-83, 145), (32, 45), (10, 33), (14, 61), (-5, 49), (0, 1), (-6, 55)],
    [(-17, 61), (-8, 67), (-32, 55), (0, 1), (46, 89), (11, 20), (0, 1)],
    [(-9, 34), (-22, 35), (-29, 40), (-11, 114), (0, 1), (0, 1), (0, 1)],
    [(21, 58), (0, 1), (-25, 38), (0, 1), (-55, 108), (-23, 57), (-17, 145)],
    [(19, 28), (-41, 90), (-5, 77), (0, 1), (0, 1), (0, 1), (-67, 117)],
    [(-27, 46), (-63, 134), (0, 1), (-40, 87), (8, 93), (0, 1), (13, 28)],
    [(0, 1), (12, 91), (-65, 86), (-49, 137), (0, 1), (0, 1), (-41, 77)],
    [(-31, 75), (0, 1), (-61, 203), (0, 1), (-83, 110), (-7, 17), (0, 1)],
    [(-58, 75), (0, 1), (-35, 132), (0, 1), (0, 1), (69, 121), (5, 63)],
    [(-40, 213), (-66, 131), (0, 1), (-39, 112), (0, 1), (-18, 41), (-46, 73)],
    [(0, 1), (-21, 100), (0, 1), (-33, 74), (107, 135), (27, 88), (-21, 113)],
    [(0, 1), (-8, 39), (0, 1), (-18, 61), (-9, 112), (-97, 136), (65, 109)],
    [(17, 106), (0, 1), (-31, 103), (-31, 202), (0, 1), (-91, 103), (-35, 124)],
    [(68, 131), (51, 142), (-17, 84), (-44, 81), (-705, 1411), (0, 1), (20, 159)],
    [(0, 1), (-47, 182), (16, 127), (-64, 91), (-3, 26), (16, 25), (0, 1)],
    [(0, 1), (97, 135), (41, 101), (0, 1), (-33, 127), (175, 349), (0, 1)],
    [(-79, 201), (0, 1), (13, 43), (77, 108), (-41, 87), (51, 331), (0, 1)],
    [(-14, 43), (301, 502), (-74, 117), (21, 131), (-6, 47), (31, 102), (0, 1)],
    [(-14, 99), (-31, 39), (3, 34), (0, 1), (0, 1), (7, 12), (0, 1)],
    [(0, 1), (-59, 83), (0, 1), (38, 99), (0, 1), (-33, 56), (0, 1)],
    [(11, 51), (-41, 85), (11, 84), (-589, 1177), (-52, 97), (-64, 183), (-19, 91)],
    [(-13, 150), (-15, 71), (-35, 83), (19, 31), (0, 1), (0, 1), (76, 121)],
    [(-223, 322), (23, 134), (-12, 23), (23, 242), (-3, 32), (-13, 29), (0, 1)],
    [(43, 104), (-23, 102), (357, 1072), (2, 3), (-11, 61), (17, 48), (29, 114)],
    [(-46, 91), (0, 1), (31, 74), (0, 1), (0, 1), (-80, 109), (-15, 86)],
    [(27, 92), (-76, 157), (0, 1), (129, 187), (37, 83), (24, 337), (0, 1)],
    [(-13, 25), (0, 1), (0, 1), (-37, 314), (-46, 59), (23, 120), (-99, 371)],
];

/// Checksums of the embedded table (numerator sum, denominator sum); guards
/// against transcription slips and is asserted by tests.
pub const P790_CHECKSUM: (i64, i64) = (-1304, 26897);

/// The 90-point centrally symmetric configuration in `R^7`, pairing
/// `i <-> i + 45`.
pub fn build_p790() -> PointConfiguration {
    let mut points: Vec<RatVector> = P790_TABLE
        .iter()
        .map(|row| RatVector::new(row.iter().map(|&(p, q)| rat(p, q)).collect()))
        .collect();
    let negated: Vec<RatVector> = points.iter().map(RatVector::neg).collect();
    points.extend(negated);
    PointConfiguration::with_half_pairing(points, 7).expect("pairing holds by construction")
}

/// A rational, centrally symmetric 12-point configuration combinatorially an
/// icosahedron: the golden ratio is replaced by the Fibonacci convergent
/// 987/610, far closer than any facet slack.
pub fn rational_icosahedron() -> PointConfiguration {
    let phi = rat(987, 610);
    let one = rat_int(1);
    let zero = Rational::zero();
    let row = |a: &Rational, b: &Rational, c: &Rational| {
        RatVector::new(alloc::vec![a.clone(), b.clone(), c.clone()])
    };
    let mut points = alloc::vec![
        row(&zero, &one, &phi),
        row(&zero, &one, &(-phi.clone())),
        row(&one, &phi, &zero),
        row(&one, &(-phi.clone()), &zero),
        row(&phi, &zero, &one),
        row(&phi, &zero, &(-one.clone())),
    ];
    let negated: Vec<RatVector> = points.iter().map(RatVector::neg).collect();
    points.extend(negated);
    PointConfiguration::with_half_pairing(points, 3).expect("pairing holds by construction")
}

/// Cylinder over a centrally symmetric configuration with two apexes, plus a
/// seed-deterministic symmetric perturbation: coordinates move by rationals
/// of magnitude at most `delta` with denominator dividing 10^4, added to one
/// point of each antipodal pair and subtracted from the other.
pub fn cone_cylinder(
    config: &PointConfiguration,
    apex_height: &Rational,
    delta: &Rational,
    seed: u64,
) -> Result<PointConfiguration, ConstructionError> {
    let pairing = config.pairing().ok_or(ConstructionError::MissingPairing)?;
    if apex_height <= &rat_int(1) {
        return Err(ConstructionError::BadParameters(
            "apex height must exceed the cylinder half-height 1".into(),
        ));
    }
    if delta < &Rational::zero() {
        return Err(ConstructionError::BadParameters(
            "delta must be nonnegative".into(),
        ));
    }
    let n = config.len();
    let d = config.dim();
    let lift = |p: &RatVector, last: Rational| {
        let mut coords: Vec<Rational> = p.entries().to_vec();
        coords.push(last);
        RatVector::new(coords)
    };
    let mut points: Vec<RatVector> = Vec::with_capacity(2 * n + 2);
    for p in config.points() {
        points.push(lift(p, rat_int(1)));
    }
    points.push(lift(&RatVector::zero(d), apex_height.clone()));
    for i in 0..n {
        points.push(lift(config.point(pairing[i]), rat_int(-1)));
    }
    points.push(lift(&RatVector::zero(d), -apex_height.clone()));

    // numerators bounded so that |k| / 10^4 <= delta
    let n_max = (delta * rat_int(10_000))
        .floor()
        .numer()
        .to_i64()
        .unwrap_or(0)
        .max(0);
    if n_max > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let span = 2 * n_max as u64 + 1;
        for i in 0..=n {
            let eps = RatVector::new(
                (0..=d)
                    .map(|_| {
                        let k = (rng.next_u64() % span) as i64 - n_max;
                        rat(k, 10_000)
                    })
                    .collect(),
            );
            points[i] = points[i].add(&eps);
            points[i + n + 1] = points[i + n + 1].sub(&eps);
        }
    }
    PointConfiguration::with_half_pairing(points, d + 1)
        .map_err(|e| ConstructionError::BadParameters(e.to_string()))
}

/// A successfully perturbed cylinder-and-cones configuration along with its
/// verified hull.
#[derive(Debug)]
pub struct ConeCylinderOutcome {
    pub config: PointConfiguration,
    pub hull: HullStructure,
    pub seed: u64,
    /// seeds that failed before the successful one, with the reason
    pub failures: Vec<(u64, String)>,
}

/// Tries seeds `base_seed, base_seed+1, ...` until the perturbed hull is
/// simplicial with every point a vertex and the disjoint-star condition
/// holds on its boundary.
pub fn cone_cylinder_verified(
    config: &PointConfiguration,
    apex_height: &Rational,
    delta: &Rational,
    base_seed: u64,
    max_tries: u64,
) -> Result<ConeCylinderOutcome, ConstructionError> {
    let mut failures: Vec<(u64, String)> = Vec::new();
    for t in 0..max_tries {
        let seed = base_seed + t;
        let candidate = cone_cylinder(config, apex_height, delta, seed)?;
        let hull = match facet_enumeration(&candidate) {
            Ok(h) => h,
            Err(e) => {
                failures.push((seed, e.to_string()));
                continue;
            }
        };
        if hull.hull_vertices().len() != candidate.len() {
            failures.push((seed, "a perturbed point fell inside the hull".to_string()));
            continue;
        }
        if let Err(e) = hull.is_simplicial() {
            failures.push((seed, e.to_string()));
            continue;
        }
        let boundary = match hull.boundary_complex() {
            Ok(b) => b,
            Err(e) => {
                failures.push((seed, e.to_string()));
                continue;
            }
        };
        let tau = Involution::new(
            candidate
                .pairing()
                .expect("built with pairing")
                .iter()
                .map(|&i| i as u32)
                .collect(),
            candidate.len(),
        )
        .expect("free involution");
        let report = check_disjoint_stars(&boundary, &tau);
        if !report.ok {
            failures.push((
                seed,
                alloc::format!("{} antipodal star overlaps", report.violations.len()),
            ));
            continue;
        }
        return Ok(ConeCylinderOutcome {
            config: candidate,
            hull,
            seed,
            failures,
        });
    }
    Err(ConstructionError::RetriesExhausted { attempts: failures })
}

/// A signed coordinate permutation carrying the reference point set onto the
/// other set, if one exists. Returned as a matrix with entries in
/// `{-1, 0, 1}`; used to recognize rotated copies recovered by the search
/// pipeline.
pub fn find_frame_alignment(
    reference: &PointConfiguration,
    other: &PointConfiguration,
) -> Option<RatMatrix> {
    if reference.dim() != other.dim() || reference.len() != other.len() {
        return None;
    }
    let d = reference.dim();
    let other_set: BTreeMap<&RatVector, ()> =
        other.points().iter().map(|p| (p, ())).collect();
    let transform = |p: &RatVector, perm: &[usize], signs: u32| -> RatVector {
        let mut coords = alloc::vec![Rational::zero(); d];
        for (c, value) in p.entries().iter().enumerate() {
            let target = perm[c];
            coords[target] = if signs >> c & 1 == 1 {
                -value.clone()
            } else {
                value.clone()
            };
        }
        RatVector::new(coords)
    };
    let mut perms = Vec::new();
    let mut idx: Vec<usize> = (0..d).collect();
    fn permutations(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(perm.clone());
            return;
        }
        for i in 0..k {
            permutations(k - 1, perm, out);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    permutations(d, &mut idx, &mut perms);
    let probe = reference.point(0);
    for perm in &perms {
        for signs in 0..(1u32 << d) {
            if !other_set.contains_key(&transform(probe, perm, signs)) {
                continue;
            }
            let all_match = reference
                .points()
                .iter()
                .all(|p| other_set.contains_key(&transform(p, perm, signs)));
            if all_match {
                let mut rows = alloc::vec![alloc::vec![Rational::zero(); d]; d];
                for c in 0..d {
                    rows[perm[c]][c] = if signs >> c & 1 == 1 {
                        rat_int(-1)
                    } else {
                        rat_int(1)
                    };
                }
                return RatMatrix::from_rows(
                    rows.into_iter().map(RatVector::new).collect(),
                )
                .ok();
            }
        }
    }
    None
}

/// Minimal vertex count of any triangulation of `d`-dimensional real
/// projective space: `(d+2)(d+1)/2 + 1`, valid for `d >= 3`.
pub fn arnoux_marin_bound(d: u64) -> Result<u64, ConstructionError> {
    if d < 3 {
        return Err(ConstructionError::DimensionTooSmall { d: d as usize });
    }
    Ok((d + 2) * (d + 1) / 2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmath::format_rational;

    #[test]
    fn p648_matches_published_values() {
        let (a, b, g) = default_parameters();
        let config = build_p648(&a, &b, &g).unwrap();
        assert_eq!(config.len(), 48);
        assert_eq!(config.dim(), 6);
        // first point is (0, 5/7, 3/7, 4/7, 0, 0)
        let p1 = config.point(0);
        let expected = [rat(0, 1), rat(5, 7), rat(3, 7), rat(4, 7), rat(0, 1), rat(0, 1)];
        assert_eq!(p1.entries(), &expected);
        // all squared norms are 50/49
        for p in config.points() {
            assert_eq!(p.norm_sq(), rat(50, 49));
        }
        // the pairing is i <-> i+24
        assert_eq!(config.point(24), &config.point(0).neg());
    }

    #[test]
    fn p648_rejects_bad_parameters() {
        let (a, b, _) = default_parameters();
        assert!(build_p648(&a, &a, &b).is_err());
        assert!(build_p648(&rat(-1, 7), &a, &b).is_err());
        assert!(build_p648(&b, &a, &rat(6, 7)).is_err());
    }

    #[test]
    fn p648_is_invariant_under_generators_and_negation() {
        let (a, b, g) = default_parameters();
        let config = build_p648(&a, &b, &g).unwrap();
        let (mb, mc) = generator_matrices();
        let perm_b = matrix_action(&mb, &config).unwrap();
        let perm_c = matrix_action(&mc, &config).unwrap();
        assert_eq!(perm_b.len(), 48);
        assert_eq!(perm_c.len(), 48);
        let neg = RatMatrix::from_i64(&[
            &[-1, 0, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0, 0],
            &[0, 0, -1, 0, 0, 0],
            &[0, 0, 0, -1, 0, 0],
            &[0, 0, 0, 0, -1, 0],
            &[0, 0, 0, 0, 0, -1],
        ]);
        let perm_neg = matrix_action(&neg, &config).unwrap();
        let pairing: Vec<u32> = config.pairing().unwrap().iter().map(|&i| i as u32).collect();
        assert_eq!(perm_neg, pairing);
        let identity = RatMatrix::identity(6);
        let perm_id = matrix_action(&identity, &config).unwrap();
        assert_eq!(perm_id, (0..48).collect::<Vec<u32>>());
    }

    #[test]
    fn generator_matrix_determinants() {
        let (mb, mc) = generator_matrices();
        assert_eq!(mb.det().unwrap(), rat_int(-1));
        // c is a signed permutation as well; |det| = 1
        let dc = mc.det().unwrap();
        assert!(dc == rat_int(1) || dc == rat_int(-1));
    }

    #[test]
    fn closure_of_generators_has_order_192() {
        let (a, b, g) = default_parameters();
        let config = build_p648(&a, &b, &g).unwrap();
        let (mb, mc) = generator_matrices();
        let perm_b = matrix_action(&mb, &config).unwrap();
        let perm_c = matrix_action(&mc, &config).unwrap();
        let group = group_closure(48, &[perm_b, perm_c], 100_000);
        assert_eq!(group.order_u64(), Some(192));
    }

    #[test]
    fn support_partition_matches_published_table() {
        let (a, b, g) = default_parameters();
        let config = build_p648(&a, &b, &g).unwrap();
        let family = support_partition(&config).unwrap();
        assert_eq!(family.classes.len(), 6);
        let supports: Vec<Vec<usize>> = family.classes.iter().map(|c| c.support.clone()).collect();
        assert_eq!(supports, reference_support_family());
        // the class supported on coordinates {0,3,4}
        let class = family
            .classes
            .iter()
            .find(|c| c.support == alloc::vec![0, 3, 4])
            .unwrap();
        assert_eq!(class.members, alloc::vec![1, 4, 7, 17, 25, 28, 31, 41]);
        verify_support_cubes(&config, &family).unwrap();
        assert!(family.match_reference().is_some());
    }

    #[test]
    fn support_family_matching_survives_coordinate_permutation() {
        let (a, b, g) = default_parameters();
        let config = build_p648(&a, &b, &g).unwrap();
        // swap coordinates 0 and 5
        let swapped: Vec<RatVector> = config
            .points()
            .iter()
            .map(|p| {
                let e = p.entries();
                RatVector::new(alloc::vec![
                    e[5].clone(),
                    e[1].clone(),
                    e[2].clone(),
                    e[3].clone(),
                    e[4].clone(),
                    e[0].clone(),
                ])
            })
            .collect();
        let config2 = PointConfiguration::with_half_pairing(swapped, 6).unwrap();
        let family = support_partition(&config2).unwrap();
        assert!(family.match_reference().is_some());
    }

    #[test]
    fn p790_table_integrity() {
        let config = build_p790();
        assert_eq!(config.len(), 90);
        assert_eq!(config.dim(), 7);
        let first = config.point(0);
        assert_eq!(format_rational(&first[0]), "103/134");
        assert_eq!(format_rational(&first[5]), "-27/73");
        assert_eq!(format_rational(&first[6]), "107/205");
        for i in 0..45 {
            assert_eq!(config.point(i + 45), &config.point(i).neg());
        }
        let mut num_sum: i64 = 0;
        let mut den_sum: i64 = 0;
        for row in P790_TABLE.iter() {
            for &(p, q) in row {
                num_sum += p;
                den_sum += q;
            }
        }
        assert_eq!((num_sum, den_sum), P790_CHECKSUM);
    }

    #[test]
    fn cone_cylinder_shapes() {
        let ico = rational_icosahedron();
        let lifted = cone_cylinder(&ico, &rat_int(2), &Rational::zero(), 0).unwrap();
        assert_eq!(lifted.len(), 26);
        assert_eq!(lifted.dim(), 4);
        assert!(lifted.pairing().is_some());
        // unperturbed: prism facets make it non-simplicial
        let hull = facet_enumeration(&lifted).unwrap();
        assert!(hull.is_simplicial().is_err());

        let outcome = cone_cylinder_verified(&ico, &rat_int(2), &rat(1, 1000), 0, 32).unwrap();
        assert_eq!(outcome.config.len(), 26);
        assert!(outcome.hull.is_simplicial().is_ok());
    }

    #[test]
    fn cone_cylinder_is_seed_deterministic() {
        let ico = rational_icosahedron();
        let a = cone_cylinder(&ico, &rat_int(2), &rat(1, 1000), 7).unwrap();
        let b = cone_cylinder(&ico, &rat_int(2), &rat(1, 1000), 7).unwrap();
        assert_eq!(a, b);
        let c = cone_cylinder(&ico, &rat_int(2), &rat(1, 1000), 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn projective_lower_bounds() {
        assert_eq!(arnoux_marin_bound(3).unwrap(), 11);
        assert_eq!(arnoux_marin_bound(5).unwrap(), 22);
        assert_eq!(arnoux_marin_bound(6).unwrap(), 29);
        assert!(arnoux_marin_bound(2).is_err());
    }

    #[test]
    fn frame_alignment_detects_signed_permutations() {
        let (a, b, g) = default_parameters();
        let config = build_p648(&a, &b, &g).unwrap();
        // identity aligns
        assert!(find_frame_alignment(&config, &config).is_some());
        // a signed coordinate permutation aligns
        let twisted: Vec<RatVector> = config
            .points()
            .iter()
            .map(|p| {
                let e = p.entries();
                RatVector::new(alloc::vec![
                    -e[2].clone(),
                    e[0].clone(),
                    e[4].clone(),
                    -e[1].clone(),
                    e[5].clone(),
                    e[3].clone(),
                ])
            })
            .collect();
        let twisted = PointConfiguration::with_half_pairing(twisted, 6).unwrap();
        let m = find_frame_alignment(&config, &twisted).unwrap();
        let moved = matrix_action(&m, &config);
        assert!(moved.is_err() || moved.is_ok()); // m maps config onto twisted, not itself
        for p in config.points() {
            assert!(twisted.points().contains(&m.mat_vec(p)));
        }
        // a genuinely different configuration does not align
        let other = build_p648(&rat(2, 7), &rat(4, 7), &rat(5, 7)).unwrap();
        assert!(find_frame_alignment(&config, &other).is_none());
    }

    #[test]
    fn rational_icosahedron_is_icosahedral() {
        let ico = rational_icosahedron();
        let hull = facet_enumeration(&ico).unwrap();
        assert_eq!(hull.facets().len(), 20);
        assert!(hull.is_simplicial().is_ok());
        assert_eq!(hull.hull_vertices().len(), 12);
    }
}
