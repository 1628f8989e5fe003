//! Floating-point discovery pipeline: simulated annealing that maximizes the
//! minimal inner product over hull edges of a centrally symmetric spherical
//! configuration, an L1 sparsification over the orthogonal group driven by
//! Givens-angle coordinate descent, and exact rationalization of float
//! configurations back into `PointConfiguration`s.
//!
//! Everything here is seed-deterministic: randomness comes from ChaCha and
//! float transcendentals from `libm`, so a `(seed, parameters)` pair yields a
//! bit-identical trace on any platform.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fmath;
use crate::hull::PointConfiguration;
use crate::ratmath::{RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    BadArity { n: usize, dim: usize },
    DegenerateConfiguration,
    EmptyInput,
    BadDenominatorCap,
    UnpairedInput,
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::BadArity { n, dim } => {
                write!(f, "need an even n with n >= 2(d+1); got n={n}, d={dim}")
            }
            SearchError::DegenerateConfiguration => {
                write!(f, "configuration stayed degenerate after retries")
            }
            SearchError::EmptyInput => write!(f, "empty input"),
            SearchError::BadDenominatorCap => write!(f, "denominator cap must be at least 1"),
            SearchError::UnpairedInput => {
                write!(f, "float configuration must have an even point count")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SearchError {}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) {
    let norm = fmath::sqrt(dot(v, v));
    for x in v.iter_mut() {
        *x /= norm;
    }
}

fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Box-Muller; two uniforms to one normal keeps the stream simple.
fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u1 = uniform(rng).max(1e-300);
    let u2 = uniform(rng);
    fmath::sqrt(-2.0 * fmath::ln(u1)) * fmath::cos(2.0 * core::f64::consts::PI * u2)
}

/// Edges of the convex hull of float points via incremental insertion with a
/// visibility tolerance. `None` for configurations the tolerance cannot
/// resolve (degenerate rank, inconsistent horizon).
pub fn float_hull_edges(points: &[Vec<f64>], eps: f64) -> Option<BTreeSet<(usize, usize)>> {
    let n = points.len();
    let d = points.first()?.len();
    if n < d + 1 {
        return None;
    }
    // greedy affine basis by Gram-Schmidt residual
    let mut basis: Vec<usize> = alloc::vec![0];
    let mut ortho: Vec<Vec<f64>> = Vec::new();
    for i in 1..n {
        if basis.len() == d + 1 {
            break;
        }
        let mut v: Vec<f64> = points[i]
            .iter()
            .zip(&points[basis[0]])
            .map(|(a, b)| a - b)
            .collect();
        for u in &ortho {
            let c = dot(&v, u);
            for (x, y) in v.iter_mut().zip(u) {
                *x -= c * y;
            }
        }
        let norm = fmath::sqrt(dot(&v, &v));
        if norm > 1e-7 {
            for x in v.iter_mut() {
                *x /= norm;
            }
            ortho.push(v);
            basis.push(i);
        }
    }
    if basis.len() < d + 1 {
        return None;
    }
    let mut interior = alloc::vec![0.0; d];
    for &i in &basis {
        for (c, x) in interior.iter_mut().zip(&points[i]) {
            *c += x / (d as f64 + 1.0);
        }
    }

    struct FloatFacet {
        verts: Vec<usize>,
        normal: Vec<f64>,
        offset: f64,
    }
    // unit normal orthogonal to the facet's difference space, oriented away
    // from the interior reference
    let plane = |verts: &[usize]| -> Option<(Vec<f64>, f64)> {
        let base = &points[verts[0]];
        let mut span: Vec<Vec<f64>> = Vec::new();
        for &i in &verts[1..] {
            let mut v: Vec<f64> = points[i].iter().zip(base).map(|(a, b)| a - b).collect();
            for u in &span {
                let c = dot(&v, u);
                for (x, y) in v.iter_mut().zip(u) {
                    *x -= c * y;
                }
            }
            let norm = fmath::sqrt(dot(&v, &v));
            if norm < 1e-10 {
                return None;
            }
            for x in v.iter_mut() {
                *x /= norm;
            }
            span.push(v);
        }
        let mut normal = alloc::vec![0.0; d];
        for k in 0..d {
            let mut e = alloc::vec![0.0; d];
            e[k] = 1.0;
            for u in &span {
                let c = dot(&e, u);
                for (x, y) in e.iter_mut().zip(u) {
                    *x -= c * y;
                }
            }
            let norm = fmath::sqrt(dot(&e, &e));
            if norm > 1e-8 {
                normal = e;
                for x in normal.iter_mut() {
                    *x /= norm;
                }
                break;
            }
        }
        let offset = dot(&normal, base);
        if dot(&normal, &interior) > offset {
            Some((normal.iter().map(|x| -x).collect(), -offset))
        } else {
            Some((normal, offset))
        }
    };

    let mut facets: Vec<FloatFacet> = Vec::new();
    for skip in 0..=d {
        let verts: Vec<usize> = basis
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, &i)| i)
            .collect();
        let (normal, offset) = plane(&verts)?;
        facets.push(FloatFacet { verts, normal, offset });
    }
    for p in 0..n {
        if basis.contains(&p) {
            continue;
        }
        let visible: Vec<usize> = (0..facets.len())
            .filter(|&f| dot(&facets[f].normal, &points[p]) > facets[f].offset + eps)
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut counts: alloc::collections::BTreeMap<Vec<usize>, u32> =
            alloc::collections::BTreeMap::new();
        for &f in &visible {
            for skip in 0..facets[f].verts.len() {
                let mut key: Vec<usize> = facets[f]
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                key.sort_unstable();
                *counts.entry(key).or_insert(0) += 1;
            }
        }
        let mut fresh: Vec<FloatFacet> = Vec::new();
        for (key, count) in counts {
            match count {
                1 => {
                    let mut verts = key;
                    verts.push(p);
                    let (normal, offset) = plane(&verts)?;
                    verts.sort_unstable();
                    fresh.push(FloatFacet { verts, normal, offset });
                }
                2 => {}
                _ => return None,
            }
        }
        if fresh.is_empty() {
            return None;
        }
        let visible_set: BTreeSet<usize> = visible.into_iter().collect();
        let mut keep: Vec<FloatFacet> = Vec::with_capacity(facets.len() + fresh.len());
        for (i, f) in facets.into_iter().enumerate() {
            if !visible_set.contains(&i) {
                keep.push(f);
            }
        }
        keep.extend(fresh);
        facets = keep;
    }
    let mut edges = BTreeSet::new();
    for f in &facets {
        for (a, &u) in f.verts.iter().enumerate() {
            for &v in &f.verts[a + 1..] {
                edges.insert((u, v));
            }
        }
    }
    Some(edges)
}

/// Minimal inner product over hull edges of the full antipodal set built
/// from `half` (each point joined by its negation). `None` when the float
/// hull cannot be resolved.
pub fn antipodal_edge_objective(half: &[Vec<f64>]) -> Option<f64> {
    let m = half.len();
    let mut full: Vec<Vec<f64>> = half.to_vec();
    for p in half {
        full.push(p.iter().map(|x| -x).collect());
    }
    let edges = float_hull_edges(&full, 1e-9)?;
    let mut min = f64::INFINITY;
    for (u, v) in edges {
        let m_uv = dot(&full[u], &full[v]);
        if m_uv < min {
            min = m_uv;
        }
    }
    (m > 0).then_some(min)
}

/// Annealing schedule and move scaling.
#[derive(Debug, Clone)]
pub struct AnnealSchedule {
    pub t_initial: f64,
    pub t_final: f64,
    /// Gaussian move magnitude as a multiple of the current temperature.
    pub move_scale: f64,
}

impl Default for AnnealSchedule {
    fn default() -> Self {
        AnnealSchedule {
            t_initial: 0.15,
            t_final: 1e-4,
            move_scale: 1.0,
        }
    }
}

/// Final state of an annealing run.
#[derive(Debug, Clone)]
pub struct SearchState {
    /// free points (one per antipodal pair), unit norm
    pub points: Vec<Vec<f64>>,
    pub dim: usize,
    pub objective: f64,
    pub best_objective: f64,
    pub best_points: Vec<Vec<f64>>,
    pub seed: u64,
    pub iterations: u64,
    pub temperature: f64,
    /// improvement events `(iteration, best objective)`
    pub trace: Vec<(u64, f64)>,
}

/// Simulated annealing over centrally symmetric configurations of `n` points
/// on the unit sphere in `R^d`, maximizing the minimal inner product between
/// hull-edge endpoints. One point moves per step (Gaussian, renormalized);
/// uphill moves always accepted, downhill with probability `exp(delta/T)`
/// under geometric cooling.
pub fn minmax_edge_search(
    n: usize,
    dim: usize,
    seed: u64,
    iterations: u64,
    schedule: &AnnealSchedule,
) -> Result<SearchState, SearchError> {
    if n % 2 != 0 || n < 2 * (dim + 1) || dim < 2 {
        return Err(SearchError::BadArity { n, dim });
    }
    let m = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vec<f64>> = Vec::new();
    let mut objective = f64::NEG_INFINITY;
    for _ in 0..64 {
        points = (0..m)
            .map(|_| {
                let mut p: Vec<f64> = (0..dim).map(|_| gaussian(&mut rng)).collect();
                normalize(&mut p);
                p
            })
            .collect();
        if let Some(obj) = antipodal_edge_objective(&points) {
            objective = obj;
            break;
        }
    }
    if objective == f64::NEG_INFINITY {
        return Err(SearchError::DegenerateConfiguration);
    }

    let mut best_points = points.clone();
    let mut best_objective = objective;
    let mut trace = alloc::vec![(0u64, best_objective)];
    let cooling = if iterations > 1 {
        fmath::ln(schedule.t_final / schedule.t_initial) / (iterations as f64 - 1.0)
    } else {
        0.0
    };
    let mut temperature = schedule.t_initial;
    for it in 0..iterations {
        temperature = schedule.t_initial * fmath::exp(cooling * it as f64);
        let idx = (rng.next_u64() % m as u64) as usize;
        let sigma = schedule.move_scale * temperature;
        let mut candidate = points[idx].clone();
        for x in candidate.iter_mut() {
            *x += sigma * gaussian(&mut rng);
        }
        normalize(&mut candidate);
        let saved = core::mem::replace(&mut points[idx], candidate);
        match antipodal_edge_objective(&points) {
            Some(obj) => {
                let delta = obj - objective;
                let accept = delta >= 0.0 || uniform(&mut rng) < fmath::exp(delta / temperature);
                if accept {
                    objective = obj;
                    if obj > best_objective {
                        best_objective = obj;
                        best_points = points.clone();
                        trace.push((it + 1, obj));
                    }
                } else {
                    points[idx] = saved;
                }
            }
            None => {
                points[idx] = saved;
            }
        }
    }
    Ok(SearchState {
        points,
        dim,
        objective,
        best_objective,
        best_points,
        seed,
        iterations,
        temperature,
        trace,
    })
}

/// An orthogonal frame as an explicit matrix together with the Givens
/// rotations that produced it.
#[derive(Debug, Clone)]
pub struct OrthogonalFrame {
    /// row-major `d x d`
    pub q: Vec<Vec<f64>>,
    pub rotations: Vec<(usize, usize, f64)>,
}

impl OrthogonalFrame {
    pub fn identity(d: usize) -> Self {
        let mut q = alloc::vec![alloc::vec![0.0; d]; d];
        for (i, row) in q.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        OrthogonalFrame {
            q,
            rotations: Vec::new(),
        }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.q.iter().map(|row| dot(row, x)).collect()
    }

    /// Max deviation of `Q^T Q` from the identity.
    pub fn orthogonality_defect(&self) -> f64 {
        let d = self.q.len();
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0.0;
                for row in &self.q {
                    acc += row[i] * row[j];
                }
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max(fmath::abs(acc - target));
            }
        }
        worst
    }
}

fn l1_total(y: &[Vec<f64>]) -> f64 {
    y.iter()
        .map(|p| p.iter().map(|x| fmath::abs(*x)).sum::<f64>())
        .sum()
}

/// Pair cost after rotating coordinates (i, j) by theta, summed over points.
fn pair_cost(y: &[Vec<f64>], i: usize, j: usize, theta: f64) -> f64 {
    let (s, c) = (fmath::sin(theta), fmath::cos(theta));
    y.iter()
        .map(|p| {
            let (a, b) = (p[i], p[j]);
            fmath::abs(c * a - s * b) + fmath::abs(s * a + c * b)
        })
        .sum()
}

/// Golden-section refinement of the pair cost within `[lo, hi]`.
fn golden_minimize(y: &[Vec<f64>], i: usize, j: usize, mut lo: f64, mut hi: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = pair_cost(y, i, j, x1);
    let mut f2 = pair_cost(y, i, j, x2);
    for _ in 0..64 {
        if hi - lo < 1e-13 {
            break;
        }
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = pair_cost(y, i, j, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = pair_cost(y, i, j, x2);
        }
    }
    0.5 * (lo + hi)
}

fn rotate_rows(y: &mut [Vec<f64>], i: usize, j: usize, theta: f64) {
    let (s, c) = (fmath::sin(theta), fmath::cos(theta));
    for p in y.iter_mut() {
        let (a, b) = (p[i], p[j]);
        p[i] = c * a - s * b;
        p[j] = s * a + c * b;
    }
}

fn rotate_q(frame: &mut OrthogonalFrame, i: usize, j: usize, theta: f64) {
    let (s, c) = (fmath::sin(theta), fmath::cos(theta));
    let d = frame.q[0].len();
    for k in 0..d {
        let (a, b) = (frame.q[i][k], frame.q[j][k]);
        frame.q[i][k] = c * a - s * b;
        frame.q[j][k] = s * a + c * b;
    }
    frame.rotations.push((i, j, theta));
}

/// Coordinate descent on `f(Q) = sum ||Q x||_1` over Givens angles. Each
/// angle is located by a coarse scan of its quarter period (the cost has
/// kinks, so a single golden-section bracket would not be unimodal) followed
/// by golden-section refinement; a sweep stops improving below 1e-10 ends
/// the descent. Runs from the identity and from a few seeded random frames,
/// returning the best frame and its objective.
pub fn l1_sparsify(
    points: &[Vec<f64>],
    seed: u64,
    sweeps: usize,
) -> Result<(OrthogonalFrame, f64), SearchError> {
    let d = points.first().ok_or(SearchError::EmptyInput)?.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let restarts = 6usize;
    let mut best: Option<(OrthogonalFrame, f64)> = None;
    for restart in 0..=restarts {
        let mut frame = OrthogonalFrame::identity(d);
        let mut y: Vec<Vec<f64>> = points.to_vec();
        if restart > 0 {
            // random initial frame: one pass of random Givens angles
            for i in 0..d {
                for j in i + 1..d {
                    let theta = (uniform(&mut rng) - 0.5) * core::f64::consts::PI;
                    rotate_rows(&mut y, i, j, theta);
                    rotate_q(&mut frame, i, j, theta);
                }
            }
        }
        let mut current = l1_total(&y);
        for _ in 0..sweeps {
            let before = current;
            for i in 0..d {
                for j in i + 1..d {
                    let span = core::f64::consts::FRAC_PI_4;
                    let grid = 32;
                    let mut best_theta = 0.0;
                    let mut best_cost = pair_cost(&y, i, j, 0.0);
                    for g in 0..=grid {
                        let theta = -span + 2.0 * span * g as f64 / grid as f64;
                        let cost = pair_cost(&y, i, j, theta);
                        if cost < best_cost {
                            best_cost = cost;
                            best_theta = theta;
                        }
                    }
                    let step = 2.0 * span / grid as f64;
                    let theta =
                        golden_minimize(&y, i, j, best_theta - step, best_theta + step);
                    let refined = pair_cost(&y, i, j, theta);
                    let base = pair_cost(&y, i, j, 0.0);
                    if refined < base - 1e-15 {
                        rotate_rows(&mut y, i, j, theta);
                        rotate_q(&mut frame, i, j, theta);
                    }
                }
            }
            current = l1_total(&y);
            if before - current < 1e-10 {
                break;
            }
        }
        match &best {
            Some((_, f)) if *f <= current => {}
            _ => best = Some((frame, current)),
        }
    }
    Ok(best.expect("at least one start"))
}

/// Best rational approximation with denominator at most `max_den`, via
/// continued-fraction convergents with the final semiconvergent correction.
pub fn best_rational(x: f64, max_den: u64) -> Rational {
    if max_den == 0 {
        return Rational::from_integer(BigInt::from(0));
    }
    let negative = x < 0.0;
    let mut value = fmath::abs(x);
    // convergents p/q; (p0,q0) two back, (p1,q1) one back, seeded so the
    // first step yields a_0 / 1
    let (mut p0, mut q0, mut p1, mut q1): (i128, i128, i128, i128) = (0, 1, 1, 0);
    let cap = max_den as i128;
    for _ in 0..64 {
        let a = fmath::floor(value) as i128;
        let p2 = a * p1 + p0;
        let q2 = a * q1 + q0;
        if q2 > cap {
            let t = (cap - q0) / q1.max(1);
            let semi = (t * p1 + p0, t * q1 + q0);
            let conv = (p1, q1);
            let err = |(p, q): (i128, i128)| {
                if q <= 0 {
                    f64::INFINITY
                } else {
                    fmath::abs(fmath::abs(x) - p as f64 / q as f64)
                }
            };
            let pick = if err(semi) < err(conv) { semi } else { conv };
            return signed_rational(pick.0, pick.1.max(1), negative);
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = value - a as f64;
        if frac < 1e-15 {
            break;
        }
        value = 1.0 / frac;
    }
    signed_rational(p1, q1.max(1), negative)
}

fn signed_rational(p: i128, q: i128, negative: bool) -> Rational {
    let r = Rational::new(BigInt::from(p), BigInt::from(q));
    if negative {
        -r
    } else {
        r
    }
}

/// Rounds a float configuration laid out with the pairing `i <-> i + n/2` to
/// exact rationals with bounded denominator. Antipodal symmetry is restored
/// first: each pair is replaced by `(x_i - x_{tau(i)}) / 2` before rounding,
/// so the output pairing is exact by construction.
pub fn rationalize(points: &[Vec<f64>], max_den: u64) -> Result<PointConfiguration, SearchError> {
    if max_den == 0 {
        return Err(SearchError::BadDenominatorCap);
    }
    let n = points.len();
    if n == 0 {
        return Err(SearchError::EmptyInput);
    }
    if n % 2 != 0 {
        return Err(SearchError::UnpairedInput);
    }
    let d = points[0].len();
    let half = n / 2;
    let mut rounded: Vec<RatVector> = Vec::with_capacity(n);
    for i in 0..half {
        let coords: Vec<Rational> = (0..d)
            .map(|c| {
                let sym = 0.5 * (points[i][c] - points[i + half][c]);
                best_rational(sym, max_den)
            })
            .collect();
        rounded.push(RatVector::new(coords));
    }
    let negated: Vec<RatVector> = rounded.iter().map(RatVector::neg).collect();
    rounded.extend(negated);
    PointConfiguration::with_half_pairing(rounded, d)
        .map_err(|_| SearchError::DegenerateConfiguration)
}
