//! Exact rational scalars, vectors and matrices, plus the fraction-free
//! linear-algebra predicates the geometric modules are built on.
//!
//! Scalars are [`num_rational::BigRational`], which keeps every value
//! reduced with a positive denominator, so equality is structural.
//! Determinant and rank work on integer-scaled rows with Bareiss
//! (fraction-free) elimination to keep intermediate growth polynomial.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use num_rational::BigRational as Rational;

/// Shorthand for a rational from two machine integers. Panics on zero
/// denominator; intended for literals and tables.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    NotSquare { rows: usize, cols: usize },
    DimMismatch { expected: usize, got: usize },
    RaggedRows,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            LinalgError::DimMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            LinalgError::RaggedRows => write!(f, "rows have unequal lengths"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LinalgError {}

/// Fixed-length vector of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector {
    entries: Vec<Rational>,
}

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector { entries }
    }

    pub fn zero(dim: usize) -> Self {
        RatVector {
            entries: alloc::vec![Rational::zero(); dim],
        }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        RatVector {
            entries: values.iter().map(|&v| rat_int(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Rational::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc += a * b;
        }
        acc
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> RatVector {
        RatVector {
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> RatVector {
        RatVector {
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Smallest positive integer multiplier clearing all denominators,
    /// together with the resulting integer entries.
    pub fn to_integer_scaled(&self) -> (BigInt, Vec<BigInt>) {
        let mut lcm = BigInt::one();
        for e in &self.entries {
            lcm = lcm.lcm(e.denom());
        }
        let ints = self
            .entries
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        (lcm, ints)
    }
}

impl core::ops::Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

/// Rectangular matrix of exact rationals, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<RatVector>,
    cols: usize,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<RatVector>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, RatVector::dim);
        if rows.iter().any(|r| r.dim() != cols) {
            return Err(LinalgError::RaggedRows);
        }
        Ok(RatMatrix { rows, cols })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(rows.iter().map(|r| RatVector::from_i64(r)).collect())
            .expect("literal rows must be rectangular")
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut e = alloc::vec![Rational::zero(); n];
                e[i] = Rational::one();
                RatVector::new(e)
            })
            .collect();
        RatMatrix { rows, cols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &RatVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn mat_vec(&self, v: &RatVector) -> RatVector {
        RatVector::new(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        debug_assert_eq!(self.cols, other.nrows());
        let rows = (0..self.nrows())
            .map(|i| {
                RatVector::new(
                    (0..other.ncols())
                        .map(|j| {
                            let mut acc = Rational::zero();
                            for k in 0..self.cols {
                                acc += &self.rows[i][k] * &other.rows[k][j];
                            }
                            acc
                        })
                        .collect(),
                )
            })
            .collect();
        RatMatrix {
            rows,
            cols: other.ncols(),
        }
    }

    /// Exact determinant via Bareiss elimination on integer-scaled rows.
    pub fn det(&self) -> Result<Rational, LinalgError> {
        if self.nrows() != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.nrows(),
                cols: self.cols,
            });
        }
        let n = self.nrows();
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in &self.rows {
            let (s, ints) = r.to_integer_scaled();
            scale *= s;
            m.push(ints);
        }
        let (det, _) = bareiss(&mut m, true);
        Ok(Rational::new(det, scale))
    }

    /// Exact row rank via fraction-free elimination with column pivoting.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.to_integer_scaled().1)
            .collect();
        let (_, rank) = bareiss(&mut m, false);
        rank
    }

    /// Exact solution of `self * x = b`, or `None` when inconsistent.
    /// Free variables, if any, are set to zero.
    pub fn solve(&self, b: &RatVector) -> Result<Option<RatVector>, LinalgError> {
        if b.dim() != self.nrows() {
            return Err(LinalgError::DimMismatch {
                expected: self.nrows(),
                got: b.dim(),
            });
        }
        let nrows = self.nrows();
        let ncols = self.cols;
        let mut aug: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .zip(b.entries())
            .map(|(r, bi)| {
                let mut row: Vec<Rational> = r.entries().to_vec();
                row.push(bi.clone());
                row
            })
            .collect();

        let mut pivot_cols = Vec::new();
        let mut r = 0usize;
        for c in 0..ncols {
            let Some(p) = (r..nrows).find(|&i| !aug[i][c].is_zero()) else {
                continue;
            };
            aug.swap(r, p);
            let inv = aug[r][c].recip();
            for j in c..=ncols {
                let v = &aug[r][j] * &inv;
                aug[r][j] = v;
            }
            for i in 0..nrows {
                if i != r && !aug[i][c].is_zero() {
                    let f = aug[i][c].clone();
                    for j in c..=ncols {
                        let v = &aug[i][j] - &f * &aug[r][j];
                        aug[i][j] = v;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == nrows {
                break;
            }
        }
        // Inconsistent iff a zero row has nonzero rhs.
        for row in aug.iter().skip(r) {
            if !row[ncols].is_zero() {
                return Ok(None);
            }
        }
        let mut x = alloc::vec![Rational::zero(); ncols];
        for (row_idx, &c) in pivot_cols.iter().enumerate() {
            x[c] = aug[row_idx][ncols].clone();
        }
        Ok(Some(RatVector::new(x)))
    }
}

/// Fraction-free Gaussian elimination (Bareiss). Returns the determinant
/// (meaningful only for square input that reached full rank, else zero)
/// and the rank. Mutates `m` in place.
fn bareiss(m: &mut [Vec<BigInt>], want_det: bool) -> (BigInt, usize) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(r, p);
            sign = -sign;
        }
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let num = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    let det = if want_det && r == nrows && nrows == ncols && nrows > 0 {
        if sign < 0 {
            -prev
        } else {
            prev
        }
    } else if want_det && nrows == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    (det, r)
}

/// Orientation of `d+1` points in `R^d`: the sign of the determinant of the
/// homogeneous (lifted) matrix. Zero exactly when the points are affinely
/// dependent.
pub fn orientation(points: &[RatVector]) -> Result<i8, LinalgError> {
    let Some(first) = points.first() else {
        return Err(LinalgError::DimMismatch {
            expected: 1,
            got: 0,
        });
    };
    let d = first.dim();
    if points.len() != d + 1 {
        return Err(LinalgError::DimMismatch {
            expected: d + 1,
            got: points.len(),
        });
    }
    for p in points {
        if p.dim() != d {
            return Err(LinalgError::DimMismatch {
                expected: d,
                got: p.dim(),
            });
        }
    }
    Ok(orientation_sign(points))
}

/// Same as [`orientation`] but without the arity checks; rows are scaled to
/// integers individually (positive scaling preserves the sign).
pub(crate) fn orientation_sign(points: &[RatVector]) -> i8 {
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(points.len());
    for p in points {
        let (lcm, mut ints) = p.to_integer_scaled();
        // homogeneous coordinate, scaled by the same positive factor
        ints.insert(0, lcm);
        m.push(ints);
    }
    let (det, _) = bareiss(&mut m, true);
    match det.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Generalized cross product: given `d-1` vectors in `R^d`, an integer
/// vector `n` with `det([v; rows]) = c * (n . v)` for some `c > 0`.
/// Returns the zero vector when the rows are linearly dependent.
pub(crate) fn cross_product(rows: &[RatVector], d: usize) -> Vec<BigInt> {
    debug_assert!(rows.iter().all(|r| r.dim() == d));
    debug_assert_eq!(rows.len() + 1, d);
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.to_integer_scaled().1).collect();
    let mut normal = Vec::with_capacity(d);
    for k in 0..d {
        let mut minor: Vec<Vec<BigInt>> = int_rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let (det, _) = bareiss(&mut minor, true);
        normal.push(if k % 2 == 0 { det } else { -det });
    }
    normal
}

/// Divides the entries by their gcd in place; all-zero input is untouched.
/// Returns false for all-zero input.
pub(crate) fn make_primitive(v: &mut [BigInt]) -> bool {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return false;
    }
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    true
}

/// Nearest float; used only at the boundary to the search pipeline.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders a rational as `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    use alloc::format;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: cofactor (Laplace) expansion determinant.
    fn det_laplace(m: &RatMatrix) -> Rational {
        fn go(rows: &[Vec<Rational>]) -> Rational {
            let n = rows.len();
            if n == 0 {
                return Rational::one();
            }
            if n == 1 {
                return rows[0][0].clone();
            }
            let mut acc = Rational::zero();
            for k in 0..n {
                if rows[0][k].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Rational>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != k)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][k] * go(&sub);
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let rows: Vec<Vec<Rational>> = m.rows().iter().map(|r| r.entries().to_vec()).collect();
        go(&rows)
    }

    #[test]
    fn det_identity() {
        assert_eq!(RatMatrix::identity(3).det().unwrap(), rat_int(1));
    }

    #[test]
    fn det_diagonal_halves() {
        let m = RatMatrix::from_rows(vec![
            RatVector::new(vec![rat(1, 2), rat_int(0)]),
            RatVector::new(vec![rat_int(0), rat_int(2)]),
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), rat_int(1));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = RatMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(m.det(), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn rank_zero_and_identity() {
        let z = RatMatrix::from_rows(vec![RatVector::zero(4); 4]).unwrap();
        assert_eq!(z.rank(), 0);
        assert_eq!(RatMatrix::identity(6).rank(), 6);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = RatMatrix::identity(2);
        let b = RatVector::new(vec![rat(3, 7), rat(4, 7)]);
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        // x + y = 1 and x + y = 2 is inconsistent
        let m = RatMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        let b = RatVector::from_i64(&[1, 2]);
        assert_eq!(m.solve(&b).unwrap(), None);
    }

    #[test]
    fn solve_solution_satisfies_system() {
        let m = RatMatrix::from_i64(&[&[2, 1, -1], &[-3, -1, 2], &[-2, 1, 2]]);
        let b = RatVector::from_i64(&[8, -11, -3]);
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mat_vec(&x), b);
    }

    #[test]
    fn orientation_standard_and_collinear() {
        let a = RatVector::from_i64(&[0, 0]);
        let b = RatVector::from_i64(&[1, 0]);
        let c = RatVector::from_i64(&[0, 1]);
        assert_eq!(orientation(&[a.clone(), b.clone(), c.clone()]).unwrap(), 1);
        assert_eq!(orientation(&[b.clone(), a.clone(), c.clone()]).unwrap(), -1);
        let mid = RatVector::new(vec![rat(1, 2), rat_int(0)]);
        assert_eq!(orientation(&[a, b, mid]).unwrap(), 0);
    }

    #[test]
    fn orientation_rejects_bad_arity() {
        let a = RatVector::from_i64(&[0, 0]);
        let b = RatVector::from_i64(&[1, 0]);
        assert!(orientation(&[a, b]).is_err());
    }

    #[test]
    fn cross_product_orthogonal() {
        let r1 = RatVector::from_i64(&[1, 0, 0]);
        let r2 = RatVector::from_i64(&[0, 1, 0]);
        let n = cross_product(&[r1, r2], 3);
        assert_eq!(n, vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
            proptest::collection::vec(
                proptest::collection::vec((-6i64..=6, 1i64..=4), n),
                n,
            )
            .prop_map(|rows| {
                RatMatrix::from_rows(
                    rows.into_iter()
                        .map(|r| {
                            RatVector::new(r.into_iter().map(|(p, q)| rat(p, q)).collect())
                        })
                        .collect(),
                )
                .unwrap()
            })
        }

        proptest! {
            #[test]
            fn det_matches_laplace(m in small_matrix(4)) {
                prop_assert_eq!(m.det().unwrap(), det_laplace(&m));
            }

            #[test]
            fn det_is_multiplicative(a in small_matrix(3), b in small_matrix(3)) {
                let lhs = a.mul(&b).det().unwrap();
                let rhs = a.det().unwrap() * b.det().unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn solve_exact_when_present(m in small_matrix(3), v in proptest::collection::vec(-5i64..=5, 3)) {
                let b = RatVector::from_i64(&v);
                if let Some(x) = m.solve(&b).unwrap() {
                    prop_assert_eq!(m.mat_vec(&x), b);
                }
            }

            #[test]
            fn orientation_antisymmetric(pts in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 3), 4)) {
                let pts: Vec<RatVector> = pts.iter().map(|p| RatVector::from_i64(p)).collect();
                let mut swapped = pts.clone();
                swapped.swap(0, 1);
                let a = orientation(&pts).unwrap();
                let b = orientation(&swapped).unwrap();
                prop_assert_eq!(a, -b);
            }
        }
    }
}
