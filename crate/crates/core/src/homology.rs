//! Simplicial chain complexes over the integers: boundary matrices with the
//! sorted-vertex orientation, mod-2 Betti numbers via sparse column
//! reduction, and integer homology (Betti numbers plus torsion) via Smith
//! normal form with fill-aware pivoting.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::complex::SimplicialComplex;

/// The `k`-th boundary map: columns are `k`-faces, rows `(k-1)`-faces,
/// entries `(-1)^i` for dropping the `i`-th vertex in sorted order.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub rows: usize,
    pub cols: usize,
    /// per column: (row index, sign), sorted by row
    pub columns: Vec<Vec<(u32, i8)>>,
}

/// Boundary matrices for `k = 1..=dim`.
pub fn boundary_matrices(c: &SimplicialComplex) -> Vec<BoundaryMatrix> {
    let dim = c.dim();
    let mut out = Vec::with_capacity(dim);
    let mut lower = c.faces_of_dim(0);
    for k in 1..=dim {
        let upper = c.faces_of_dim(k);
        let index: BTreeMap<&[u32], u32> = lower
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i as u32))
            .collect();
        let columns = upper
            .iter()
            .map(|face| {
                let mut col: Vec<(u32, i8)> = (0..face.len())
                    .map(|drop| {
                        let sub: Vec<u32> = face
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != drop)
                            .map(|(_, &v)| v)
                            .collect();
                        let row = index[sub.as_slice()];
                        (row, if drop % 2 == 0 { 1i8 } else { -1i8 })
                    })
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect();
        out.push(BoundaryMatrix {
            dim: k,
            rows: lower.len(),
            cols: upper.len(),
            columns,
        });
        lower = upper;
    }
    out
}

/// Verifies that consecutive boundary maps compose to zero over the
/// integers.
pub fn boundaries_compose_to_zero(lower: &BoundaryMatrix, upper: &BoundaryMatrix) -> bool {
    debug_assert_eq!(lower.dim + 1, upper.dim);
    for col in &upper.columns {
        let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
        for &(mid, s1) in col {
            for &(row, s2) in &lower.columns[mid as usize] {
                *acc.entry(row).or_insert(0) += i64::from(s1) * i64::from(s2);
            }
        }
        if acc.values().any(|&v| v != 0) {
            return false;
        }
    }
    true
}

fn xor_merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// GF(2) rank by low-based column reduction (sparse; well behaved on
/// boundary matrices).
pub fn rank_gf2(columns: &[Vec<(u32, i8)>]) -> usize {
    let mut low_owner: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut rank = 0usize;
    for col in columns {
        let mut cur: Vec<u32> = col.iter().map(|&(r, _)| r).collect();
        loop {
            let Some(&low) = cur.last() else {
                break;
            };
            match low_owner.get(&low) {
                None => {
                    low_owner.insert(low, cur);
                    rank += 1;
                    break;
                }
                Some(owner) => cur = xor_merge(&cur, owner),
            }
        }
    }
    rank
}

/// Betti numbers over the two-element field, `(b_0, ..., b_dim)`.
pub fn betti_mod2(c: &SimplicialComplex) -> Vec<usize> {
    let f = c.f_vector();
    if f.is_empty() {
        return Vec::new();
    }
    let mats = boundary_matrices(c);
    let mut ranks = alloc::vec![0usize; f.len() + 1];
    for m in &mats {
        ranks[m.dim] = rank_gf2(&m.columns);
    }
    (0..f.len())
        .map(|k| f[k] - ranks[k] - ranks[k + 1])
        .collect()
}

/// Per-dimension integer homology: free rank and torsion invariant factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    pub betti: Vec<usize>,
    /// invariant factors > 1 of `H_k`, ascending under divisibility
    pub torsion: Vec<Vec<BigUint>>,
}

/// Integer homology via Smith normal form of every boundary matrix.
pub fn integer_homology(c: &SimplicialComplex) -> HomologySummary {
    let f = c.f_vector();
    if f.is_empty() {
        return HomologySummary {
            betti: Vec::new(),
            torsion: Vec::new(),
        };
    }
    let mats = boundary_matrices(c);
    let mut ranks = alloc::vec![0usize; f.len() + 1];
    let mut factors: Vec<Vec<BigUint>> = alloc::vec![Vec::new(); f.len() + 1];
    for m in &mats {
        let inv = smith_invariant_factors(m);
        ranks[m.dim] = inv.len();
        factors[m.dim] = inv;
    }
    let betti: Vec<usize> = (0..f.len())
        .map(|k| f[k] - ranks[k] - ranks[k + 1])
        .collect();
    let torsion: Vec<Vec<BigUint>> = (0..f.len())
        .map(|k| {
            factors[k + 1]
                .iter()
                .filter(|d| **d > BigUint::one())
                .cloned()
                .collect()
        })
        .collect();
    HomologySummary { betti, torsion }
}

/// Universal-coefficients consistency: the mod-2 Betti number in dimension k
/// equals the integer Betti number plus the even torsion counts of H_k and
/// H_{k-1}.
pub fn mod2_consistent(summary: &HomologySummary, betti2: &[usize]) -> bool {
    let even = |k: usize| -> usize {
        summary
            .torsion
            .get(k)
            .map_or(0, |t| t.iter().filter(|d| d.is_even()).count())
    };
    if summary.betti.len() != betti2.len() {
        return false;
    }
    (0..betti2.len()).all(|k| {
        let from_integer = summary.betti[k] + even(k) + if k > 0 { even(k - 1) } else { 0 };
        from_integer == betti2[k]
    })
}

/// Sparse integer matrix under unimodular row/column operations.
struct SparseInt {
    rows: Vec<BTreeMap<u32, BigInt>>,
    cols: Vec<BTreeSet<u32>>,
}

impl SparseInt {
    fn from_boundary(m: &BoundaryMatrix) -> Self {
        let mut rows: Vec<BTreeMap<u32, BigInt>> = alloc::vec![BTreeMap::new(); m.rows];
        let mut cols: Vec<BTreeSet<u32>> = alloc::vec![BTreeSet::new(); m.cols];
        for (j, col) in m.columns.iter().enumerate() {
            for &(i, s) in col {
                rows[i as usize].insert(j as u32, BigInt::from(s));
                cols[j].insert(i);
            }
        }
        SparseInt { rows, cols }
    }

    fn set(&mut self, i: u32, j: u32, v: BigInt) {
        if v.is_zero() {
            self.rows[i as usize].remove(&j);
            self.cols[j as usize].remove(&i);
        } else {
            self.rows[i as usize].insert(j, v);
            self.cols[j as usize].insert(i);
        }
    }

    /// `row_i -= q * row_r`
    fn row_op(&mut self, i: u32, r: u32, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let src: Vec<(u32, BigInt)> = self.rows[r as usize]
            .iter()
            .map(|(&j, v)| (j, v.clone()))
            .collect();
        for (j, v) in src {
            let cur = self.rows[i as usize]
                .get(&j)
                .cloned()
                .unwrap_or_else(BigInt::zero);
            self.set(i, j, cur - q * v);
        }
    }
}

/// Invariant factors (nonzero diagonal of the Smith normal form), ascending
/// under divisibility. Their count is the rank.
pub fn smith_invariant_factors(m: &BoundaryMatrix) -> Vec<BigUint> {
    let mut s = SparseInt::from_boundary(m);
    let mut active_rows: BTreeSet<u32> = (0..m.rows as u32)
        .filter(|&i| !s.rows[i as usize].is_empty())
        .collect();
    let mut diag: Vec<BigInt> = Vec::new();

    loop {
        // pivot: unit entries first, Markowitz fill estimate as tie-break
        let mut pivot: Option<(u32, u32, bool, usize)> = None;
        for &i in &active_rows {
            for (&j, v) in &s.rows[i as usize] {
                let unit = v.abs().is_one();
                let fill = (s.rows[i as usize].len() - 1) * (s.cols[j as usize].len() - 1);
                let better = match &pivot {
                    None => true,
                    Some((_, _, punit, pfill)) => {
                        (unit && !punit) || (unit == *punit && fill < *pfill)
                    }
                };
                if better {
                    pivot = Some((i, j, unit, fill));
                }
            }
        }
        let Some((mut r, mut c, _, _)) = pivot else {
            break;
        };

        'reduce: loop {
            // clear the pivot column with euclidean row operations
            let others: Vec<u32> = s.cols[c as usize]
                .iter()
                .copied()
                .filter(|&i| i != r)
                .collect();
            for i in others {
                let a = s.rows[i as usize][&c].clone();
                let p = s.rows[r as usize][&c].clone();
                let (q, rem) = a.div_mod_floor(&p);
                s.row_op(i, r, &q);
                debug_assert_eq!(
                    s.rows[i as usize].get(&c).cloned().unwrap_or_else(BigInt::zero),
                    rem
                );
                if !rem.is_zero() {
                    // strictly smaller remainder becomes the pivot
                    r = i;
                    continue 'reduce;
                }
            }
            // pivot column is now a singleton; clearing the pivot row via
            // column operations touches only row r
            let row_others: Vec<u32> = s.rows[r as usize]
                .keys()
                .copied()
                .filter(|&j| j != c)
                .collect();
            for j in row_others {
                let a = s.rows[r as usize][&j].clone();
                let p = s.rows[r as usize][&c].clone();
                let (_, rem) = a.div_mod_floor(&p);
                s.set(r, j, rem.clone());
                if !rem.is_zero() {
                    c = j;
                    continue 'reduce;
                }
            }
            break;
        }

        diag.push(s.rows[r as usize][&c].abs());
        let row_entries: Vec<u32> = s.rows[r as usize].keys().copied().collect();
        for j in row_entries {
            s.set(r, j, BigInt::zero());
        }
        active_rows.remove(&r);
        active_rows.retain(|&i| !s.rows[i as usize].is_empty());
    }

    // massage the diagonal into an invariant-factor chain
    loop {
        let mut changed = false;
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                if !(&diag[j] % &diag[i]).is_zero() {
                    let g = diag[i].gcd(&diag[j]);
                    let l = &diag[i] / &g * &diag[j];
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    diag.sort();
    diag.into_iter()
        .map(|d| d.to_biguint().expect("absolute values"))
        .collect()
}
