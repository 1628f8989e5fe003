//! Permutation groups on a small ground set: closure by breadth-first
//! multiplication with an element cap, and a stabilizer-chain (Schreier-Sims)
//! fallback that still yields the exact order when the element list would be
//! too large to hold.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

/// `(p . q)(x) = p(q(x))`
pub fn compose(p: &[u32], q: &[u32]) -> Vec<u32> {
    q.iter().map(|&x| p[x as usize]).collect()
}

pub fn invert(p: &[u32]) -> Vec<u32> {
    let mut inv = alloc::vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

pub fn identity(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

/// A permutation group given by generators, with its exact order and, when
/// small enough, the full element list.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Vec<u32>>,
    order: BigUint,
    elements: Option<Vec<Vec<u32>>>,
}

impl PermutationGroup {
    /// Wraps a closed element set (as produced by an exhaustive search),
    /// deriving a small generating set greedily.
    pub fn from_elements(elements: Vec<Vec<u32>>) -> Self {
        let degree = elements.first().map_or(0, Vec::len);
        let set: BTreeSet<Vec<u32>> = elements.into_iter().collect();
        let mut generators: Vec<Vec<u32>> = Vec::new();
        let mut generated: BTreeSet<Vec<u32>> = BTreeSet::new();
        generated.insert(identity(degree));
        for e in &set {
            if !generated.contains(e) {
                generators.push(e.clone());
                generated = close(degree, &generators, usize::MAX).expect("unbounded");
            }
        }
        PermutationGroup {
            degree,
            order: BigUint::from(set.len()),
            elements: Some(set.into_iter().collect()),
            generators,
        }
    }

    /// Closure of the generators. Elements are listed when the group has at
    /// most `cap` of them; for larger groups only the exact order is kept,
    /// computed from a stabilizer chain.
    pub fn closure(degree: usize, generators: &[Vec<u32>], cap: usize) -> Self {
        debug_assert!(generators.iter().all(|g| g.len() == degree));
        match close(degree, generators, cap) {
            Some(set) => PermutationGroup {
                degree,
                generators: generators.to_vec(),
                order: BigUint::from(set.len()),
                elements: Some(set.into_iter().collect()),
            },
            None => PermutationGroup {
                degree,
                generators: generators.to_vec(),
                order: stabilizer_chain_order(degree, generators),
                elements: None,
            },
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Sorted element list, when the order was within the listing cap.
    pub fn elements(&self) -> Option<&[Vec<u32>]> {
        self.elements.as_deref()
    }

    /// Set equality of the element lists (both groups must be listed).
    pub fn same_elements(&self, other: &PermutationGroup) -> Option<bool> {
        match (&self.elements, &other.elements) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        }
    }
}

/// BFS closure; `None` when more than `cap` elements appear.
fn close(degree: usize, generators: &[Vec<u32>], cap: usize) -> Option<BTreeSet<Vec<u32>>> {
    let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue: Vec<Vec<u32>> = alloc::vec![identity(degree)];
    set.insert(identity(degree));
    while let Some(p) = queue.pop() {
        for g in generators {
            let q = compose(g, &p);
            if !set.contains(&q) {
                if set.len() >= cap {
                    return None;
                }
                set.insert(q.clone());
                queue.push(q);
            }
        }
    }
    Some(set)
}

/// Exact group order from a stabilizer chain. Deterministic Schreier-Sims,
/// rebuilt from scratch whenever a sifted residue survives; fine at this
/// scale, where the fallback only fires for orders beyond the listing cap.
fn stabilizer_chain_order(degree: usize, generators: &[Vec<u32>]) -> BigUint {
    let mut pool: Vec<Vec<u32>> = generators
        .iter()
        .filter(|g| g.iter().enumerate().any(|(i, &x)| x as usize != i))
        .cloned()
        .collect();
    if pool.is_empty() {
        return BigUint::one();
    }
    let mut base: Vec<u32> = Vec::new();

    loop {
        // levels: generators fixing the base prefix, orbit + transversal
        let mut levels: Vec<(u32, BTreeMap<u32, Vec<u32>>, Vec<Vec<u32>>)> = Vec::new();
        let mut level_start = 0usize;
        loop {
            let level_gens: Vec<Vec<u32>> = pool
                .iter()
                .filter(|g| base[..level_start].iter().all(|&b| g[b as usize] == b))
                .cloned()
                .collect();
            if level_gens.is_empty() {
                break;
            }
            let b = match base.get(level_start) {
                Some(&b) => b,
                None => {
                    let g = &level_gens[0];
                    let moved = g
                        .iter()
                        .enumerate()
                        .find(|&(i, &x)| x as usize != i)
                        .map(|(i, _)| i as u32)
                        .expect("non-identity generator");
                    base.push(moved);
                    moved
                }
            };
            let mut transversal: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
            transversal.insert(b, identity(degree));
            let mut queue = alloc::vec![b];
            while let Some(p) = queue.pop() {
                let t_p = transversal[&p].clone();
                for g in &level_gens {
                    let q = g[p as usize];
                    if !transversal.contains_key(&q) {
                        transversal.insert(q, compose(g, &t_p));
                        queue.push(q);
                    }
                }
            }
            levels.push((b, transversal, level_gens));
            level_start += 1;
        }

        // sift every Schreier generator; a surviving residue grows the pool
        let mut residue: Option<Vec<u32>> = None;
        'scan: for (_, transversal, level_gens) in &levels {
            for t_p in transversal.values() {
                for g in level_gens {
                    let sg = compose(g, t_p);
                    if let Some(r) = sift(&sg, &levels) {
                        residue = Some(r);
                        break 'scan;
                    }
                }
            }
        }
        match residue {
            Some(r) => pool.push(r),
            None => {
                let mut order = BigUint::one();
                for (_, transversal, _) in &levels {
                    order *= BigUint::from(transversal.len());
                }
                return order;
            }
        }
    }
}

/// Strips `p` through the chain; `Some(residue)` when it does not sift to
/// the identity.
fn sift(
    p: &[u32],
    levels: &[(u32, BTreeMap<u32, Vec<u32>>, Vec<Vec<u32>>)],
) -> Option<Vec<u32>> {
    let mut p = p.to_vec();
    for (b, transversal, _) in levels {
        let image = p[*b as usize];
        match transversal.get(&image) {
            None => return Some(p),
            Some(t) => p = compose(&invert(t), &p),
        }
    }
    if p.iter().enumerate().any(|(i, &x)| x as usize != i) {
        Some(p)
    } else {
        None
    }
}
