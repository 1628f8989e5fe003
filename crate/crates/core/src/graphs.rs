//! Threshold graphs on point configurations, degree statistics, and exact
//! chromatic numbers via clique bounds plus DSATUR-guided branch and bound.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::hull::{HullStructure, PointConfiguration};
use crate::ratmath::Rational;

/// Fixed-width bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits {
            words: alloc::vec![0u64; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut b = Bits::new(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect(&self, other: &Bits) -> Bits {
        Bits {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn minus(&self, other: &Bits) -> Bits {
        Bits {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Simple undirected graph with bitset adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: alloc::vec![Bits::new(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        self.adj[u].set(v);
        self.adj[v].set(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].get(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bits::count).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn nbr(&self, v: usize) -> &Bits {
        &self.adj[v]
    }
}

/// Graph on the configuration's points with an edge wherever the exact inner
/// product strictly exceeds `t`.
pub fn threshold_graph(config: &PointConfiguration, t: &Rational) -> Graph {
    let n = config.len();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if &config.point(i).dot(config.point(j)) > t {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    /// `Some(k)` when the graph is `k`-regular.
    pub regular: Option<usize>,
    pub degrees: Vec<usize>,
    pub edge_count: usize,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let regular = match (degrees.first(), degrees.iter().all(|&d| Some(&d) == degrees.first())) {
        (Some(&d), true) => Some(d),
        _ => None,
    };
    DegreeProfile {
        regular,
        edge_count: degrees.iter().sum::<usize>() / 2,
        degrees,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRuleReport {
    pub ok: bool,
    /// A pair on which the hull skeleton and the positive-inner-product rule
    /// disagree, with the side that claims the edge.
    pub counterexample: Option<(usize, usize, EdgeRuleSide)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRuleSide {
    HullOnly,
    PositiveProductOnly,
}

/// Checks that the hull 1-skeleton coincides with the threshold graph at
/// `t = 0`, i.e. edges are exactly the pairs with positive inner product.
pub fn verify_edge_rule(config: &PointConfiguration, hull: &HullStructure) -> EdgeRuleReport {
    let hull_edges = hull.edges().expect("edge rule needs a simplicial hull");
    let zero = threshold_graph(config, &Rational::zero());
    for (u, v) in &hull_edges {
        if !zero.has_edge(*u, *v) {
            return EdgeRuleReport {
                ok: false,
                counterexample: Some((*u, *v, EdgeRuleSide::HullOnly)),
            };
        }
    }
    for (u, v) in zero.edges() {
        if !hull_edges.contains(&(u, v)) {
            return EdgeRuleReport {
                ok: false,
                counterexample: Some((u, v, EdgeRuleSide::PositiveProductOnly)),
            };
        }
    }
    EdgeRuleReport {
        ok: true,
        counterexample: None,
    }
}

/// Exact chromatic number when the search completes, otherwise certified
/// bounds. The witness is always a proper coloring with `upper_bound` colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringResult {
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub witness: Vec<u32>,
    pub exact: bool,
}

impl ColoringResult {
    pub fn chromatic_number(&self) -> Option<usize> {
        self.exact.then_some(self.upper_bound)
    }
}

/// Validates a proper coloring; used to double-check every witness.
pub fn is_proper_coloring(g: &Graph, coloring: &[u32]) -> bool {
    coloring.len() == g.n()
        && g.edges()
            .iter()
            .all(|&(u, v)| coloring[u] != coloring[v])
}

/// Greedy clique: repeatedly add the candidate with most candidate-neighbors.
fn greedy_clique_within(g: &Graph, allowed: &Bits) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in allowed.ones() {
        let mut clique = alloc::vec![start];
        let mut cands = g.nbr(start).intersect(allowed);
        while !cands.is_empty() {
            let v = cands
                .ones()
                .max_by_key(|&v| cands.intersect(g.nbr(v)).count())
                .expect("nonempty");
            clique.push(v);
            cands = cands.intersect(g.nbr(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Exact maximum clique (Tomita-style branch and bound with a greedy
/// coloring bound). Returns the best clique found and whether the search
/// completed within the stop callback.
pub fn max_clique(g: &Graph, stop: &mut dyn FnMut() -> bool) -> (Vec<usize>, bool) {
    max_clique_within(g, &Bits::full(g.n()), stop)
}

/// Maximum clique restricted to the induced subgraph on `allowed`.
fn max_clique_within(
    g: &Graph,
    allowed: &Bits,
    stop: &mut dyn FnMut() -> bool,
) -> (Vec<usize>, bool) {
    let mut best = greedy_clique_within(g, allowed);
    let mut aborted = false;
    let mut nodes: u64 = 0;
    let mut r = Vec::new();
    expand_clique(g, &mut r, allowed, &mut best, stop, &mut aborted, &mut nodes);
    (best, !aborted)
}

/// Proper coloring built by repeatedly extracting an exact maximum
/// independent set. When the graph partitions into maximum independent
/// sets this reaches the chromatic number directly.
fn extraction_coloring(g: &Graph, stop: &mut dyn FnMut() -> bool) -> Option<Vec<u32>> {
    let comp = g.complement();
    let mut remaining = Bits::full(g.n());
    let mut coloring = alloc::vec![0u32; g.n()];
    let mut color = 0u32;
    while !remaining.is_empty() {
        let (set, complete) = max_clique_within(&comp, &remaining, stop);
        if !complete || set.is_empty() {
            return None;
        }
        for v in set {
            coloring[v] = color;
            remaining.remove(v);
        }
        color += 1;
    }
    Some(coloring)
}

/// Greedy coloring of the candidate set; returns vertices ordered by
/// nondecreasing color together with their 1-based colors.
fn color_order(g: &Graph, p: &Bits) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut remaining = p.clone();
    let mut color = 0usize;
    while !remaining.is_empty() {
        color += 1;
        let mut class_cands = remaining.clone();
        loop {
            let v = match class_cands.ones().next() {
                Some(v) => v,
                None => break,
            };
            order.push(v);
            colors.push(color);
            remaining.remove(v);
            class_cands.remove(v);
            for w in g.nbr(v).ones() {
                class_cands.remove(w);
            }
        }
    }
    (order, colors)
}

fn expand_clique(
    g: &Graph,
    r: &mut Vec<usize>,
    p: &Bits,
    best: &mut Vec<usize>,
    stop: &mut dyn FnMut() -> bool,
    aborted: &mut bool,
    nodes: &mut u64,
) {
    if *aborted {
        return;
    }
    *nodes += 1;
    if *nodes % 1024 == 0 && stop() {
        *aborted = true;
        return;
    }
    let (order, colors) = color_order(g, p);
    let mut local = p.clone();
    for i in (0..order.len()).rev() {
        let v = order[i];
        if r.len() + colors[i] <= best.len() {
            return;
        }
        r.push(v);
        let p2 = local.intersect(g.nbr(v));
        if p2.is_empty() {
            if r.len() > best.len() {
                *best = r.clone();
            }
        } else {
            expand_clique(g, r, &p2, best, stop, aborted, nodes);
        }
        r.pop();
        local.remove(v);
    }
}

/// DSATUR greedy upper bound; ties broken by lowest vertex index.
fn dsatur_greedy(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut coloring: Vec<Option<u32>> = alloc::vec![None; n];
    let mut neighbor_colors: Vec<u64> = alloc::vec![0u64; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| coloring[v].is_none())
            .max_by(|&a, &b| {
                let sat = neighbor_colors[a]
                    .count_ones()
                    .cmp(&neighbor_colors[b].count_ones());
                sat.then(g.degree(a).cmp(&g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("uncolored vertex");
        let c = (0..64).find(|&c| neighbor_colors[v] >> c & 1 == 0).unwrap() as u32;
        coloring[v] = Some(c);
        for w in g.nbr(v).ones() {
            neighbor_colors[w] |= 1 << c;
        }
    }
    coloring.into_iter().map(Option::unwrap).collect()
}

enum KColoring {
    Found(Vec<u32>),
    Infeasible,
    Timeout,
}

/// Maximal cliques of `h` that contain `v` and stay within `mask`, by
/// Bron-Kerbosch with pivoting. `None` when more than `cap` are found.
fn maximal_cliques_with(h: &Graph, mask: &Bits, v: usize, cap: usize) -> Option<Vec<Vec<usize>>> {
    fn bk(
        h: &Graph,
        r: &mut Vec<usize>,
        mut p: Bits,
        mut x: Bits,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Option<()> {
        if p.is_empty() && x.is_empty() {
            if out.len() >= cap {
                return None;
            }
            out.push(r.clone());
            return Some(());
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| p.intersect(h.nbr(u)).count())
            .expect("p or x nonempty");
        let branch: Vec<usize> = p.minus(h.nbr(pivot)).ones().collect();
        for u in branch {
            r.push(u);
            bk(
                h,
                r,
                p.intersect(h.nbr(u)),
                x.intersect(h.nbr(u)),
                out,
                cap,
            )?;
            r.pop();
            p.remove(u);
            x.set(u);
        }
        Some(())
    }
    let mut out = Vec::new();
    let mut r = alloc::vec![v];
    let p = mask.intersect(h.nbr(v));
    let x = Bits::new(h.n());
    bk(h, &mut r, p, x, &mut out, cap)?;
    Some(out)
}

/// Exact `k`-colorability by partitioning into independent classes: branch
/// over maximal independent sets containing the lowest uncovered vertex,
/// pruning when the remaining vertices cannot fit in the remaining classes.
/// Strong precisely in the tight regime `k * alpha` close to `n`, where
/// DSATUR branching drowns; `alpha` must be the exact independence number.
fn partition_coloring(
    g: &Graph,
    k: usize,
    alpha: usize,
    stop: &mut dyn FnMut() -> bool,
) -> KColoring {
    let n = g.n();
    let comp = g.complement();
    let mut coloring = alloc::vec![u32::MAX; n];
    let mut nodes: u64 = 0;
    let mut aborted = false;
    fn rec(
        comp: &Graph,
        remaining: &Bits,
        used: usize,
        k: usize,
        alpha: usize,
        coloring: &mut Vec<u32>,
        stop: &mut dyn FnMut() -> bool,
        nodes: &mut u64,
        aborted: &mut bool,
    ) -> bool {
        *nodes += 1;
        if *nodes % 256 == 0 && stop() {
            *aborted = true;
            return false;
        }
        let count = remaining.count();
        if count == 0 {
            return true;
        }
        if used == k || count > (k - used) * alpha {
            return false;
        }
        let v = remaining.ones().next().expect("nonempty");
        let Some(classes) = maximal_cliques_with(comp, remaining, v, 200_000) else {
            *aborted = true;
            return false;
        };
        for class in classes {
            let mut next = remaining.clone();
            for &u in &class {
                coloring[u] = used as u32;
                next.remove(u);
            }
            if rec(comp, &next, used + 1, k, alpha, coloring, stop, nodes, aborted) {
                return true;
            }
            if *aborted {
                return false;
            }
        }
        false
    }
    let found = rec(
        &comp,
        &Bits::full(n),
        0,
        k,
        alpha,
        &mut coloring,
        stop,
        &mut nodes,
        &mut aborted,
    );
    if found {
        KColoring::Found(coloring)
    } else if aborted {
        KColoring::Timeout
    } else {
        KColoring::Infeasible
    }
}

/// Branch and bound for `k`-colorability. A maximum clique is pre-colored to
/// break color symmetry; branching follows DSATUR with lowest-index ties.
fn k_coloring(
    g: &Graph,
    k: usize,
    clique: &[usize],
    stop: &mut dyn FnMut() -> bool,
) -> KColoring {
    if k > 64 {
        // witnesses this wide never occur here; DSATUR would have found one
        return KColoring::Timeout;
    }
    if clique.len() > k {
        return KColoring::Infeasible;
    }
    let n = g.n();
    if k == 0 {
        return if n == 0 {
            KColoring::Found(Vec::new())
        } else {
            KColoring::Infeasible
        };
    }
    let mut coloring: Vec<Option<u32>> = alloc::vec![None; n];
    let mut neighbor_colors: Vec<u64> = alloc::vec![0u64; n];
    for (c, &v) in clique.iter().enumerate() {
        coloring[v] = Some(c as u32);
        for w in g.nbr(v).ones() {
            neighbor_colors[w] |= 1 << c;
        }
    }
    let mut max_used = clique.len().max(1) as u32;
    let mut nodes: u64 = 0;
    let mut aborted = false;
    fn dfs(
        g: &Graph,
        k: usize,
        coloring: &mut Vec<Option<u32>>,
        neighbor_colors: &mut Vec<u64>,
        max_used: &mut u32,
        stop: &mut dyn FnMut() -> bool,
        nodes: &mut u64,
        aborted: &mut bool,
    ) -> bool {
        *nodes += 1;
        if *nodes % 1024 == 0 && stop() {
            *aborted = true;
            return false;
        }
        let full = (1u64 << k) - 1;
        // DSATUR choice: max saturation, then max degree, then lowest index
        let mut pick: Option<(usize, u32)> = None;
        for v in 0..g.n() {
            if coloring[v].is_some() {
                continue;
            }
            let sat = (neighbor_colors[v] & full).count_ones();
            let better = match pick {
                None => true,
                Some((u, usat)) => {
                    sat > usat
                        || (sat == usat && g.degree(v) > g.degree(u))
                }
            };
            if better {
                pick = Some((v, sat));
            }
        }
        let Some((v, sat)) = pick else {
            return true; // all colored
        };
        if sat as usize >= k {
            return false;
        }
        let limit = (*max_used + 1).min(k as u32);
        for c in 0..limit {
            if neighbor_colors[v] >> c & 1 == 1 {
                continue;
            }
            coloring[v] = Some(c);
            let was_max = *max_used;
            if c + 1 > *max_used {
                *max_used = c + 1;
            }
            let mut touched = Vec::new();
            for w in g.nbr(v).ones() {
                if neighbor_colors[w] >> c & 1 == 0 {
                    neighbor_colors[w] |= 1 << c;
                    touched.push(w);
                }
            }
            if dfs(g, k, coloring, neighbor_colors, max_used, stop, nodes, aborted) {
                return true;
            }
            for w in touched {
                neighbor_colors[w] &= !(1 << c);
            }
            coloring[v] = None;
            *max_used = was_max;
            if *aborted {
                return false;
            }
        }
        false
    }
    let found = dfs(
        g,
        k,
        &mut coloring,
        &mut neighbor_colors,
        &mut max_used,
        stop,
        &mut nodes,
        &mut aborted,
    );
    if found {
        KColoring::Found(coloring.into_iter().map(Option::unwrap).collect())
    } else if aborted {
        KColoring::Timeout
    } else {
        KColoring::Infeasible
    }
}

/// Exact chromatic number. `stop` is polled during the search; when it fires
/// the result carries certified bounds instead of an exact value. Exactness
/// means a proper witness with `upper_bound` colors together with an
/// exhausted search refuting `upper_bound - 1`.
pub fn chromatic_number(g: &Graph, stop: &mut dyn FnMut() -> bool) -> ColoringResult {
    let n = g.n();
    if n == 0 {
        return ColoringResult {
            lower_bound: 0,
            upper_bound: 0,
            witness: Vec::new(),
            exact: true,
        };
    }
    if g.edge_count() == 0 {
        return ColoringResult {
            lower_bound: 1,
            upper_bound: 1,
            witness: alloc::vec![0; n],
            exact: true,
        };
    }
    let (clique, clique_exact) = max_clique(g, stop);
    let mut lower = clique.len();
    let (indep, indep_exact) = max_clique(&g.complement(), stop);
    if indep_exact {
        // chi >= n / alpha needs the true independence number
        lower = lower.max(n.div_ceil(indep.len()));
    }
    let mut witness = dsatur_greedy(g);
    let mut upper = witness.iter().max().map_or(0, |&c| c as usize + 1);
    debug_assert!(is_proper_coloring(g, &witness));
    if let Some(extracted) = extraction_coloring(g, stop) {
        let colors = extracted.iter().max().map_or(0, |&c| c as usize + 1);
        if colors < upper {
            debug_assert!(is_proper_coloring(g, &extracted));
            witness = extracted;
            upper = colors;
        }
    }
    let exact = loop {
        if upper == 1 {
            break true;
        }
        if upper == lower && clique_exact && indep_exact {
            // the witness meets a lower bound certified by exhausted clique
            // and independent-set searches; no refutation run is needed
            break true;
        }
        let k = upper - 1;
        let outcome = if indep_exact {
            let alpha = indep.len();
            if k * alpha < n {
                // counting certificate: k classes of at most alpha vertices
                // cannot cover the graph
                KColoring::Infeasible
            } else if k * alpha < n + alpha {
                partition_coloring(g, k, alpha, stop)
            } else {
                k_coloring(g, k, &clique, stop)
            }
        } else {
            k_coloring(g, k, &clique, stop)
        };
        match outcome {
            KColoring::Found(w) => {
                debug_assert!(is_proper_coloring(g, &w));
                witness = w;
                upper -= 1;
            }
            KColoring::Infeasible => {
                lower = upper;
                break true;
            }
            KColoring::Timeout => break false,
        }
    };
    ColoringResult {
        lower_bound: lower.min(upper),
        upper_bound: upper,
        witness,
        exact,
    }
}

/// Convenience wrapper without a time limit.
pub fn chromatic_number_unbounded(g: &Graph) -> ColoringResult {
    chromatic_number(g, &mut || false)
}
