//! Enumeration and counting of size-`t` independent sets.
//!
//! [`enum_indep_sets`] lists the family explicitly and is meant for desk
//! scale. [`star_sizes`] counts the star at every vertex with a size-indexed
//! tree DP and never materialises the family.

use serde::Serialize;

use crate::error::CountError;
use crate::graph::Tree;
use crate::vertex_set::VertexSet;

/// All independent sets of size `t`, in lexicographic order.
///
/// Empty when `t` exceeds the independence number.
pub fn enum_indep_sets(tree: &Tree, t: usize) -> Result<Vec<VertexSet>, CountError> {
    if t == 0 {
        return Err(CountError::ZeroSize);
    }
    let n = tree.n();
    let mut out = Vec::new();
    if t > n {
        return Ok(out);
    }
    let mut chosen = VertexSet::empty(n);
    let mut blocked = vec![0u32; n];
    extend(tree, t, 0, &mut chosen, &mut blocked, &mut out);
    Ok(out)
}

fn extend(
    tree: &Tree,
    remaining: usize,
    start: usize,
    chosen: &mut VertexSet,
    blocked: &mut [u32],
    out: &mut Vec<VertexSet>,
) {
    if remaining == 0 {
        out.push(chosen.clone());
        return;
    }
    let n = tree.n();
    for v in start..=n - remaining {
        if blocked[v] > 0 {
            continue;
        }
        chosen.insert(v);
        for &u in tree.neighbors(v) {
            blocked[u] += 1;
        }
        extend(tree, remaining - 1, v + 1, chosen, blocked, out);
        for &u in tree.neighbors(v) {
            blocked[u] -= 1;
        }
        chosen.remove(v);
    }
}

/// Star sizes `|I^t_x|` for every vertex `x`, plus the family size `|I^t|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarTable {
    pub t: usize,
    pub total: u64,
    pub counts: Vec<u64>,
}

impl StarTable {
    pub fn max(&self) -> u64 {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Vertices whose star is largest, ascending.
    pub fn argmax(&self) -> Vec<usize> {
        let best = self.max();
        (0..self.counts.len())
            .filter(|&v| self.counts[v] == best)
            .collect()
    }
}

/// Truncated generating polynomial: coefficient `s` counts sets of size `s`.
type Poly = Vec<u64>;

fn poly_mul(a: &[u64], b: &[u64], cap: usize) -> Option<Poly> {
    let len = (a.len() + b.len() - 1).min(cap + 1);
    let mut out = vec![0u64; len];
    for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &y) in b.iter().enumerate().take(len.saturating_sub(i)) {
            out[i + j] = out[i + j].checked_add(x.checked_mul(y)?)?;
        }
    }
    Some(out)
}

fn poly_add(a: &[u64], b: &[u64]) -> Option<Poly> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = o.checked_add(s)?;
    }
    Some(out)
}

/// Rooted at `root`: generating polynomials of the independent sets that
/// contain the root and of those that avoid it, truncated at degree `cap`.
fn rooted_polys(tree: &Tree, root: usize, cap: usize) -> Option<(Poly, Poly)> {
    let (order, parent) = tree.rooted(root);
    let n = tree.n();
    let mut with = vec![Poly::new(); n];
    let mut without = vec![Poly::new(); n];
    for &v in order.iter().rev() {
        let mut inc: Poly = vec![0, 1];
        inc.truncate(cap + 1);
        let mut exc: Poly = vec![1];
        for &c in tree.neighbors(v).iter().filter(|&&c| c != parent[v]) {
            inc = poly_mul(&inc, &without[c], cap)?;
            let either = poly_add(&with[c], &without[c])?;
            exc = poly_mul(&exc, &either, cap)?;
            with[c] = Poly::new();
            without[c] = Poly::new();
        }
        with[v] = inc;
        without[v] = exc;
    }
    Some((
        std::mem::take(&mut with[root]),
        std::mem::take(&mut without[root]),
    ))
}

/// Counts, for every vertex, the independent `t`-sets that contain it.
///
/// The DP is rooted at each vertex in turn with that vertex forced in. Any
/// `t` above the independence number gives an all-zero table.
pub fn star_sizes(tree: &Tree, t: usize) -> Result<StarTable, CountError> {
    if t == 0 {
        return Err(CountError::ZeroSize);
    }
    let mut counts = Vec::with_capacity(tree.n());
    let mut total = 0;
    for x in 0..tree.n() {
        let (inc, exc) = rooted_polys(tree, x, t).ok_or(CountError::Overflow { t, vertex: x })?;
        counts.push(inc.get(t).copied().unwrap_or(0));
        if x == 0 {
            let all = poly_add(&inc, &exc).ok_or(CountError::Overflow { t, vertex: x })?;
            total = all.get(t).copied().unwrap_or(0);
        }
    }
    Ok(StarTable { t, total, counts })
}

/// Independence number via the two-state tree DP.
pub fn alpha(tree: &Tree) -> usize {
    let (order, parent) = tree.rooted(0);
    let n = tree.n();
    let mut with = vec![0usize; n];
    let mut without = vec![0usize; n];
    for &v in order.iter().rev() {
        with[v] = 1;
        for &c in tree.neighbors(v).iter().filter(|&&c| c != parent[v]) {
            with[v] += without[c];
            without[v] += with[c].max(without[c]);
        }
    }
    with[0].max(without[0])
}

/// Size of the smallest inclusion-maximal independent set, i.e. the
/// independent domination number, via a three-state tree DP.
pub fn mu(tree: &Tree) -> usize {
    const INF: usize = usize::MAX / 4;
    let (order, parent) = tree.rooted(0);
    let n = tree.n();
    // in_set: v chosen. covered: v not chosen, some child chosen.
    // open: v not chosen, no child chosen; the parent must be chosen.
    let mut in_set = vec![0usize; n];
    let mut covered = vec![0usize; n];
    let mut open = vec![0usize; n];
    for &v in order.iter().rev() {
        let mut inc = 1usize;
        let mut free = 0usize;
        let mut best_switch = INF;
        let mut all_covered = 0usize;
        for &c in tree.neighbors(v).iter().filter(|&&c| c != parent[v]) {
            inc = inc.saturating_add(covered[c].min(open[c]));
            let cheap = in_set[c].min(covered[c]);
            free = free.saturating_add(cheap);
            best_switch = best_switch.min(in_set[c] - cheap);
            all_covered = all_covered.saturating_add(covered[c]);
        }
        in_set[v] = inc.min(INF);
        covered[v] = free.saturating_add(best_switch).min(INF);
        open[v] = all_covered.min(INF);
    }
    in_set[0].min(covered[0])
}
