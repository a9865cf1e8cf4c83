//! Brute-force ground truth for EKR statements on trees.
//!
//! The largest intersecting subfamily of `I^t` is a maximum clique of the
//! intersection graph (sets as vertices, an edge when two sets meet), so
//! verdicts here are exact or they fail with a budget error.

mod clique;

use serde::Serialize;

use crate::enumeration::{alpha, enum_indep_sets, mu, star_sizes};
use crate::error::EkrError;
use crate::graph::Tree;
use crate::vertex_set::VertexSet;
use clique::{max_clique, BitGraph};

/// Limits on the clique search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest family the search accepts.
    pub max_family: usize,
    /// Largest number of search nodes expanded.
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_family: 5000,
            max_nodes: 10_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectingFamily {
    pub size: usize,
    /// Lexicographically least maximum subfamily, in set order.
    pub witness: Vec<VertexSet>,
}

/// Largest pairwise-intersecting subfamily of `family`.
pub fn max_intersecting_family(
    family: &[VertexSet],
    budget: &Budget,
) -> Result<IntersectingFamily, EkrError> {
    if family.len() > budget.max_family {
        return Err(EkrError::BudgetExceeded(format!(
            "family of {} sets exceeds limit {}",
            family.len(),
            budget.max_family
        )));
    }
    let mut sets = family.to_vec();
    sets.sort();
    sets.dedup();
    let graph = BitGraph::new(sets.len(), |a, b| sets[a].intersects(&sets[b]));
    let clique = max_clique(&graph, budget.max_nodes)?;
    let witness: Vec<VertexSet> = clique.into_iter().map(|k| sets[k].clone()).collect();
    for (k, a) in witness.iter().enumerate() {
        for b in &witness[k + 1..] {
            assert!(a.intersects(b), "witness sets {a} and {b} are disjoint");
        }
    }
    Ok(IntersectingFamily {
        size: witness.len(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EkrVerdict {
    pub t: usize,
    pub mu: usize,
    pub alpha: usize,
    pub max_intersecting: usize,
    pub witness: Vec<VertexSet>,
    pub max_star: u64,
    pub argmax_vertices: Vec<usize>,
    pub is_t_ekr: bool,
    /// `t <= floor(mu / 2)`.
    pub in_conjecture_range: bool,
}

impl EkrVerdict {
    /// A failed verdict inside the conjectured range.
    pub fn is_reportable(&self) -> bool {
        self.in_conjecture_range && !self.is_t_ekr
    }
}

fn check_size(tree: &Tree, t: usize) -> Result<usize, EkrError> {
    let a = alpha(tree);
    if t == 0 || t > a {
        return Err(EkrError::SizeOutOfRange { t, alpha: a });
    }
    Ok(a)
}

/// Whether every intersecting subfamily of `I^t(tree)` is at most as large
/// as the largest star.
pub fn is_t_ekr(tree: &Tree, t: usize, budget: &Budget) -> Result<EkrVerdict, EkrError> {
    let alpha = check_size(tree, t)?;
    let mu = mu(tree);
    let family = enum_indep_sets(tree, t)?;
    let best = max_intersecting_family(&family, budget)?;
    let stars = star_sizes(tree, t)?;
    let max_star = stars.max();
    // A star is intersecting, so the search can never come in below it.
    assert!(
        best.size as u64 >= max_star,
        "intersecting family {} below star {max_star}",
        best.size
    );
    Ok(EkrVerdict {
        t,
        mu,
        alpha,
        max_intersecting: best.size,
        witness: best.witness,
        max_star,
        argmax_vertices: stars.argmax(),
        is_t_ekr: best.size as u64 <= max_star,
        in_conjecture_range: 2 * t <= mu,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanEntry {
    pub t: usize,
    pub outcome: Result<EkrVerdict, EkrError>,
}

/// Verdicts for every `1 <= t <= floor(mu / 2)`. Budget failures are kept
/// per entry.
pub fn holroyd_talbot_scan(tree: &Tree, budget: &Budget) -> Vec<ScanEntry> {
    (1..=mu(tree) / 2)
        .map(|t| ScanEntry {
            t,
            outcome: is_t_ekr(tree, t, budget),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BestCenter {
    pub argmax_vertices: Vec<usize>,
    pub any_leaf: bool,
}

/// Centres of the largest `t`-stars and whether a leaf is among them.
pub fn best_center_report(tree: &Tree, t: usize) -> Result<BestCenter, EkrError> {
    check_size(tree, t)?;
    let argmax = star_sizes(tree, t)?.argmax();
    Ok(BestCenter {
        any_leaf: argmax.iter().any(|&v| tree.is_leaf(v)),
        argmax_vertices: argmax,
    })
}
