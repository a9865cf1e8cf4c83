//! Exhaustive checks that the maps are injections into the claimed stars.

use std::collections::HashMap;

use serde::Serialize;

use super::ladder::ladder_of;
use super::maps::{
    flip_on_leg_unchecked, flip_on_path_unchecked, map_best_leaf_unchecked, MapCase,
};
use crate::enumeration::enum_indep_sets;
use crate::error::{CountError, InjectionError};
use crate::spider::Spider;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    NotIndependent,
    WrongSize,
    MissingTargetVertex,
    Collision,
    /// The set did not land in exactly one case of the leaf-to-leaf map.
    CaseTotality,
    /// Head membership changed (identity/slide) or survived (shift/flip).
    HeadParity,
    /// The map itself returned an error.
    MapFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub input: VertexSet,
    pub kind: ViolationKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CaseCounts {
    pub identity: usize,
    pub partial_ladder: usize,
    pub full_ladder: usize,
}

/// Outcome of running one map over its whole domain star.
///
/// For theorem 1, `i` is the leg and `j` the starting height. For theorem 2,
/// `i` is the leg and `j` is absent. For theorem 3, `i < j` are legs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionReport {
    pub theorem: u8,
    pub spider: String,
    pub t: usize,
    pub i: usize,
    pub j: Option<usize>,
    pub domain_size: usize,
    pub image_size: usize,
    pub target_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<CaseCounts>,
    pub violations: Vec<Violation>,
}

impl InjectionReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty() && self.image_size == self.domain_size
    }
}

struct Run<'a> {
    spider: &'a Spider,
    t: usize,
    target: usize,
    images: HashMap<VertexSet, VertexSet>,
    violations: Vec<Violation>,
    domain_size: usize,
}

impl<'a> Run<'a> {
    fn new(spider: &'a Spider, t: usize, target: usize) -> Self {
        Self {
            spider,
            t,
            target,
            images: HashMap::new(),
            violations: Vec::new(),
            domain_size: 0,
        }
    }

    fn flag(&mut self, input: &VertexSet, kind: ViolationKind, detail: Option<String>) {
        self.violations.push(Violation {
            input: input.clone(),
            kind,
            detail,
        });
    }

    fn record(
        &mut self,
        input: &VertexSet,
        image: Result<VertexSet, InjectionError>,
    ) -> Option<VertexSet> {
        self.domain_size += 1;
        let image = match image {
            Ok(image) => image,
            Err(e) => {
                self.flag(input, ViolationKind::MapFailed, Some(e.to_string()));
                return None;
            }
        };
        if !self.spider.tree().is_independent(&image) {
            self.flag(
                input,
                ViolationKind::NotIndependent,
                Some(image.to_string()),
            );
        }
        if image.len() != self.t {
            self.flag(input, ViolationKind::WrongSize, Some(image.to_string()));
        }
        if !image.contains(self.target) {
            self.flag(
                input,
                ViolationKind::MissingTargetVertex,
                Some(image.to_string()),
            );
        }
        if let Some(prev) = self.images.get(&image) {
            let detail = format!("{image} is also the image of {prev}");
            self.flag(input, ViolationKind::Collision, Some(detail));
        } else {
            self.images.insert(image.clone(), input.clone());
        }
        Some(image)
    }

    fn finish(
        self,
        theorem: u8,
        i: usize,
        j: Option<usize>,
        family: &[VertexSet],
        cases: Option<CaseCounts>,
    ) -> InjectionReport {
        let target = self.target;
        InjectionReport {
            theorem,
            spider: self.spider.descriptor(),
            t: self.t,
            i,
            j,
            domain_size: self.domain_size,
            image_size: self.images.len(),
            target_size: family.iter().filter(|s| s.contains(target)).count(),
            cases,
            violations: self.violations,
        }
    }
}

fn family(spider: &Spider, t: usize) -> Result<Vec<VertexSet>, CountError> {
    enum_indep_sets(spider.tree(), t)
}

/// Runs the path flip from every `v_{i,j}` (`1 <= j < l_i`) to the leaf of
/// leg `i`, one report per `(i, j)`.
pub fn verify_theorem_1(spider: &Spider, t: usize) -> Result<Vec<InjectionReport>, InjectionError> {
    let family = family(spider, t)?;
    let mut reports = Vec::new();
    for leg in 1..=spider.k() {
        for start in 1..spider.leg_len(leg) {
            let source = spider.v(leg, start);
            let mut run = Run::new(spider, t, spider.leaf(leg));
            for a in family.iter().filter(|a| a.contains(source)) {
                run.record(a, flip_on_path_unchecked(a, spider, leg, start));
            }
            reports.push(run.finish(1, leg, Some(start), &family, None));
        }
    }
    Ok(reports)
}

/// Runs the leg flip from the head star to the star at each leaf.
pub fn verify_theorem_2(spider: &Spider, t: usize) -> Result<Vec<InjectionReport>, InjectionError> {
    let family = family(spider, t)?;
    let mut reports = Vec::new();
    for leg in 1..=spider.k() {
        let mut run = Run::new(spider, t, spider.leaf(leg));
        for a in family.iter().filter(|a| a.contains(Spider::HEAD)) {
            run.record(a, flip_on_leg_unchecked(a, spider, leg));
        }
        reports.push(run.finish(2, leg, None, &family, None));
    }
    Ok(reports)
}

/// Runs the leaf-to-leaf map for every pair of legs `i < j`. The spider's
/// legs must already be in spider order.
pub fn verify_theorem_3(spider: &Spider, t: usize) -> Result<Vec<InjectionReport>, InjectionError> {
    if !spider.is_spider_ordered() {
        return Err(InjectionError::NotSpiderOrdered(spider.legs().to_vec()));
    }
    let family = family(spider, t)?;
    let mut reports = Vec::new();
    for i in 1..=spider.k() {
        for j in i + 1..=spider.k() {
            let source = spider.leaf(j);
            let target = spider.leaf(i);
            let mut run = Run::new(spider, t, target);
            let mut cases = CaseCounts::default();
            for a in family.iter().filter(|a| a.contains(source)) {
                let mapped = map_best_leaf_unchecked(a, spider, i, j);
                let case = mapped.as_ref().ok().map(|(_, c)| *c);
                let Some(image) = run.record(a, mapped.map(|(img, _)| img)) else {
                    continue;
                };
                let case = case.expect("image implies a case");
                match case {
                    MapCase::Identity => cases.identity += 1,
                    MapCase::PartialLadder => cases.partial_ladder += 1,
                    MapCase::FullLadder => cases.full_ladder += 1,
                }

                // Classify again from the definitions and compare.
                let identity = a.contains(target);
                let (partial, full) = match ladder_of(a, spider, i, j) {
                    Ok(l) => (
                        !identity && l.first_nonfull.is_some(),
                        !identity && l.is_full,
                    ),
                    Err(_) => (false, false),
                };
                let hits = [identity, partial, full];
                let expected = match case {
                    MapCase::Identity => [true, false, false],
                    MapCase::PartialLadder => [false, true, false],
                    MapCase::FullLadder => [false, false, true],
                };
                if hits != expected {
                    run.flag(
                        a,
                        ViolationKind::CaseTotality,
                        Some(format!("{case:?} vs {hits:?}")),
                    );
                }

                let head_before = a.contains(Spider::HEAD);
                let head_after = image.contains(Spider::HEAD);
                let parity_ok = match case {
                    MapCase::Identity | MapCase::PartialLadder => head_before == head_after,
                    MapCase::FullLadder => head_before && !head_after,
                };
                if !parity_ok {
                    run.flag(
                        a,
                        ViolationKind::HeadParity,
                        Some(format!("{case:?} -> {image}")),
                    );
                }
            }
            reports.push(run.finish(3, i, Some(j), &family, Some(cases)));
        }
    }
    Ok(reports)
}
