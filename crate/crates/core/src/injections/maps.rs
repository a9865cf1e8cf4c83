//! The flip, slide and shift maps that move a star onto a leaf star.

use serde::Serialize;

use super::ladder::{check_independent, check_leg, ladder_of};
use crate::error::InjectionError;
use crate::spider::{may_precede, Spider};
use crate::vertex_set::VertexSet;

/// Mirror of `a ∩ path` across `path`: `path[m-1-p]` is in the result iff
/// `path[p]` is in `a`. Vertices of `a` off the path are dropped.
pub fn flip(a: &VertexSet, path: &[usize]) -> VertexSet {
    let m = path.len();
    VertexSet::from_ids(
        a.width(),
        path.iter()
            .enumerate()
            .filter(|(_, &v)| a.contains(v))
            .map(|(p, _)| path[m - 1 - p]),
    )
}

/// Translation of `a ∩ path` by `steps` positions toward the end of
/// `path`, or `None` if some member would fall off the end.
pub fn translate(a: &VertexSet, path: &[usize], steps: usize) -> Option<VertexSet> {
    let mut out = VertexSet::empty(a.width());
    for (p, &v) in path.iter().enumerate() {
        if a.contains(v) {
            out.insert(*path.get(p + steps)?);
        }
    }
    Some(out)
}

/// Translation of `a ∩ path` toward the end of `path` by exactly the
/// distance needed for the last vertex of `path` to be occupied.
pub fn slide(a: &VertexSet, path: &[usize]) -> Option<VertexSet> {
    let last_hit = path.iter().rposition(|&v| a.contains(v))?;
    translate(a, path, path.len() - 1 - last_hit)
}

/// One-step translation of `a ∩ path` toward the end of `path`.
pub fn shift(a: &VertexSet, path: &[usize]) -> Option<VertexSet> {
    translate(a, path, 1)
}

fn path_set(width: usize, path: &[usize]) -> VertexSet {
    VertexSet::from_ids(width, path.iter().copied())
}

/// `v_{leg,from}, …, v_{leg,to}` in that order; height 0 is the head.
fn leg_run(spider: &Spider, leg: usize, from: usize, to: usize) -> Vec<usize> {
    if from <= to {
        (from..=to).map(|h| spider.v(leg, h)).collect()
    } else {
        (to..=from).rev().map(|h| spider.v(leg, h)).collect()
    }
}

pub(crate) fn check_image(
    spider: &Spider,
    a: &VertexSet,
    image: &VertexSet,
    target: usize,
) -> Result<(), InjectionError> {
    if !spider.tree().is_independent(image) {
        return Err(InjectionError::Assertion(format!(
            "image {image} of {a} is not independent"
        )));
    }
    if image.len() != a.len() {
        return Err(InjectionError::Assertion(format!(
            "image {image} of {a} changed size"
        )));
    }
    if !image.contains(target) {
        return Err(InjectionError::Assertion(format!(
            "image {image} of {a} misses target vertex {target}"
        )));
    }
    Ok(())
}

pub(crate) fn flip_on_path_unchecked(
    a: &VertexSet,
    spider: &Spider,
    leg: usize,
    start: usize,
) -> Result<VertexSet, InjectionError> {
    check_leg(spider, leg)?;
    let len = spider.leg_len(leg);
    if start == 0 || start >= len {
        return Err(InjectionError::Contract(format!(
            "start height {start} outside 1..{len} on leg {leg}"
        )));
    }
    check_independent(spider, a)?;
    if !a.contains(spider.v(leg, start)) {
        return Err(InjectionError::Contract(format!(
            "{a} does not contain v_({leg},{start})"
        )));
    }
    let path = leg_run(spider, leg, start, len);
    let rest = a.difference(&path_set(a.width(), &path));
    Ok(flip(a, &path).union(&rest))
}

/// Mirrors `a` on the path `v_{leg,start}, …, v_{leg,l_leg}`, keeping the
/// rest of `a` in place. Maps the star at `v_{leg,start}` into the star at
/// the leaf of `leg`.
pub fn flip_on_path(
    a: &VertexSet,
    spider: &Spider,
    leg: usize,
    start: usize,
) -> Result<VertexSet, InjectionError> {
    let image = flip_on_path_unchecked(a, spider, leg, start)?;
    check_image(spider, a, &image, spider.leaf(leg))?;
    Ok(image)
}

pub(crate) fn flip_on_leg_unchecked(
    a: &VertexSet,
    spider: &Spider,
    leg: usize,
) -> Result<VertexSet, InjectionError> {
    check_leg(spider, leg)?;
    check_independent(spider, a)?;
    if !a.contains(Spider::HEAD) {
        return Err(InjectionError::Contract(format!(
            "{a} does not contain the head"
        )));
    }
    if a.contains(spider.leaf(leg)) {
        return Ok(a.clone());
    }
    let path = leg_run(spider, leg, 0, spider.leg_len(leg));
    let rest = a.difference(&path_set(a.width(), &path));
    Ok(flip(a, &path).union(&rest))
}

/// Maps the head star into the star at the leaf of `leg`: the identity on
/// sets already holding that leaf, otherwise a mirror across the whole leg
/// including the head.
pub fn flip_on_leg(
    a: &VertexSet,
    spider: &Spider,
    leg: usize,
) -> Result<VertexSet, InjectionError> {
    let image = flip_on_leg_unchecked(a, spider, leg)?;
    check_image(spider, a, &image, spider.leaf(leg))?;
    Ok(image)
}

/// Which branch of the leaf-to-leaf map handled a set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapCase {
    Identity,
    PartialLadder,
    FullLadder,
}

pub(crate) fn map_best_leaf_unchecked(
    a: &VertexSet,
    spider: &Spider,
    i: usize,
    j: usize,
) -> Result<(VertexSet, MapCase), InjectionError> {
    check_leg(spider, i)?;
    check_leg(spider, j)?;
    if i >= j {
        return Err(InjectionError::Contract(format!(
            "legs must satisfy i < j, got {i}, {j}"
        )));
    }
    let (li, lj) = (spider.leg_len(i), spider.leg_len(j));
    if !may_precede(li, lj) {
        return Err(InjectionError::Contract(format!(
            "legs {i} (length {li}) and {j} (length {lj}) are not in spider order"
        )));
    }
    check_independent(spider, a)?;
    if !a.contains(spider.leaf(j)) {
        return Err(InjectionError::Contract(format!(
            "{a} does not contain the leaf of leg {j}"
        )));
    }
    if a.contains(spider.leaf(i)) {
        return Ok((a.clone(), MapCase::Identity));
    }

    let width = a.width();
    let head_in = a.contains(Spider::HEAD);
    let both_legs = path_set(
        width,
        &[leg_run(spider, i, 1, li), leg_run(spider, j, 1, lj)].concat(),
    );
    let mut rest = a.difference(&both_legs);
    rest.remove(Spider::HEAD);
    let ladder = ladder_of(a, spider, i, j)?;

    if let Some(r) = ladder.first_nonfull {
        let h = r.height;
        let path = [leg_run(spider, j, lj, h), leg_run(spider, i, h, li)].concat();
        let on_path = a.intersection(&path_set(width, &path));
        let rungs = ladder.partial_vertices(width);
        let mut head = VertexSet::empty(width);
        if head_in {
            head.insert(Spider::HEAD);
        }
        // A must split exactly into partial ladder, path trace, T and head.
        let parts = [&rungs, &on_path, &rest, &head];
        let rebuilt = parts
            .iter()
            .fold(VertexSet::empty(width), |acc, p| acc.union(p));
        if rebuilt != *a || parts.iter().map(|p| p.len()).sum::<usize>() != a.len() {
            return Err(InjectionError::Assertion(format!(
                "{a} does not decompose along the partial ladder below height {h}"
            )));
        }
        let slid = slide(&on_path, &path)
            .ok_or_else(|| InjectionError::Assertion(format!("slide of {a} left the path")))?;
        let image = rungs.union(&slid).union(&rest).union(&head);
        return Ok((image, MapCase::PartialLadder));
    }

    if !head_in {
        return Err(InjectionError::Assertion(format!(
            "{a} has a full ladder but does not contain the head"
        )));
    }
    if li == lj {
        return Err(InjectionError::ImpossibleCase { i, j, len: li });
    }
    let (path, other) = if lj < li {
        (
            leg_run(spider, j, lj, 0)
                .into_iter()
                .chain((1..lj).map(|h| spider.v(i, h)))
                .collect(),
            leg_run(spider, i, lj, li),
        )
    } else {
        (
            [leg_run(spider, j, li - 1, 0), leg_run(spider, i, 1, li)].concat(),
            leg_run(spider, j, lj, li),
        )
    };
    let shifted = shift(a, &path)
        .ok_or_else(|| InjectionError::Assertion(format!("shift of {a} left the path")))?;
    let image = shifted.union(&flip(a, &other)).union(&rest);
    Ok((image, MapCase::FullLadder))
}

/// Maps the star at the leaf of leg `j` into the star at the leaf of leg
/// `i`, for legs `i < j` whose lengths are in spider order.
///
/// Sets already holding the leaf of `i` are fixed. Otherwise the ladder of
/// the set between the two legs decides: with a first non-full rung at
/// height `h`, the set slides along `v_{j,l_j} … v_{j,h} v_{i,h} … v_{i,l_i}`
/// until it reaches the leaf of `i`; with a full ladder (which forces the
/// head into the set) it shifts one step along the path through the head
/// and flips on the remaining segment.
pub fn map_best_leaf(
    a: &VertexSet,
    spider: &Spider,
    i: usize,
    j: usize,
) -> Result<VertexSet, InjectionError> {
    let (image, _) = map_best_leaf_unchecked(a, spider, i, j)?;
    check_image(spider, a, &image, spider.leaf(i))?;
    Ok(image)
}
