//! Spiders: a head vertex with paths ("legs") hanging off it.
//!
//! Vertex ids are fixed: the head is `0`, then the vertices of leg 1 in
//! height order, then leg 2, and so on. Legs and heights are 1-based, so
//! `Coord::Leg { leg: 2, height: 1 }` is the vertex on the second leg next
//! to the head.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::GraphError;
use crate::graph::Tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    Head,
    Leg { leg: usize, height: usize },
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Head => write!(f, "head"),
            Coord::Leg { leg, height } => write!(f, "({leg},{height})"),
        }
    }
}

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spider {
    legs: Vec<usize>,
    /// `offsets[i]` is the id of the height-1 vertex of leg `i + 1`.
    offsets: Vec<usize>,
    tree: Tree,
}

impl Spider {
    pub fn new(legs: &[usize]) -> Result<Self, GraphError> {
        validate_legs(legs)?;
        let mut offsets = Vec::with_capacity(legs.len());
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            offsets.push(next);
            edges.push((0, next));
            for h in 1..len {
                edges.push((next + h - 1, next + h));
            }
            next += len;
        }
        let tree = Tree::from_edges(next, &edges)?;
        Ok(Self {
            legs: legs.to_vec(),
            offsets,
            tree,
        })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Number of legs.
    pub fn k(&self) -> usize {
        self.legs.len()
    }

    /// Length of leg `leg` (1-based).
    pub fn leg_len(&self, leg: usize) -> usize {
        self.legs[leg - 1]
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub const HEAD: usize = 0;

    pub fn vertex_id(&self, coord: Coord) -> Result<usize, GraphError> {
        match coord {
            Coord::Head => Ok(Self::HEAD),
            Coord::Leg { leg, height }
                if (1..=self.k()).contains(&leg) && (1..=self.legs[leg - 1]).contains(&height) =>
            {
                Ok(self.offsets[leg - 1] + height - 1)
            }
            _ => Err(GraphError::CoordinateOutOfRange(coord.to_string())),
        }
    }

    pub fn coordinate_of(&self, id: usize) -> Result<Coord, GraphError> {
        if id >= self.n() {
            return Err(GraphError::VertexOutOfRange { id, n: self.n() });
        }
        if id == Self::HEAD {
            return Ok(Coord::Head);
        }
        let leg = self.offsets.partition_point(|&o| o <= id);
        Ok(Coord::Leg {
            leg,
            height: id - self.offsets[leg - 1] + 1,
        })
    }

    /// Id of `v_{leg,height}`, with height 0 meaning the head.
    ///
    /// Panics on an out-of-range coordinate; use [`Spider::vertex_id`] for
    /// checked access.
    #[inline]
    pub fn v(&self, leg: usize, height: usize) -> usize {
        if height == 0 {
            return Self::HEAD;
        }
        assert!(
            height <= self.legs[leg - 1],
            "height {height} beyond leg {leg}"
        );
        self.offsets[leg - 1] + height - 1
    }

    /// The leaf `v_{leg, l_leg}`.
    pub fn leaf(&self, leg: usize) -> usize {
        self.v(leg, self.leg_len(leg))
    }

    pub fn is_spider_ordered(&self) -> bool {
        is_spider_ordered(&self.legs)
    }

    pub fn descriptor(&self) -> String {
        format_legs(&self.legs)
    }
}

impl FromStr for Spider {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Spider::new(&parse_legs(s)?)
    }
}

fn validate_legs(legs: &[usize]) -> Result<(), GraphError> {
    if legs.is_empty() {
        return Err(GraphError::InvalidDescriptor("no legs".into()));
    }
    if let Some(pos) = legs.iter().position(|&l| l == 0) {
        return Err(GraphError::InvalidDescriptor(format!(
            "leg {} has length 0",
            pos + 1
        )));
    }
    Ok(())
}

/// Parses a comma-separated list of positive leg lengths, e.g. `"3,1,2,4"`.
pub fn parse_legs(s: &str) -> Result<Vec<usize>, GraphError> {
    let legs = s
        .split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|_| {
                GraphError::InvalidDescriptor(format!("`{s}`: bad leg `{}`", part.trim()))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    validate_legs(&legs)?;
    Ok(legs)
}

pub fn format_legs(legs: &[usize]) -> String {
    legs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn order_key(a: usize, b: usize) -> Ordering {
    match (a % 2, b % 2) {
        (1, 1) => a.cmp(&b),
        (0, 0) => b.cmp(&a),
        (1, 0) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

/// Reorders legs so that odd lengths come first in ascending order,
/// followed by even lengths in descending order. Equal lengths keep their
/// input order.
pub fn spider_order(legs: &[usize]) -> Vec<usize> {
    let mut out = legs.to_vec();
    out.sort_by(|&a, &b| order_key(a, b));
    out
}

/// Whether a leg of length `a` may precede a leg of length `b`.
pub fn may_precede(a: usize, b: usize) -> bool {
    order_key(a, b) != Ordering::Greater
}

pub fn is_spider_ordered(legs: &[usize]) -> bool {
    legs.windows(2).all(|w| may_precede(w[0], w[1]))
}

/// All spiders with `2 <= n <= max_n` vertices, one per leg multiset, each in
/// spider order. Sorted by vertex count, then by the multiset's
/// nonincreasing part list in descending lexicographic order.
pub fn spider_catalog(max_n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for total in 1..max_n {
        let mut parts = Vec::new();
        partitions(total, total, &mut parts, &mut |p| out.push(spider_order(p)));
    }
    out
}

fn partitions(
    rest: usize,
    max_part: usize,
    parts: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if rest == 0 {
        emit(parts);
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        parts.push(part);
        partitions(rest - part, part, parts, emit);
        parts.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_spider_numbering() {
        let s = Spider::new(&[2, 1]).unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(
            s.tree().edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2)]
        );

        let star = Spider::new(&[1, 1, 1]).unwrap();
        assert_eq!(star.tree().neighbors(0), &[1, 2, 3]);

        let double = Spider::new(&[3, 3]).unwrap();
        assert_eq!(double.n(), 7);
        assert_eq!(double.tree().leaves(), vec![3, 6]);
        assert_eq!(double.tree().degree(0), 2);
    }

    #[test]
    fn rejects_bad_descriptors() {
        assert!(matches!(
            Spider::new(&[]),
            Err(GraphError::InvalidDescriptor(_))
        ));
        assert!(matches!(
            Spider::new(&[2, 0]),
            Err(GraphError::InvalidDescriptor(_))
        ));
        assert!(parse_legs("").is_err());
        assert!(parse_legs("1,-2").is_err());
        assert!(parse_legs("1,,2").is_err());
        assert!(parse_legs("a").is_err());
        assert_eq!(parse_legs(" 3, 1,2 ").unwrap(), vec![3, 1, 2]);
    }

    #[test]
    fn single_leg_is_a_path() {
        let s = Spider::new(&[3]).unwrap();
        assert_eq!(s.tree().degree(0), 1);
        assert_eq!(s.tree().leaves(), vec![0, 3]);
    }

    #[test]
    fn coordinates() {
        let s = Spider::new(&[2, 1]).unwrap();
        assert_eq!(s.vertex_id(Coord::Head).unwrap(), 0);
        assert_eq!(s.vertex_id(Coord::Leg { leg: 1, height: 2 }).unwrap(), 2);
        assert_eq!(s.vertex_id(Coord::Leg { leg: 2, height: 1 }).unwrap(), 3);
        assert!(s.vertex_id(Coord::Leg { leg: 2, height: 2 }).is_err());
        assert!(s.vertex_id(Coord::Leg { leg: 3, height: 1 }).is_err());
        assert!(s.vertex_id(Coord::Leg { leg: 0, height: 1 }).is_err());
        assert!(s.vertex_id(Coord::Leg { leg: 1, height: 0 }).is_err());
        assert!(s.coordinate_of(4).is_err());
        for id in 0..s.n() {
            assert_eq!(s.vertex_id(s.coordinate_of(id).unwrap()).unwrap(), id);
        }
        assert_eq!(Coord::Leg { leg: 1, height: 2 }.to_string(), "(1,2)");
    }

    #[test]
    fn spider_order_examples() {
        assert_eq!(spider_order(&[3, 1, 2, 4]), vec![1, 3, 4, 2]);
        assert_eq!(spider_order(&[1, 1]), vec![1, 1]);
        assert_eq!(spider_order(&[2, 2, 3]), vec![3, 2, 2]);
        assert!(is_spider_ordered(&[1, 3, 4, 2]));
        assert!(!is_spider_ordered(&[2, 1]));
    }

    #[test]
    fn catalog_counts_partitions() {
        // p(1) + ... + p(9)
        assert_eq!(
            spider_catalog(10).len(),
            1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30
        );
        assert_eq!(
            spider_catalog(4),
            vec![
                vec![1],
                vec![2],
                vec![1, 1],
                vec![3],
                vec![1, 2],
                vec![1, 1, 1]
            ]
        );
        assert!(spider_catalog(12).iter().all(|l| is_spider_ordered(l)));
    }

    fn legs_strategy() -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::vec(1usize..8, 1..7)
    }

    proptest! {
        #[test]
        fn spider_order_properties(legs in legs_strategy()) {
            let ordered = spider_order(&legs);
            prop_assert_eq!(spider_order(&ordered), ordered.clone());
            let mut a = legs.clone();
            let mut b = ordered.clone();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);

            let split = ordered.iter().position(|l| l % 2 == 0).unwrap_or(ordered.len());
            prop_assert!(ordered[split..].iter().all(|l| l % 2 == 0));
            prop_assert!(ordered[..split].windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(ordered[split..].windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(is_spider_ordered(&ordered));
        }

        #[test]
        fn spider_shape(legs in legs_strategy()) {
            let s = Spider::new(&legs).unwrap();
            prop_assert_eq!(s.n(), 1 + legs.iter().sum::<usize>());
            if legs.len() >= 2 {
                prop_assert_eq!(s.tree().degree(0), legs.len());
                let leaves: Vec<usize> = (1..=s.k()).map(|i| s.leaf(i)).collect();
                prop_assert_eq!(s.tree().leaves(), leaves);
            } else {
                prop_assert_eq!(s.tree().degree(0), 1);
            }
            for i in 1..=s.k() {
                for h in 1..=s.leg_len(i) {
                    prop_assert!(s.tree().are_adjacent(s.v(i, h - 1), s.v(i, h)));
                }
            }
            for id in 0..s.n() {
                prop_assert_eq!(s.vertex_id(s.coordinate_of(id).unwrap()).unwrap(), id);
            }
        }
    }
}
