use serde::Serialize;

use crate::error::InjectionError;
use crate::spider::Spider;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(h: usize) -> Self {
        if h.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The height-matched pair `{v_{i,h}, v_{j,h}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rung {
    pub height: usize,
    /// `(v_{i,h}, v_{j,h})`.
    pub pair: (usize, usize),
    pub full: bool,
}

/// The rungs of one parity between legs `i` and `j`, relative to a set `A`.
///
/// Even rungs are used when the head is in `A`, odd rungs otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ladder {
    pub parity: Parity,
    /// Rungs in increasing height.
    pub rungs: Vec<Rung>,
    /// The lowest rung that is not full.
    pub first_nonfull: Option<Rung>,
    /// Rungs strictly below `first_nonfull`; all full.
    pub partial: Vec<Rung>,
    pub is_full: bool,
}

impl Ladder {
    /// Vertices of the partial ladder.
    pub fn partial_vertices(&self, width: usize) -> VertexSet {
        VertexSet::from_ids(
            width,
            self.partial.iter().flat_map(|r| [r.pair.0, r.pair.1]),
        )
    }
}

pub(crate) fn check_leg(spider: &Spider, leg: usize) -> Result<(), InjectionError> {
    if (1..=spider.k()).contains(&leg) {
        Ok(())
    } else {
        Err(InjectionError::Contract(format!(
            "leg {leg} outside 1..={}",
            spider.k()
        )))
    }
}

pub(crate) fn check_independent(spider: &Spider, a: &VertexSet) -> Result<(), InjectionError> {
    if a.width() != spider.n() {
        return Err(InjectionError::Contract(format!(
            "set width {} does not match {} vertices",
            a.width(),
            spider.n()
        )));
    }
    if !spider.tree().is_independent(a) {
        return Err(InjectionError::Contract(format!("{a} is not independent")));
    }
    Ok(())
}

/// The ladder of `a` with respect to legs `i` and `j`.
pub fn ladder_of(
    a: &VertexSet,
    spider: &Spider,
    i: usize,
    j: usize,
) -> Result<Ladder, InjectionError> {
    check_leg(spider, i)?;
    check_leg(spider, j)?;
    if i == j {
        return Err(InjectionError::Contract(format!(
            "ladder needs two distinct legs, got {i} twice"
        )));
    }
    check_independent(spider, a)?;

    let parity = if a.contains(Spider::HEAD) {
        Parity::Even
    } else {
        Parity::Odd
    };
    let top = spider.leg_len(i).min(spider.leg_len(j));
    let rungs: Vec<Rung> = (1..=top)
        .filter(|&h| Parity::of(h) == parity)
        .map(|h| {
            let pair = (spider.v(i, h), spider.v(j, h));
            Rung {
                height: h,
                pair,
                full: a.contains(pair.0) && a.contains(pair.1),
            }
        })
        .collect();
    let cut = rungs.iter().position(|r| !r.full);
    let first_nonfull = cut.map(|c| rungs[c]);
    let partial = rungs[..cut.unwrap_or(rungs.len())].to_vec();
    Ok(Ladder {
        parity,
        first_nonfull,
        partial,
        is_full: cut.is_none(),
        rungs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &Spider, coords: &[(usize, usize)]) -> VertexSet {
        VertexSet::from_ids(s.n(), coords.iter().map(|&(i, h)| s.v(i, h)))
    }

    #[test]
    fn odd_ladder_with_nonfull_first_rung() {
        let s = Spider::new(&[3, 3]).unwrap();
        let a = set(&s, &[(1, 1), (2, 3)]);
        let l = ladder_of(&a, &s, 1, 2).unwrap();
        assert_eq!(l.parity, Parity::Odd);
        assert_eq!(
            l.rungs.iter().map(|r| r.height).collect::<Vec<_>>(),
            vec![1, 3]
        );
        let r = l.first_nonfull.unwrap();
        assert_eq!((r.height, r.full), (1, false));
        assert!(l.partial.is_empty());
        assert!(!l.is_full);
    }

    #[test]
    fn even_ladder_full() {
        let s = Spider::new(&[3, 3]).unwrap();
        let a = set(&s, &[(1, 0), (1, 2), (2, 2)]);
        let l = ladder_of(&a, &s, 1, 2).unwrap();
        assert_eq!(l.parity, Parity::Even);
        assert_eq!(l.rungs.len(), 1);
        assert!(l.rungs[0].full);
        assert!(l.is_full);
        assert_eq!(l.first_nonfull, None);
        assert_eq!(l.partial, l.rungs);
    }

    #[test]
    fn single_rung() {
        let s = Spider::new(&[1, 1]).unwrap();
        let a = set(&s, &[(2, 1)]);
        let l = ladder_of(&a, &s, 1, 2).unwrap();
        assert_eq!(l.parity, Parity::Odd);
        assert_eq!(
            l.rungs,
            vec![Rung {
                height: 1,
                pair: (1, 2),
                full: false
            }]
        );
        assert!(!l.is_full);
    }

    #[test]
    fn partial_ladder_stops_at_first_gap() {
        let s = Spider::new(&[5, 5]).unwrap();
        let a = set(&s, &[(1, 1), (2, 1), (1, 3), (2, 5)]);
        let l = ladder_of(&a, &s, 1, 2).unwrap();
        assert_eq!(l.first_nonfull.unwrap().height, 3);
        assert_eq!(l.partial.len(), 1);
        assert_eq!(
            l.partial_vertices(s.n()).to_vec(),
            vec![s.v(1, 1), s.v(2, 1)]
        );
    }

    #[test]
    fn contract_errors() {
        let s = Spider::new(&[2, 2]).unwrap();
        let a = set(&s, &[(1, 1)]);
        assert!(ladder_of(&a, &s, 1, 1).is_err());
        assert!(ladder_of(&a, &s, 1, 3).is_err());
        let bad = set(&s, &[(1, 1), (1, 2)]);
        assert!(matches!(
            ladder_of(&bad, &s, 1, 2),
            Err(InjectionError::Contract(_))
        ));
    }
}
