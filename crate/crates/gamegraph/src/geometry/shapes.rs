use crate::rational::{self, serde_q, Q};
use serde::{Deserialize, Serialize};

/// Closed interval `[l, r]` with `l < r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "serde_q")]
    pub l: Q,
    #[serde(with = "serde_q")]
    pub r: Q,
}

impl Interval {
    pub fn new(l: Q, r: Q) -> Self {
        Interval { l, r }
    }

    pub fn ints(l: i64, r: i64) -> Self {
        Interval::new(rational::int(l), rational::int(r))
    }

    pub fn fracs(l: (i64, i64), r: (i64, i64)) -> Self {
        Interval::new(rational::frac(l.0, l.1), rational::frac(r.0, r.1))
    }

    pub fn is_valid(&self) -> bool {
        self.l < self.r
    }

    pub fn len(&self) -> Q {
        &self.r - &self.l
    }

    pub fn intersects(&self, o: &Interval) -> bool {
        self.l <= o.r && o.l <= self.r
    }

    /// `o ⊆ self`.
    pub fn contains(&self, o: &Interval) -> bool {
        self.l <= o.l && o.r <= self.r
    }

    pub fn overlaps(&self, o: &Interval) -> bool {
        self.intersects(o) && !self.contains(o) && !o.contains(self)
    }

    pub fn contains_point(&self, t: &Q) -> bool {
        &self.l <= t && t <= &self.r
    }
}

/// Axis-parallel rectangle `x × y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub x: Interval,
    pub y: Interval,
}

impl Rect {
    pub fn new(x: Interval, y: Interval) -> Self {
        Rect { x, y }
    }

    pub fn from_corners(x1: Q, y1: Q, x2: Q, y2: Q) -> Self {
        Rect::new(Interval::new(x1, x2), Interval::new(y1, y2))
    }

    pub fn is_valid(&self) -> bool {
        self.x.is_valid() && self.y.is_valid()
    }

    pub fn intersects(&self, o: &Rect) -> bool {
        self.x.intersects(&o.x) && self.y.intersects(&o.y)
    }

    pub fn contains(&self, o: &Rect) -> bool {
        self.x.contains(&o.x) && self.y.contains(&o.y)
    }

    pub fn overlaps(&self, o: &Rect) -> bool {
        self.intersects(o) && !self.contains(o) && !o.contains(self)
    }

    pub fn half_perimeter(&self) -> Q {
        self.x.len() + self.y.len()
    }
}

/// Relation of an earlier set `x` to a later set `z`, as in the abstract
/// overlap game: `x` includes `z`, overlaps it, or is disjoint from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rel {
    #[serde(rename = "INC")]
    Inc,
    #[serde(rename = "OVL")]
    Ovl,
    #[serde(rename = "PAR")]
    Par,
}

impl Rel {
    pub const ALL: [Rel; 3] = [Rel::Inc, Rel::Ovl, Rel::Par];
}

/// Sorts rationals and returns them deduplicated.
pub fn sorted_unique(mut v: Vec<Q>) -> Vec<Q> {
    v.sort();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_relations() {
        let a = Interval::ints(0, 10);
        let b = Interval::ints(5, 15);
        let c = Interval::ints(6, 9);
        let d = Interval::ints(20, 30);
        assert!(a.overlaps(&b));
        assert!(a.contains(&c) && !a.overlaps(&c));
        assert!(!a.intersects(&d));
        assert!(Interval::ints(0, 1).intersects(&Interval::ints(1, 2)));
    }

    #[test]
    fn rect_relations() {
        let r1 = Rect::new(Interval::ints(0, 4), Interval::ints(0, 1));
        let r2 = Rect::new(Interval::ints(1, 2), Interval::ints(-1, 3));
        assert!(r1.intersects(&r2) && r1.overlaps(&r2));
        let r3 = Rect::new(Interval::ints(1, 2), Interval::ints(0, 1));
        assert!(r1.contains(&r3));
    }

    #[test]
    fn rel_json() {
        assert_eq!(serde_json::to_string(&Rel::Ovl).unwrap(), "\"OVL\"");
        let i: Interval = serde_json::from_str(r#"{"l":"1/4","r":"9/4"}"#).unwrap();
        assert_eq!(i, Interval::fracs((1, 4), (9, 4)));
    }
}
