use super::shapes::{sorted_unique, Interval};
use crate::rational::{serde_points, Q};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Piecewise-linear interval filament: samples `(t, h)` with strictly
/// increasing `t`, `h >= 0`, and `h = 0` at both ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Filament {
    #[serde(with = "serde_points")]
    pub points: Vec<(Q, Q)>,
}

impl Filament {
    pub fn new(points: Vec<(Q, Q)>) -> Result<Self, String> {
        let f = Filament { points };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<(), String> {
        let p = &self.points;
        if p.len() < 2 {
            return Err("a filament needs at least two samples".into());
        }
        if !p[0].1.is_zero() || !p[p.len() - 1].1.is_zero() {
            return Err("a filament must vanish at both ends of its domain".into());
        }
        for w in p.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err("sample abscissas must increase strictly".into());
            }
        }
        if p.iter().any(|(_, h)| h.is_negative()) {
            return Err("filament heights must be nonnegative".into());
        }
        Ok(())
    }

    pub fn domain(&self) -> Interval {
        Interval::new(self.points[0].0.clone(), self.points.last().unwrap().0.clone())
    }

    /// Height at `t`, which must lie in the domain.
    pub fn eval(&self, t: &Q) -> Q {
        let p = &self.points;
        match p.binary_search_by(|(x, _)| x.cmp(t)) {
            Ok(i) => p[i].1.clone(),
            Err(i) => {
                assert!(i > 0 && i < p.len(), "evaluation outside the domain");
                let (x0, h0) = &p[i - 1];
                let (x1, h1) = &p[i];
                h0 + (h1 - h0) * (t - x0) / (x1 - x0)
            }
        }
    }

    /// Differences `self - other` at every breakpoint of either curve in the
    /// common domain; both differences are linear in between.
    fn differences(&self, other: &Filament) -> Option<Vec<Q>> {
        let (a, b) = (self.domain(), other.domain());
        let lo = std::cmp::max(&a.l, &b.l).clone();
        let hi = std::cmp::min(&a.r, &b.r).clone();
        if lo > hi {
            return None;
        }
        let mut ts = vec![lo.clone(), hi.clone()];
        for (t, _) in self.points.iter().chain(&other.points) {
            if &lo <= t && t <= &hi {
                ts.push(t.clone());
            }
        }
        let ts = sorted_unique(ts);
        Some(ts.iter().map(|t| self.eval(t) - other.eval(t)).collect())
    }

    /// Closed-set intersection: touching counts.
    pub fn intersects(&self, other: &Filament) -> bool {
        let Some(d) = self.differences(other) else {
            return false;
        };
        if d.iter().any(|x| x.is_zero()) {
            return true;
        }
        d.windows(2).any(|w| w[0].is_positive() != w[1].is_positive())
    }

    /// Smallest vertical gap over the common domain, for disjoint curves
    /// with intersecting domains.
    pub fn clearance(&self, other: &Filament) -> Option<Q> {
        if self.intersects(other) {
            return None;
        }
        self.differences(other)?.into_iter().map(|x| x.abs()).min()
    }

    /// Compares with `other` on the common domain: `Greater` if strictly
    /// above everywhere, `Less` if strictly below, `Equal` otherwise.
    pub fn dominance(&self, other: &Filament) -> Ordering {
        match self.differences(other) {
            Some(d) if d.iter().all(|x| x.is_positive()) => Ordering::Greater,
            Some(d) if d.iter().all(|x| x.is_negative()) => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn tent(a: i64, b: i64, h: i64) -> Filament {
        let m = crate::rational::midpoint(&int(a), &int(b));
        Filament::new(vec![(int(a), int(0)), (m, int(h)), (int(b), int(0))]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Filament::new(vec![(int(0), int(0))]).is_err());
        assert!(Filament::new(vec![(int(0), int(1)), (int(1), int(0))]).is_err());
        assert!(Filament::new(vec![(int(1), int(0)), (int(0), int(0))]).is_err());
        assert!(Filament::new(vec![(int(0), int(0)), (int(1), int(-1)), (int(2), int(0))]).is_err());
    }

    #[test]
    fn nested_and_crossing() {
        let big = tent(0, 10, 10);
        let small = tent(4, 6, 1);
        assert!(!big.intersects(&small));
        assert!(big.clearance(&small).unwrap() > int(0));
        assert_eq!(big.dominance(&small), Ordering::Greater);
        let right = tent(5, 15, 10);
        assert!(big.intersects(&right));
        let far = tent(20, 30, 1);
        assert!(!big.intersects(&far));
        assert_eq!(big.eval(&int(5)), int(10));
        assert_eq!(big.eval(&int(1)), int(2));
    }

    #[test]
    fn touching_counts() {
        let a = tent(0, 2, 2);
        let b = tent(2, 4, 2);
        assert!(a.intersects(&b));
    }
}
