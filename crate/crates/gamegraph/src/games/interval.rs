//! Interval games: intersection (`γINT`) and clean overlap (`γIOV`, `γIOV₃`).

use crate::engine::{exceeds_clique_bound, Game, Scenario};
use crate::geometry::{Interval, Rel};
use crate::rational::{frac, int, midpoint, Q};
use rand::{Rng, RngCore};

/// Existing endpoints in increasing order.
pub fn endpoints(s: &Scenario<Interval>) -> Vec<Q> {
    let mut e: Vec<Q> = s.payloads().flat_map(|i| [i.l.clone(), i.r.clone()]).collect();
    e.sort();
    e
}

/// Point for one endpoint placed alone in gap `g` (gap `g` lies between
/// `e[g-1]` and `e[g]`).
fn single(e: &[Q], g: usize) -> Q {
    match (g.checked_sub(1).map(|i| &e[i]), e.get(g)) {
        (None, None) => int(0),
        (None, Some(hi)) => hi - int(1),
        (Some(lo), None) => lo + int(1),
        (Some(lo), Some(hi)) => midpoint(lo, hi),
    }
}

/// Two points placed in the same gap, in increasing order.
fn pair(e: &[Q], g: usize) -> (Q, Q) {
    match (g.checked_sub(1).map(|i| &e[i]), e.get(g)) {
        (None, None) => (int(0), int(1)),
        (None, Some(hi)) => (hi - int(2), hi - int(1)),
        (Some(lo), None) => (lo + int(1), lo + int(2)),
        (Some(lo), Some(hi)) => {
            let d = hi - lo;
            (lo + &d * frac(1, 3), lo + &d * frac(2, 3))
        }
    }
}

/// The interval whose left endpoint sits in gap `gl` and right endpoint in
/// gap `gr >= gl`. Different `(gl, gr)` give different order types.
pub fn place(e: &[Q], gl: usize, gr: usize) -> Interval {
    assert!(gl <= gr && gr <= e.len());
    if gl == gr {
        let (l, r) = pair(e, gl);
        Interval::new(l, r)
    } else {
        Interval::new(single(e, gl), single(e, gr))
    }
}

fn general_position(s: &Scenario<Interval>, m: &Interval) -> Result<(), String> {
    if !m.is_valid() {
        return Err("interval must satisfy l < r".into());
    }
    for (i, x) in s.payloads().enumerate() {
        for p in [&m.l, &m.r] {
            if p == &x.l || p == &x.r {
                return Err(format!("endpoint shared with vertex {i}"));
            }
        }
    }
    Ok(())
}

/// Intervals presented with their representation; edges are intersections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntGame {
    pub k: usize,
}

impl IntGame {
    pub fn new(k: usize) -> Self {
        IntGame { k }
    }
}

impl Game for IntGame {
    type Move = Interval;

    fn name(&self) -> String {
        format!("int({})", self.k)
    }

    fn clique_bound(&self) -> usize {
        self.k
    }

    fn check_move(&self, s: &Scenario<Interval>, m: &Interval) -> Result<Vec<usize>, String> {
        general_position(s, m)?;
        let edges: Vec<usize> = s
            .payloads()
            .enumerate()
            .filter(|(_, x)| x.intersects(m))
            .map(|(i, _)| i)
            .collect();
        if exceeds_clique_bound(s, &edges, self.k) {
            return Err(format!("clique number would exceed {}", self.k));
        }
        Ok(edges)
    }

    fn moves(&self, s: &Scenario<Interval>) -> Vec<Interval> {
        let e = endpoints(s);
        let mut out = Vec::new();
        for gl in 0..=e.len() {
            for gr in gl..=e.len() {
                let m = place(&e, gl, gr);
                if self.check_move(s, &m).is_ok() {
                    out.push(m);
                }
            }
        }
        out
    }

    fn random_move(&self, s: &Scenario<Interval>, rng: &mut dyn RngCore) -> Option<Interval> {
        let e = endpoints(s);
        for _ in 0..64 {
            let a = rng.gen_range(0..=e.len());
            let b = rng.gen_range(0..=e.len());
            let m = place(&e, a.min(b), a.max(b));
            if self.check_move(s, &m).is_ok() {
                return Some(m);
            }
        }
        let m = place(&e, e.len(), e.len());
        self.check_move(s, &m).ok().map(|_| m)
    }
}

/// Clean interval overlap game. Left endpoints increase along the
/// presentation; edges join overlapping intervals. With `triangle_free`,
/// Algorithm only has to keep color classes triangle-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IovGame {
    pub k: usize,
    pub triangle_free: bool,
}

impl IovGame {
    pub fn new(k: usize) -> Self {
        IovGame {
            k,
            triangle_free: false,
        }
    }

    pub fn triangle_free(k: usize) -> Self {
        IovGame {
            k,
            triangle_free: true,
        }
    }
}

/// Relation of earlier interval `x` to later interval `z`.
pub fn interval_rel(x: &Interval, z: &Interval) -> Rel {
    if x.contains(z) {
        Rel::Inc
    } else if x.intersects(z) {
        Rel::Ovl
    } else {
        Rel::Par
    }
}

/// Would adding `m` create a triple violating cleanness?
pub fn breaks_cleanness(prev: &[&Interval], m: &Interval) -> bool {
    let holders: Vec<&&Interval> = prev.iter().filter(|x| x.contains(m)).collect();
    for (i, x) in holders.iter().enumerate() {
        for y in &holders[i + 1..] {
            if x.overlaps(y) {
                return true;
            }
        }
    }
    for x in prev.iter().filter(|x| x.overlaps(m)) {
        if prev.iter().any(|w| x.contains(w) && m.contains(w)) {
            return true;
        }
    }
    false
}

impl Game for IovGame {
    type Move = Interval;

    fn name(&self) -> String {
        if self.triangle_free {
            format!("iov3({})", self.k)
        } else {
            format!("iov({})", self.k)
        }
    }

    fn clique_bound(&self) -> usize {
        self.k
    }

    fn forbidden_class_clique(&self) -> usize {
        if self.triangle_free {
            3
        } else {
            2
        }
    }

    fn check_move(&self, s: &Scenario<Interval>, m: &Interval) -> Result<Vec<usize>, String> {
        general_position(s, m)?;
        if s.payloads().any(|x| x.l >= m.l) {
            return Err("left endpoints must increase in presentation order".into());
        }
        let prev: Vec<&Interval> = s.payloads().collect();
        if breaks_cleanness(&prev, m) {
            return Err("the model would stop being clean".into());
        }
        let edges: Vec<usize> = prev
            .iter()
            .enumerate()
            .filter(|(_, x)| x.overlaps(m))
            .map(|(i, _)| i)
            .collect();
        if exceeds_clique_bound(s, &edges, self.k) {
            return Err(format!("clique number would exceed {}", self.k));
        }
        Ok(edges)
    }

    fn moves(&self, s: &Scenario<Interval>) -> Vec<Interval> {
        let e = endpoints(s);
        let start = match s.payloads().map(|x| &x.l).max() {
            Some(maxl) => e.iter().position(|p| p == maxl).unwrap() + 1,
            None => 0,
        };
        let mut out = Vec::new();
        for gl in start..=e.len() {
            for gr in gl..=e.len() {
                let m = place(&e, gl, gr);
                if self.check_move(s, &m).is_ok() {
                    out.push(m);
                }
            }
        }
        out
    }

    fn random_move(&self, s: &Scenario<Interval>, rng: &mut dyn RngCore) -> Option<Interval> {
        let e = endpoints(s);
        let start = match s.payloads().map(|x| &x.l).max() {
            Some(maxl) => e.iter().position(|p| p == maxl).unwrap() + 1,
            None => 0,
        };
        for _ in 0..64 {
            let gl = rng.gen_range(start..=e.len());
            // Short intervals keep the overlap graph sparse enough to stay legal.
            let span = rng.gen_range(0..=(e.len() - gl).min(8));
            let m = place(&e, gl, gl + span);
            if self.check_move(s, &m).is_ok() {
                return Some(m);
            }
        }
        let m = place(&e, e.len(), e.len());
        self.check_move(s, &m).ok().map(|_| m)
    }
}

/// Translates an interval overlap scenario into relation rows.
pub fn iov_rows(s: &Scenario<Interval>) -> Vec<Vec<Rel>> {
    let xs: Vec<&Interval> = s.payloads().collect();
    (0..xs.len())
        .map(|z| (0..z).map(|x| interval_rel(xs[x], xs[z])).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn scen(game: &impl Game<Move = Interval>, xs: &[Interval]) -> Result<Scenario<Interval>, String> {
        let mut s = Scenario::new();
        for x in xs {
            let e = game.check_move(&s, x)?;
            s.push(x.clone(), e)?;
        }
        Ok(s)
    }

    #[test]
    fn canonical_move_counts() {
        let g = IntGame::new(2);
        let s = Scenario::new();
        assert_eq!(g.moves(&s).len(), 1);
        let s = scen(&g, &[Interval::ints(0, 1)]).unwrap();
        assert_eq!(g.moves(&s).len(), 6);
        let g1 = IntGame::new(1);
        let moves = g1.moves(&s);
        assert_eq!(moves.len(), 2);
        assert!(moves.iter().all(|m| !m.intersects(&Interval::ints(0, 1))));
    }

    #[test]
    fn overlap_edges_and_cleanness() {
        let g = IovGame::new(3);
        let s = scen(&g, &[Interval::ints(0, 2), Interval::ints(3, 5)]).unwrap();
        assert!(s.rounds()[1].edges_to_previous.is_empty());
        let s = scen(&g, &[Interval::ints(0, 4), Interval::ints(2, 6)]).unwrap();
        assert_eq!(s.rounds()[1].edges_to_previous, vec![0]);
        let bad = Interval::fracs((5, 2), (7, 2));
        assert!(g.check_move(&s, &bad).is_err());
        assert!(g.check_move(&s, &Interval::ints(1, 3)).is_err());
    }

    #[test]
    fn random_moves_are_legal() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for game in [IovGame::new(2), IovGame::triangle_free(3)] {
            let mut s = Scenario::new();
            for _ in 0..40 {
                let m = game.random_move(&s, &mut rng).unwrap();
                let e = game.check_move(&s, &m).unwrap();
                s.push(m, e).unwrap();
            }
        }
    }
}
