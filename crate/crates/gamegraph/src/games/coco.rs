//! Up-growing co-comparability game `γCOCO(k)`.

use crate::engine::{exceeds_clique_bound, Game, Scenario};
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

/// Earlier vertices below the new one. The new vertex is maximal, so this
/// is its full down-set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DownSet {
    pub downset: Vec<usize>,
}

impl DownSet {
    pub fn new(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        DownSet { downset: v }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.downset.binary_search(&x).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CocoGame {
    pub k: usize,
}

impl CocoGame {
    pub fn new(k: usize) -> Self {
        CocoGame { k }
    }

    fn closed(s: &Scenario<DownSet>, d: &[usize]) -> bool {
        d.iter()
            .all(|&x| s.payload(x).downset.iter().all(|y| d.binary_search(y).is_ok()))
    }
}

/// `x < y` in the presented order.
pub fn coco_less(s: &Scenario<DownSet>, x: usize, y: usize) -> bool {
    x < y && s.payload(y).contains(x)
}

impl Game for CocoGame {
    type Move = DownSet;

    fn name(&self) -> String {
        format!("coco({})", self.k)
    }

    fn clique_bound(&self) -> usize {
        self.k
    }

    fn check_move(&self, s: &Scenario<DownSet>, m: &DownSet) -> Result<Vec<usize>, String> {
        let n = s.len();
        let d = &m.downset;
        if d.windows(2).any(|w| w[0] >= w[1]) || d.last().is_some_and(|&x| x >= n) {
            return Err("down-set must list distinct earlier vertices in order".into());
        }
        if !Self::closed(s, d) {
            return Err("declared down-set is not downward closed".into());
        }
        let edges: Vec<usize> = (0..n).filter(|x| d.binary_search(x).is_err()).collect();
        if exceeds_clique_bound(s, &edges, self.k) {
            return Err(format!("width would exceed {}", self.k));
        }
        Ok(edges)
    }

    fn moves(&self, s: &Scenario<DownSet>) -> Vec<DownSet> {
        fn rec(g: &CocoGame, s: &Scenario<DownSet>, i: usize, cur: &mut Vec<usize>, out: &mut Vec<DownSet>) {
            if i == s.len() {
                let m = DownSet { downset: cur.clone() };
                if g.check_move(s, &m).is_ok() {
                    out.push(m);
                }
                return;
            }
            rec(g, s, i + 1, cur, out);
            if s.payload(i).downset.iter().all(|y| cur.binary_search(y).is_ok()) {
                cur.push(i);
                rec(g, s, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, s, 0, &mut Vec::new(), &mut out);
        out
    }

    fn random_move(&self, s: &Scenario<DownSet>, rng: &mut dyn RngCore) -> Option<DownSet> {
        for _ in 0..64 {
            let mut cur = Vec::new();
            for i in 0..s.len() {
                let ok = s.payload(i).downset.iter().all(|y| cur.binary_search(y).is_ok());
                if ok && rng.gen_bool(0.5) {
                    cur.push(i);
                }
            }
            let m = DownSet { downset: cur };
            if self.check_move(s, &m).is_ok() {
                return Some(m);
            }
        }
        let m = DownSet::new((0..s.len()).collect());
        self.check_move(s, &m).ok().map(|_| m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn play(g: &CocoGame, ds: &[&[usize]]) -> Result<Scenario<DownSet>, String> {
        let mut s = Scenario::new();
        for d in ds {
            let m = DownSet::new(d.to_vec());
            let e = g.check_move(&s, &m)?;
            s.push(m, e)?;
        }
        Ok(s)
    }

    #[test]
    fn comparability_removes_edges() {
        let g = CocoGame::new(2);
        let s = play(&g, &[&[], &[], &[0, 1]]).unwrap();
        assert!(s.rounds()[2].edges_to_previous.is_empty());
        assert_eq!(s.rounds()[1].edges_to_previous, vec![0]);
        assert!(play(&g, &[&[], &[], &[]]).is_err());
        assert!(play(&CocoGame::new(3), &[&[], &[], &[]]).is_ok());
    }

    #[test]
    fn closure_is_enforced() {
        let g = CocoGame::new(3);
        assert!(play(&g, &[&[], &[0], &[1]]).is_err());
        assert!(play(&g, &[&[], &[0], &[0, 1]]).is_ok());
    }

    #[test]
    fn moves_are_distinct_ideals() {
        let g = CocoGame::new(2);
        let s = play(&g, &[&[], &[]]).unwrap();
        // Ideals of a 2-antichain: {}, {0}, {1}, {0,1}; the empty one makes width 3.
        assert_eq!(g.moves(&s).len(), 3);
    }
}
