//! Interval filament game `γIFIL(k, b)`.

use super::blocks::block_state;
use super::interval::{breaks_cleanness, endpoints, place};
use crate::engine::{exceeds_clique_bound, Game, Scenario};
use crate::geometry::{Filament, Interval};
use crate::rational::{frac, int, Q};
use num_traits::Zero;
use rand::{Rng, RngCore};

/// Filaments presented in order of increasing domain left endpoints. Edges
/// join intersecting filaments. Domains stay in general position and form
/// a clean family, as for the interval overlap game.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IfilGame {
    pub k: usize,
    pub b: usize,
}

impl IfilGame {
    pub fn new(k: usize, b: usize) -> Self {
        IfilGame { k, b }
    }

    fn domain_scenario(s: &Scenario<Filament>) -> Scenario<Interval> {
        let mut d = Scenario::new();
        for f in s.payloads() {
            d.push(f.domain(), Vec::new()).unwrap();
        }
        d
    }

    fn start_gap(s: &Scenario<Filament>, e: &[Q]) -> usize {
        match s.payloads().map(|f| f.domain().l).max() {
            Some(maxl) => e.iter().position(|p| *p == maxl).unwrap() + 1,
            None => 0,
        }
    }
}

/// A trapezoid over `dom` with plateau height `h`.
pub fn trapezoid(dom: &Interval, h: Q) -> Filament {
    let w = dom.len() * frac(1, 4);
    Filament::new(vec![
        (dom.l.clone(), int(0)),
        (&dom.l + &w, h.clone()),
        (&dom.r - &w, h),
        (dom.r.clone(), int(0)),
    ])
    .unwrap()
}

impl Game for IfilGame {
    type Move = Filament;

    fn name(&self) -> String {
        format!("ifil({},{})", self.k, self.b)
    }

    fn clique_bound(&self) -> usize {
        self.k
    }

    fn check_move(&self, s: &Scenario<Filament>, m: &Filament) -> Result<Vec<usize>, String> {
        m.validate()?;
        let dom = m.domain();
        let doms: Vec<Interval> = s.payloads().map(Filament::domain).collect();
        for (i, d) in doms.iter().enumerate() {
            if [&d.l, &d.r].contains(&&dom.l) || [&d.l, &d.r].contains(&&dom.r) {
                return Err(format!("domain endpoint shared with vertex {i}"));
            }
            if d.l >= dom.l {
                return Err("domain left endpoints must increase in presentation order".into());
            }
        }
        let refs: Vec<&Interval> = doms.iter().collect();
        if breaks_cleanness(&refs, &dom) {
            return Err("domains would stop being clean".into());
        }
        let edges: Vec<usize> = s
            .payloads()
            .enumerate()
            .filter(|(_, f)| f.intersects(m))
            .map(|(i, _)| i)
            .collect();
        if exceeds_clique_bound(s, &edges, self.k) {
            return Err(format!("clique number would exceed {}", self.k));
        }
        let (start, blocks) = block_state(s);
        let after = if s.is_empty() {
            1
        } else {
            blocks + usize::from(edges.iter().any(|&u| u >= start))
        };
        if after > self.b {
            return Err(format!("more than {} blocks", self.b));
        }
        Ok(edges)
    }

    /// A finite representative family: every domain order type, each with
    /// a low and a high plateau. Filament shapes are not enumerated up to
    /// order type.
    fn moves(&self, s: &Scenario<Filament>) -> Vec<Filament> {
        let d = Self::domain_scenario(s);
        let e = endpoints(&d);
        let top = s
            .payloads()
            .flat_map(|f| f.points.iter().map(|p| p.1.clone()))
            .max()
            .unwrap_or_else(Q::zero)
            + int(1);
        let mut out = Vec::new();
        for gl in Self::start_gap(s, &e)..=e.len() {
            for gr in gl..=e.len() {
                let dom = place(&e, gl, gr);
                for h in [frac(1, 1 << 20), top.clone()] {
                    let f = trapezoid(&dom, h);
                    if self.check_move(s, &f).is_ok() && !out.contains(&f) {
                        out.push(f);
                    }
                }
            }
        }
        out
    }

    fn random_move(&self, s: &Scenario<Filament>, rng: &mut dyn RngCore) -> Option<Filament> {
        let d = Self::domain_scenario(s);
        let e = endpoints(&d);
        let start = Self::start_gap(s, &e);
        for _ in 0..64 {
            let gl = rng.gen_range(start..=e.len());
            let span = rng.gen_range(0..=(e.len() - gl).min(6));
            let dom = place(&e, gl, gl + span);
            let inner = rng.gen_range(1..=3);
            let mut pts = vec![(dom.l.clone(), int(0))];
            for i in 1..=inner {
                let t = &dom.l + dom.len() * frac(i, inner + 1);
                pts.push((t, int(rng.gen_range(1..=8))));
            }
            pts.push((dom.r.clone(), int(0)));
            let f = Filament::new(pts).unwrap();
            if self.check_move(s, &f).is_ok() {
                return Some(f);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tent(a: i64, b: i64, h: i64) -> Filament {
        trapezoid(&Interval::ints(a, b), int(h))
    }

    #[test]
    fn nesting_and_crossing() {
        let g = IfilGame::new(2, 4);
        let mut s = Scenario::new();
        let big = tent(0, 10, 10);
        s.push(big.clone(), g.check_move(&s, &big).unwrap()).unwrap();
        let low = tent(2, 4, 1);
        assert!(g.check_move(&s, &low).unwrap().is_empty());
        let tall = tent(2, 4, 20);
        assert_eq!(g.check_move(&s, &tall).unwrap(), vec![0]);
        let ovl = tent(5, 15, 1);
        assert_eq!(g.check_move(&s, &ovl).unwrap(), vec![0]);
        assert!(g.check_move(&s, &tent(-1, 3, 1)).is_err());
    }

    #[test]
    fn representative_moves_are_legal() {
        let g = IfilGame::new(2, 3);
        let mut s = Scenario::new();
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(3);
        for _ in 0..12 {
            let Some(m) = g.random_move(&s, &mut rng) else { break };
            let e = g.check_move(&s, &m).unwrap();
            s.push(m, e).unwrap();
        }
        assert!(!s.is_empty());
        for m in g.moves(&s) {
            assert!(g.check_move(&s, &m).is_ok());
        }
    }
}
