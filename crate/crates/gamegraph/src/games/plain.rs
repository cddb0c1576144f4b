use crate::engine::{exceeds_clique_bound, Game, Scenario};
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

/// A bare vertex given only by its edges to earlier vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edges {
    pub edges: Vec<usize>,
}

impl Edges {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Edges { edges }
    }
}

/// On-line coloring of arbitrary graphs with clique number at most `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlainGame {
    pub k: usize,
}

impl PlainGame {
    pub fn new(k: usize) -> Self {
        PlainGame { k }
    }
}

impl Game for PlainGame {
    type Move = Edges;

    fn name(&self) -> String {
        format!("plain({})", self.k)
    }

    fn clique_bound(&self) -> usize {
        self.k
    }

    fn check_move(&self, s: &Scenario<Edges>, m: &Edges) -> Result<Vec<usize>, String> {
        let e = &m.edges;
        if e.windows(2).any(|w| w[0] >= w[1]) || e.last().is_some_and(|&x| x >= s.len()) {
            return Err("edges must list distinct earlier vertices in order".into());
        }
        if exceeds_clique_bound(s, e, self.k) {
            return Err(format!("clique number would exceed {}", self.k));
        }
        Ok(e.clone())
    }

    /// All neighborhoods; only sensible for short scenarios.
    fn moves(&self, s: &Scenario<Edges>) -> Vec<Edges> {
        let n = s.len();
        assert!(n < 20, "neighborhood enumeration is exponential");
        (0u32..1 << n)
            .map(|mask| Edges::new((0..n).filter(|&i| mask >> i & 1 == 1).collect()))
            .filter(|m| self.check_move(s, m).is_ok())
            .collect()
    }

    fn random_move(&self, s: &Scenario<Edges>, rng: &mut dyn RngCore) -> Option<Edges> {
        for _ in 0..64 {
            let p = 2.0 / (s.len() as f64 + 2.0);
            let m = Edges::new((0..s.len()).filter(|_| rng.gen_bool(p)).collect());
            if self.check_move(s, &m).is_ok() {
                return Some(m);
            }
        }
        Some(Edges::new(Vec::new()))
    }
}
