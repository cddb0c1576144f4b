//! Generic on-line game machinery: scenarios, strategies, playouts,
//! strategy trees, game graphs and a bounded minimax solver.

mod gamegraph;
mod minimax;
mod tree;

pub use gamegraph::{color_game_graph, random_game_graph, validate_game_graph, GameGraph};
pub use minimax::{game_value_bounded, game_value_bounded_with_budget, MinimaxAlgorithm};
pub use tree::{enumerate_strategy_tree, extract_game_graph, StrategyTree, DEFAULT_TREE_BUDGET};

use crate::error::{EngineError, StrategyError};
use crate::graph::{Coloring, Graph};
use rand::RngCore;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::fmt::Debug;
use std::hash::Hash;

/// Rules of one on-line game.
pub trait Game: Send + Sync {
    type Move: Clone + Eq + Hash + Ord + Debug + Send + Sync + Serialize + DeserializeOwned;

    fn name(&self) -> String;

    /// Upper bound `k` on the clique number of presented graphs.
    fn clique_bound(&self) -> usize;

    /// Color classes must not contain a clique on this many vertices:
    /// 2 for proper coloring, 3 for triangle-free coloring.
    fn forbidden_class_clique(&self) -> usize {
        2
    }

    /// Checks a candidate move against the scenario so far and returns the
    /// sorted indices of earlier vertices adjacent to the new one.
    fn check_move(&self, s: &Scenario<Self::Move>, m: &Self::Move) -> Result<Vec<usize>, String>;

    /// Every distinct canonical legal move.
    fn moves(&self, s: &Scenario<Self::Move>) -> Vec<Self::Move>;

    /// A random legal move, or `None` when none was found.
    fn random_move(&self, s: &Scenario<Self::Move>, rng: &mut dyn RngCore) -> Option<Self::Move>;
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Round<M> {
    pub payload: M,
    pub edges_to_previous: Vec<usize>,
}

/// An ordered presentation transcript.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scenario<M> {
    rounds: Vec<Round<M>>,
    adj: Vec<Vec<usize>>,
}

impl<M> Default for Scenario<M> {
    fn default() -> Self {
        Scenario {
            rounds: Vec::new(),
            adj: Vec::new(),
        }
    }
}

impl<M: Clone> Scenario<M> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rounds(rounds: Vec<Round<M>>) -> Result<Self, String> {
        let mut s = Scenario::new();
        for r in rounds {
            s.push(r.payload, r.edges_to_previous)?;
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }

    pub fn rounds(&self) -> &[Round<M>] {
        &self.rounds
    }

    pub fn payload(&self, i: usize) -> &M {
        &self.rounds[i].payload
    }

    pub fn payloads(&self) -> impl Iterator<Item = &M> {
        self.rounds.iter().map(|r| &r.payload)
    }

    pub fn last(&self) -> Option<&Round<M>> {
        self.rounds.last()
    }

    pub fn push(&mut self, payload: M, mut edges: Vec<usize>) -> Result<(), String> {
        let n = self.rounds.len();
        edges.sort_unstable();
        edges.dedup();
        if edges.last().is_some_and(|&e| e >= n) {
            return Err(format!("edge to a future vertex in round {n}"));
        }
        for &e in &edges {
            self.adj[e].push(n);
        }
        self.adj.push(edges.clone());
        self.rounds.push(Round {
            payload,
            edges_to_previous: edges,
        });
        Ok(())
    }

    pub fn pop(&mut self) -> Option<Round<M>> {
        let r = self.rounds.pop()?;
        self.adj.pop();
        for &e in &r.edges_to_previous {
            let last = self.adj[e].pop();
            debug_assert_eq!(last, Some(self.rounds.len()));
        }
        Some(r)
    }

    /// Neighbors of `v` among all presented vertices, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn prefix(&self, len: usize) -> Scenario<M> {
        Scenario::from_rounds(self.rounds[..len].to_vec()).expect("prefix of a scenario")
    }

    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.len());
        for (v, r) in self.rounds.iter().enumerate() {
            for &u in &r.edges_to_previous {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }
}

impl<M: Serialize> Serialize for Scenario<M> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rounds.serialize(s)
    }
}

impl<'de, M: Deserialize<'de> + Clone> Deserialize<'de> for Scenario<M> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rounds = Vec::<Round<M>>::deserialize(d)?;
        Scenario::from_rounds(rounds).map_err(serde::de::Error::custom)
    }
}

/// Does the vertex set `vs` of `s` contain a clique on `k` vertices?
pub fn contains_clique<M: Clone>(s: &Scenario<M>, vs: &[usize], k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if vs.len() < k {
        return false;
    }
    for (i, &v) in vs.iter().enumerate() {
        let rest: Vec<usize> = vs[i + 1..].iter().copied().filter(|&w| s.has_edge(v, w)).collect();
        if contains_clique(s, &rest, k - 1) {
            return true;
        }
    }
    false
}

/// Would a new vertex with these earlier neighbors push ω above `k`?
pub fn exceeds_clique_bound<M: Clone>(s: &Scenario<M>, nbrs: &[usize], k: usize) -> bool {
    contains_clique(s, nbrs, k)
}

/// Is color `c` admissible for the newest vertex under the class obligation?
pub fn color_admissible<M: Clone>(
    s: &Scenario<M>,
    colors: &[usize],
    c: usize,
    forbid: usize,
) -> bool {
    let v = s.len() - 1;
    let same: Vec<usize> = s.rounds[v]
        .edges_to_previous
        .iter()
        .copied()
        .filter(|&u| colors[u] == c)
        .collect();
    !contains_clique(s, &same, forbid - 1)
}

pub trait Presenter<M>: Send + Sync {
    fn name(&self) -> String;

    /// Next move given everything presented and colored so far, or `None`
    /// to end the game. Must be a pure function of its arguments.
    fn next_move(&self, s: &Scenario<M>, colors: &[usize]) -> Result<Option<M>, StrategyError>;
}

pub trait Algorithm<M>: Send {
    fn name(&self) -> String;

    /// Color for the newest vertex of `s`; `colors` covers the earlier ones.
    fn color(&mut self, s: &Scenario<M>, colors: &[usize]) -> Result<usize, StrategyError>;

    fn box_clone(&self) -> Box<dyn Algorithm<M>>;
}

impl<M> Clone for Box<dyn Algorithm<M>> {
    fn clone(&self) -> Self {
        self.box_clone()
    }
}

/// A presenter that never presents anything.
pub struct EmptyPresenter;

impl<M> Presenter<M> for EmptyPresenter {
    fn name(&self) -> String {
        "empty".into()
    }
    fn next_move(&self, _: &Scenario<M>, _: &[usize]) -> Result<Option<M>, StrategyError> {
        Ok(None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "M: Serialize", deserialize = "M: Deserialize<'de> + Clone"))]
pub struct Transcript<M> {
    pub scenario: Scenario<M>,
    pub coloring: Coloring,
    pub colors_used: usize,
}

impl<M: Clone> Transcript<M> {
    pub fn rounds(&self) -> usize {
        self.scenario.len()
    }
}

pub fn run_game<G: Game>(
    game: &G,
    presenter: &dyn Presenter<G::Move>,
    algorithm: &mut dyn Algorithm<G::Move>,
) -> Result<Transcript<G::Move>, EngineError> {
    let mut s = Scenario::new();
    let mut colors = Vec::new();
    let forbid = game.forbidden_class_clique();
    loop {
        let round = s.len();
        let m = presenter
            .next_move(&s, &colors)
            .map_err(|source| EngineError::Strategy { round, source })?;
        let Some(m) = m else { break };
        let edges = game
            .check_move(&s, &m)
            .map_err(|reason| EngineError::IllegalMove { round, reason })?;
        s.push(m, edges)
            .map_err(|reason| EngineError::IllegalMove { round, reason })?;
        let c = algorithm
            .color(&s, &colors)
            .map_err(|source| EngineError::Strategy { round, source })?;
        if !color_admissible(&s, &colors, c, forbid) {
            return Err(EngineError::ImproperColor { round, color: c });
        }
        colors.push(c);
    }
    let colors_used = crate::graph::palette_size(&colors);
    Ok(Transcript {
        scenario: s,
        coloring: Coloring::new(colors),
        colors_used,
    })
}

/// Colors a finished scenario round by round, as the algorithm would have
/// seen it on-line.
pub fn replay_algorithm<M: Clone>(
    s: &Scenario<M>,
    algorithm: &mut dyn Algorithm<M>,
) -> Result<Vec<usize>, EngineError> {
    let mut prefix = Scenario::new();
    let mut colors = Vec::new();
    for (round, r) in s.rounds().iter().enumerate() {
        prefix
            .push(r.payload.clone(), r.edges_to_previous.clone())
            .map_err(|reason| EngineError::IllegalMove { round, reason })?;
        let c = algorithm
            .color(&prefix, &colors)
            .map_err(|source| EngineError::Strategy { round, source })?;
        colors.push(c);
    }
    Ok(colors)
}

/// Canonical Algorithm responses: colors already used plus one fresh color,
/// filtered by the class obligation and capped at `color_bound` colors.
pub fn canonical_colors<M: Clone>(
    s: &Scenario<M>,
    colors: &[usize],
    forbid: usize,
    color_bound: usize,
) -> Vec<usize> {
    let used = colors.iter().copied().max().map_or(0, |m| m + 1);
    let top = (used + 1).min(color_bound);
    (0..top)
        .filter(|&c| color_admissible(s, colors, c, forbid))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_pop_keeps_adjacency() {
        let mut s: Scenario<u8> = Scenario::new();
        s.push(0, vec![]).unwrap();
        s.push(1, vec![0]).unwrap();
        s.push(2, vec![1, 0]).unwrap();
        assert_eq!(s.neighbors(0), &[1, 2]);
        assert!(s.has_edge(2, 1));
        s.pop();
        assert_eq!(s.neighbors(0), &[1]);
        assert!(s.push(3, vec![7]).is_err());
        assert_eq!(s.graph().edges(), vec![(0, 1)]);
    }

    #[test]
    fn cliques_in_scenarios() {
        let mut s: Scenario<u8> = Scenario::new();
        s.push(0, vec![]).unwrap();
        s.push(0, vec![0]).unwrap();
        s.push(0, vec![0, 1]).unwrap();
        assert!(contains_clique(&s, &[0, 1, 2], 3));
        assert!(exceeds_clique_bound(&s, &[0, 1], 2));
        assert!(!exceeds_clique_bound(&s, &[0, 1], 3));
    }

    #[test]
    fn canonical_color_set() {
        let mut s: Scenario<u8> = Scenario::new();
        s.push(0, vec![]).unwrap();
        assert_eq!(canonical_colors(&s, &[], 2, 10), vec![0]);
        s.push(0, vec![0]).unwrap();
        assert_eq!(canonical_colors(&s, &[0], 2, 10), vec![1]);
        assert_eq!(canonical_colors(&s, &[0], 3, 10), vec![0, 1]);
        assert!(canonical_colors(&s, &[0], 2, 1).is_empty());
    }
}
