use crate::engine::{color_admissible, Algorithm, Game, Presenter, Scenario};
use crate::error::StrategyError;
use rand::rngs::StdRng;
use rand::{Rng, RngCore, SeedableRng};
use serde::Serialize;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// Least color not used on an earlier neighbor.
#[derive(Debug, Clone, Copy, Default)]
pub struct FirstFit;

pub fn first_fit_color(nbr_colors: impl IntoIterator<Item = usize>) -> usize {
    let mut used: Vec<usize> = nbr_colors.into_iter().collect();
    used.sort_unstable();
    used.dedup();
    used.iter().enumerate().find(|(i, &c)| *i != c).map_or(used.len(), |(i, _)| i)
}

impl<M: Clone + 'static> Algorithm<M> for FirstFit {
    fn name(&self) -> String {
        "first_fit".into()
    }

    fn color(&mut self, s: &Scenario<M>, colors: &[usize]) -> Result<usize, StrategyError> {
        let v = s.len() - 1;
        Ok(first_fit_color(s.neighbors(v).iter().map(|&u| colors[u])))
    }

    fn box_clone(&self) -> Box<dyn Algorithm<M>> {
        Box::new(*self)
    }
}

/// Uniformly random admissible color among those in use plus one new one.
#[derive(Debug, Clone)]
pub struct RandomAlgorithm {
    seed: u64,
    forbid: usize,
    rng: StdRng,
}

impl RandomAlgorithm {
    pub fn new(seed: u64, forbid: usize) -> Self {
        RandomAlgorithm {
            seed,
            forbid,
            rng: StdRng::seed_from_u64(seed),
        }
    }
}

impl<M: Clone + 'static> Algorithm<M> for RandomAlgorithm {
    fn name(&self) -> String {
        format!("random[{}]", self.seed)
    }

    fn color(&mut self, s: &Scenario<M>, colors: &[usize]) -> Result<usize, StrategyError> {
        let top = colors.iter().max().map_or(0, |m| m + 1);
        let opts: Vec<usize> = (0..=top)
            .filter(|&c| color_admissible(s, colors, c, self.forbid))
            .collect();
        Ok(opts[self.rng.gen_range(0..opts.len())])
    }

    fn box_clone(&self) -> Box<dyn Algorithm<M>> {
        Box::new(self.clone())
    }
}

/// Presenter making random legal moves. The choice is a hash of the seed
/// and the whole history, so it is a pure function of the position.
pub struct RandomPresenter<G> {
    pub game: Arc<G>,
    pub seed: u64,
    pub rounds: usize,
}

impl<G: Game> RandomPresenter<G> {
    pub fn new(game: Arc<G>, seed: u64, rounds: usize) -> Self {
        RandomPresenter { game, seed, rounds }
    }
}

fn history_seed<M: Serialize>(seed: u64, s: &Scenario<M>, colors: &[usize]) -> u64 {
    let mut h = DefaultHasher::new();
    seed.hash(&mut h);
    serde_json::to_string(s).unwrap().hash(&mut h);
    colors.hash(&mut h);
    h.finish()
}

impl<G: Game> Presenter<G::Move> for RandomPresenter<G> {
    fn name(&self) -> String {
        format!("random[{}]", self.seed)
    }

    fn next_move(&self, s: &Scenario<G::Move>, colors: &[usize]) -> Result<Option<G::Move>, StrategyError> {
        if s.len() >= self.rounds {
            return Ok(None);
        }
        let mut rng = StdRng::seed_from_u64(history_seed(self.seed, s, colors));
        Ok(self.game.random_move(s, &mut rng))
    }
}

/// A random legal scenario with up to `n` rounds; shorter if the game runs
/// out of random moves.
pub fn random_scenario<G: Game>(game: &G, n: usize, rng: &mut dyn RngCore) -> Scenario<G::Move> {
    let mut s = Scenario::new();
    while s.len() < n {
        let Some(m) = game.random_move(&s, rng) else { break };
        let edges = game.check_move(&s, &m).expect("random moves are legal");
        s.push(m, edges).unwrap();
    }
    s
}
