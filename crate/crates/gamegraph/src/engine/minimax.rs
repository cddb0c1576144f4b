use super::{canonical_colors, Algorithm, Game, Presenter, Scenario};
use crate::error::{EngineError, StrategyError};
use crate::graph::{normalize_colors, palette_size};
use std::collections::HashMap;
use std::sync::Arc;

type Key<M> = (Vec<M>, Vec<usize>);

struct Solver<'a, G: Game> {
    game: &'a G,
    max_rounds: usize,
    max_colors: usize,
    budget: usize,
    memo: HashMap<Key<G::Move>, usize>,
    root_best: usize,
}

impl<G: Game> Solver<'_, G> {
    /// Value of a fully colored state: Presenter maximizes over moves (or
    /// stops), Algorithm minimizes over canonical colors.
    fn value(&mut self, s: &mut Scenario<G::Move>, colors: &mut Vec<usize>) -> Result<usize, ()> {
        let used = palette_size(colors);
        if s.len() >= self.max_rounds || used > self.max_colors {
            return Ok(used);
        }
        let key = (s.payloads().cloned().collect::<Vec<_>>(), normalize_colors(colors));
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        if self.memo.len() >= self.budget {
            return Err(());
        }
        let cap = self.max_colors + 1;
        let mut best = used;
        for m in self.game.moves(s) {
            let Ok(edges) = self.game.check_move(s, &m) else {
                continue;
            };
            s.push(m, edges).unwrap();
            let options = canonical_colors(s, colors, self.game.forbidden_class_clique(), self.max_colors);
            let mut worst_for_presenter = cap;
            for c in options {
                colors.push(c);
                let v = self.value(s, colors);
                colors.pop();
                let v = match v {
                    Ok(v) => v,
                    Err(()) => {
                        s.pop();
                        return Err(());
                    }
                };
                worst_for_presenter = worst_for_presenter.min(v);
                // Nothing goes below the colors already in play.
                if worst_for_presenter <= used.max(1) || worst_for_presenter <= best {
                    break;
                }
            }
            s.pop();
            best = best.max(worst_for_presenter);
            if s.is_empty() {
                self.root_best = self.root_best.max(best);
            }
            if best >= cap {
                break;
            }
        }
        // Only exact values are stored: the cutoff above fires when the
        // minimum already cannot change the maximum.
        self.memo.insert(key, best);
        Ok(best)
    }
}

/// Exact minimax value of the game cut off after `max_rounds` rounds, with
/// Algorithm restricted to at most `max_colors` colors. A value of
/// `max_colors + 1` means Presenter forces more than the cap.
pub fn game_value_bounded_with_budget<G: Game>(
    game: &G,
    max_rounds: usize,
    max_colors: usize,
    budget: usize,
) -> Result<usize, EngineError> {
    let mut solver = Solver {
        game,
        max_rounds,
        max_colors,
        budget,
        memo: HashMap::new(),
        root_best: 0,
    };
    solver
        .value(&mut Scenario::new(), &mut Vec::new())
        .map_err(|()| EngineError::ValueBudget {
            lower: solver.root_best,
        })
}

pub fn game_value_bounded<G: Game>(
    game: &G,
    max_rounds: usize,
    max_colors: usize,
) -> Result<usize, EngineError> {
    game_value_bounded_with_budget(game, max_rounds, max_colors, 5_000_000)
}

/// The Algorithm that plays optimally against one fixed presenter: it
/// picks the color minimizing the number of colors at the end of the game.
pub struct MinimaxAlgorithm<G: Game> {
    game: Arc<G>,
    presenter: Arc<dyn Presenter<G::Move>>,
    memo: HashMap<Key<G::Move>, usize>,
}

impl<G: Game> MinimaxAlgorithm<G> {
    pub fn new(game: Arc<G>, presenter: Arc<dyn Presenter<G::Move>>) -> Self {
        MinimaxAlgorithm {
            game,
            presenter,
            memo: HashMap::new(),
        }
    }

    fn value(&mut self, s: &mut Scenario<G::Move>, colors: &mut Vec<usize>) -> Result<usize, StrategyError> {
        let norm = normalize_colors(colors);
        let key = (s.payloads().cloned().collect::<Vec<_>>(), norm);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let v = match self.presenter.next_move(s, colors)? {
            None => palette_size(colors),
            Some(m) => {
                let edges = self
                    .game
                    .check_move(s, &m)
                    .map_err(StrategyError::Protocol)?;
                s.push(m, edges).unwrap();
                let forbid = self.game.forbidden_class_clique();
                let mut best = usize::MAX;
                for c in canonical_colors(s, colors, forbid, usize::MAX) {
                    colors.push(c);
                    let r = self.value(s, colors);
                    colors.pop();
                    best = best.min(r?);
                }
                s.pop();
                best
            }
        };
        self.memo.insert(key, v);
        Ok(v)
    }

    /// Colors Presenter can force from the empty position.
    pub fn game_value(&mut self) -> Result<usize, StrategyError> {
        self.value(&mut Scenario::new(), &mut Vec::new())
    }
}

impl<G: Game + 'static> Algorithm<G::Move> for MinimaxAlgorithm<G> {
    fn name(&self) -> String {
        format!("minimax[{}]", self.presenter.name())
    }

    fn color(&mut self, s: &Scenario<G::Move>, colors: &[usize]) -> Result<usize, StrategyError> {
        let mut s = s.clone();
        let mut cs = colors.to_vec();
        let forbid = self.game.forbidden_class_clique();
        let mut best: Option<(usize, usize)> = None;
        for c in canonical_colors(&s, &cs, forbid, usize::MAX) {
            cs.push(c);
            let v = self.value(&mut s, &mut cs)?;
            cs.pop();
            if best.is_none_or(|(bv, _)| v < bv) {
                best = Some((v, c));
            }
        }
        best.map(|(_, c)| c)
            .ok_or_else(|| StrategyError::Protocol("no admissible color".into()))
    }

    fn box_clone(&self) -> Box<dyn Algorithm<G::Move>> {
        Box::new(MinimaxAlgorithm {
            game: self.game.clone(),
            presenter: self.presenter.clone(),
            memo: self.memo.clone(),
        })
    }
}
