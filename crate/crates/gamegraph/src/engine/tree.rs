use super::{canonical_colors, Game, GameGraph, Presenter, Scenario};
use crate::error::EngineError;
use crate::graph::{Graph, RootedForest};
use std::collections::HashMap;

pub const DEFAULT_TREE_BUDGET: usize = 1_000_000;

/// All scenarios reachable by a fixed presenter over every canonical
/// Algorithm response, stored as a trie of moves.
#[derive(Debug, Clone)]
pub struct StrategyTree<M> {
    pub parent: Vec<Option<usize>>,
    pub payload: Vec<M>,
    /// Earlier nodes on the root path adjacent to each node.
    pub edges: Vec<Vec<usize>>,
    /// Number of complete playouts explored.
    pub playouts: usize,
    /// Fewest colors used over all playouts.
    pub min_colors: usize,
    /// Most colors used over all playouts.
    pub max_colors: usize,
    /// Longest playout.
    pub max_rounds: usize,
}

impl<M: Clone> StrategyTree<M> {
    pub fn scenario_count(&self) -> usize {
        self.payload.len()
    }

    /// The scenario ending at `node`.
    pub fn scenario(&self, node: usize) -> Scenario<M> {
        let mut path = vec![node];
        while let Some(p) = self.parent[*path.last().unwrap()] {
            path.push(p);
        }
        path.reverse();
        let pos: HashMap<usize, usize> = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut s = Scenario::new();
        for &v in &path {
            let e = self.edges[v].iter().map(|u| pos[u]).collect();
            s.push(self.payload[v].clone(), e).unwrap();
        }
        s
    }
}

struct Walk<'a, G: Game> {
    game: &'a G,
    presenter: &'a dyn Presenter<G::Move>,
    color_bound: usize,
    budget: usize,
    visits: usize,
    trie: HashMap<(Option<usize>, G::Move), usize>,
    tree: StrategyTree<G::Move>,
}

impl<G: Game> Walk<'_, G> {
    fn explore(
        &mut self,
        s: &mut Scenario<G::Move>,
        colors: &mut Vec<usize>,
        path: &mut Vec<usize>,
    ) -> Result<(), EngineError> {
        self.visits += 1;
        if self.visits > self.budget.saturating_mul(64) {
            return Err(EngineError::Budget {
                budget: self.budget,
                partial: self.tree.payload.len(),
            });
        }
        let round = s.len();
        let m = self
            .presenter
            .next_move(s, colors)
            .map_err(|source| EngineError::Strategy { round, source })?;
        let Some(m) = m else {
            let used = crate::graph::palette_size(colors);
            let t = &mut self.tree;
            t.playouts += 1;
            t.min_colors = t.min_colors.min(used);
            t.max_colors = t.max_colors.max(used);
            t.max_rounds = t.max_rounds.max(round);
            return Ok(());
        };
        let edges = self
            .game
            .check_move(s, &m)
            .map_err(|reason| EngineError::IllegalMove { round, reason })?;
        let key = (path.last().copied(), m.clone());
        let node = match self.trie.get(&key) {
            Some(&id) => id,
            None => {
                let id = self.tree.payload.len();
                if id >= self.budget {
                    return Err(EngineError::Budget {
                        budget: self.budget,
                        partial: id,
                    });
                }
                self.trie.insert(key, id);
                self.tree.parent.push(path.last().copied());
                self.tree.payload.push(m.clone());
                self.tree.edges.push(edges.iter().map(|&e| path[e]).collect());
                id
            }
        };
        s.push(m, edges).unwrap();
        path.push(node);
        let options = canonical_colors(s, colors, self.game.forbidden_class_clique(), self.color_bound);
        for c in options {
            colors.push(c);
            let r = self.explore(s, colors, path);
            colors.pop();
            r?;
        }
        path.pop();
        s.pop();
        Ok(())
    }
}

pub fn enumerate_strategy_tree<G: Game>(
    game: &G,
    presenter: &dyn Presenter<G::Move>,
    color_bound: usize,
    budget: usize,
) -> Result<StrategyTree<G::Move>, EngineError> {
    let mut w = Walk {
        game,
        presenter,
        color_bound,
        budget,
        visits: 0,
        trie: HashMap::new(),
        tree: StrategyTree {
            parent: Vec::new(),
            payload: Vec::new(),
            edges: Vec::new(),
            playouts: 0,
            min_colors: usize::MAX,
            max_colors: 0,
            max_rounds: 0,
        },
    };
    w.explore(&mut Scenario::new(), &mut Vec::new(), &mut Vec::new())?;
    if w.tree.playouts == 0 {
        w.tree.min_colors = 0;
    }
    Ok(w.tree)
}

/// One game-graph vertex per scenario; the parent is the one-round-shorter
/// prefix, and edges and payload come from the last presented vertex.
pub fn extract_game_graph<G: Game>(
    game: &G,
    presenter: &dyn Presenter<G::Move>,
    color_bound: usize,
    budget: usize,
) -> Result<GameGraph<G::Move>, EngineError> {
    let tree = enumerate_strategy_tree(game, presenter, color_bound, budget)?;
    Ok(tree_to_game_graph(game.name(), &tree))
}

pub fn tree_to_game_graph<M: Clone>(game: String, tree: &StrategyTree<M>) -> GameGraph<M> {
    let n = tree.payload.len();
    let mut graph = Graph::new(n);
    for (v, es) in tree.edges.iter().enumerate() {
        for &u in es {
            graph.add_edge(u, v).unwrap();
        }
    }
    GameGraph {
        game,
        graph,
        forest: RootedForest::new(tree.parent.clone()).expect("trie is a forest"),
        payload: tree.payload.clone(),
    }
}
