use super::{color_admissible, Algorithm, Game, Scenario};
use crate::error::EngineError;
use crate::graph::{Coloring, Graph, RootedForest};
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

/// A graph with a rooted forest on the same vertices and one move payload
/// per vertex. The payload of `v` is read relative to the root path of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameGraph<M> {
    pub game: String,
    pub graph: Graph,
    pub forest: RootedForest,
    pub payload: Vec<M>,
}

#[derive(Serialize, Deserialize)]
struct GameGraphJson<M> {
    game: String,
    graph: Graph,
    parent: Vec<Option<usize>>,
    payload: Vec<M>,
}

impl<M: Serialize + Clone> Serialize for GameGraph<M> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GameGraphJson {
            game: self.game.clone(),
            graph: self.graph.clone(),
            parent: self.forest.parents().to_vec(),
            payload: self.payload.clone(),
        }
        .serialize(s)
    }
}

impl<'de, M: Deserialize<'de>> Deserialize<'de> for GameGraph<M> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = GameGraphJson::<M>::deserialize(d)?;
        let forest = RootedForest::new(j.parent).map_err(serde::de::Error::custom)?;
        if forest.n() != j.graph.n() || j.payload.len() != j.graph.n() {
            return Err(serde::de::Error::custom("game graph parts disagree in size"));
        }
        Ok(GameGraph {
            game: j.game,
            graph: j.graph,
            forest,
            payload: j.payload,
        })
    }
}

impl<M: Clone> GameGraph<M> {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// The scenario along the root path of `v`, using the stored payloads
    /// and the graph's edges.
    pub fn path_scenario(&self, v: usize) -> Scenario<M> {
        let path = self.forest.root_path(v);
        let mut s = Scenario::new();
        for (i, &u) in path.iter().enumerate() {
            let e = (0..i).filter(|&j| self.graph.has_edge(path[j], u)).collect();
            s.push(self.payload[u].clone(), e).unwrap();
        }
        s
    }

    /// Restriction to a vertex subset. The forest is re-derived from nearest
    /// kept ancestors; payloads are left untouched, so callers must rewrite
    /// them if they are path-relative.
    pub fn subforest_parents(&self, keep: &[bool]) -> Vec<Option<usize>> {
        (0..self.n())
            .map(|v| {
                let mut p = self.forest.parent(v);
                while let Some(u) = p {
                    if keep[u] {
                        break;
                    }
                    p = self.forest.parent(u);
                }
                p
            })
            .collect()
    }
}

/// A random game graph with up to `n` vertices: each new vertex hangs below
/// a random earlier one (or starts a new tree) and carries a random legal
/// move for its root path. Every game graph arises this way from the
/// presenter strategy that follows the tree.
pub fn random_game_graph<G: Game>(game: &G, n: usize, rng: &mut dyn RngCore) -> GameGraph<G::Move> {
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut payload: Vec<G::Move> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut tries = 0;
    while payload.len() < n && tries < 4 * n {
        tries += 1;
        let len = payload.len();
        let p = if len == 0 || rng.gen_bool(0.15) { None } else { Some(rng.gen_range(0..len)) };
        let mut path = Vec::new();
        let mut cur = p;
        while let Some(u) = cur {
            path.push(u);
            cur = parent[u];
        }
        path.reverse();
        let mut s = Scenario::new();
        for (i, &u) in path.iter().enumerate() {
            let e = (0..i).filter(|&j| edges.contains(&(path[j], u))).collect();
            s.push(payload[u].clone(), e).unwrap();
        }
        let Some(m) = game.random_move(&s, rng) else { continue };
        let es = game.check_move(&s, &m).expect("random moves are legal");
        for e in es {
            edges.push((path[e], len));
        }
        parent.push(p);
        payload.push(m);
    }
    let graph = Graph::from_edges(payload.len(), &edges).unwrap();
    GameGraph {
        game: game.name(),
        graph,
        forest: RootedForest::new(parent).unwrap(),
        payload,
    }
}

/// Checks both game-graph conditions: every root path replays as a legal
/// scenario with exactly the graph's edges, and every edge joins an
/// ancestor with a descendant.
pub fn validate_game_graph<G: Game>(game: &G, gg: &GameGraph<G::Move>) -> Result<(), EngineError> {
    let bad = |m: String| Err(EngineError::InvalidGameGraph(m));
    let n = gg.n();
    if gg.forest.n() != n || gg.payload.len() != n {
        return bad("graph, forest and payload sizes differ".into());
    }
    for (u, v) in gg.graph.edges() {
        if !gg.forest.related(u, v) {
            return bad(format!("edge {u}-{v} joins unrelated vertices"));
        }
    }
    let mut s = Scenario::new();
    let mut path: Vec<usize> = Vec::new();
    for v in gg.forest.preorder() {
        let d = gg.forest.depth(v);
        while s.len() > d {
            s.pop();
            path.pop();
        }
        let edges = game
            .check_move(&s, &gg.payload[v])
            .map_err(|e| EngineError::InvalidGameGraph(format!("vertex {v}: {e}")))?;
        let expected: Vec<usize> = (0..d).filter(|&i| gg.graph.has_edge(path[i], v)).collect();
        if edges != expected {
            return bad(format!(
                "vertex {v}: payload implies edges {edges:?} to its path, graph has {expected:?}"
            ));
        }
        s.push(gg.payload[v].clone(), edges).unwrap();
        path.push(v);
    }
    Ok(())
}

/// Colors a game graph by running the algorithm along every root path.
/// Prefix determinism makes the color of each vertex well defined.
pub fn color_game_graph<G: Game>(
    gg: &GameGraph<G::Move>,
    game: &G,
    algorithm: &dyn Algorithm<G::Move>,
) -> Result<Coloring, EngineError> {
    validate_game_graph(game, gg)?;
    let n = gg.n();
    let forbid = game.forbidden_class_clique();
    let mut colors = vec![usize::MAX; n];
    let mut s = Scenario::new();
    let mut path_colors: Vec<usize> = Vec::new();
    let mut states: Vec<Box<dyn Algorithm<G::Move>>> = vec![algorithm.box_clone()];
    let mut path: Vec<usize> = Vec::new();
    for v in gg.forest.preorder() {
        let d = gg.forest.depth(v);
        while s.len() > d {
            s.pop();
            path.pop();
            path_colors.pop();
            states.pop();
        }
        let edges: Vec<usize> = (0..d).filter(|&i| gg.graph.has_edge(path[i], v)).collect();
        s.push(gg.payload[v].clone(), edges).unwrap();
        let mut alg = states[d].box_clone();
        let c = alg
            .color(&s, &path_colors)
            .map_err(|source| EngineError::Strategy { round: d, source })?;
        if !color_admissible(&s, &path_colors, c, forbid) {
            return Err(EngineError::ImproperColor { round: d, color: c });
        }
        colors[v] = c;
        path.push(v);
        path_colors.push(c);
        states.push(alg);
    }
    Ok(Coloring::new(colors))
}
