use super::filament::filament_color;
use super::merge_colors;
use crate::engine::{color_game_graph, validate_game_graph, GameGraph};
use crate::error::ModelError;
use crate::games::{validate_abs_game_graph, AbsGame, AbsRow, WithBlocks};
use crate::geometry::{filament_graph, filaments_from_path_subtrees, subtrees_from_abs_game_graph};
use crate::graph::{heavy_light, is_valid_coloring, optimal_coloring, palette_size, Coloring, RootedForest};
use crate::strategies::{abs_palette_bound, AbsOnline};
use serde::{Deserialize, Serialize};

/// How heavy paths are colored before the on-line pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Offline {
    /// Exact chromatic coloring of each path's induced graph.
    Exact,
    /// Path filaments colored by [`super::filament_color`].
    Filament,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbsColoring {
    pub coloring: Coloring,
    pub b: usize,
    pub heavy_paths: usize,
    /// Colors shared by all heavy paths.
    pub offline_palette: usize,
    /// On-line palette used inside each off-line class.
    pub class_palettes: Vec<usize>,
    pub online_bound: usize,
}

/// The game graph induced on `keep`, with forest and relation rows read
/// relative to the nearest kept ancestors. Vertex `i` is `keep[i]`.
pub fn class_game_graph(gg: &GameGraph<AbsRow>, keep: &[usize], game: String) -> GameGraph<AbsRow> {
    let mut mask = vec![false; gg.n()];
    let mut pos = vec![usize::MAX; gg.n()];
    for (i, &v) in keep.iter().enumerate() {
        mask[v] = true;
        pos[v] = i;
    }
    let parents = gg.subforest_parents(&mask);
    let forest = RootedForest::new(keep.iter().map(|&v| parents[v].map(|p| pos[p])).collect())
        .expect("restriction of a forest");
    let payload = keep
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            let path = forest.root_path(i);
            AbsRow::new(
                path[..path.len() - 1]
                    .iter()
                    .map(|&j| gg.payload[z].row[gg.forest.depth(keep[j])])
                    .collect(),
            )
        })
        .collect();
    GameGraph {
        game,
        graph: gg.graph.induced(keep),
        forest,
        payload,
    }
}

/// Colors heavy paths off-line with one shared palette, then colors each
/// class by replaying the block-bounded on-line algorithm with
/// `b = ⌊log₂ n⌋ + 1` along its root paths.
pub fn color_abs_game_graph(gg: &GameGraph<AbsRow>, k: usize, offline: Offline) -> Result<AbsColoring, ModelError> {
    validate_abs_game_graph(gg, k)?;
    let n = gg.n();
    let b = if n == 0 { 1 } else { n.ilog2() as usize + 1 };
    let hl = heavy_light(&gg.forest);
    let model = subtrees_from_abs_game_graph(gg, k)?;
    let mut first = vec![0usize; n];
    for path in &hl.paths {
        let induced = gg.graph.induced(path);
        let cs = match offline {
            Offline::Exact => optimal_coloring(&induced)?,
            Offline::Filament => {
                let q: Vec<usize> = path.iter().map(|&x| 1 + x).collect();
                let fm = filaments_from_path_subtrees(&model.restrict(path), &q)?;
                if filament_graph(&fm) != induced {
                    return Err(ModelError::Assertion("path filaments disagree with the game graph".into()));
                }
                filament_color(&fm)?.coloring.colors
            }
        };
        for (j, &v) in path.iter().enumerate() {
            first[v] = cs[j];
        }
    }
    let offline_palette = palette_size(&first);
    let classes = Coloring::new(first).classes();
    let game = WithBlocks::new(AbsGame::new(k), b);
    let mut keys = vec![(0, 0); n];
    let mut class_palettes = Vec::new();
    for (ci, vs) in classes.iter().enumerate() {
        let cg = class_game_graph(gg, vs, format!("abs({k},{b})"));
        validate_game_graph(&game, &cg)?;
        let cs = color_game_graph(&cg, &game, &AbsOnline::new(k, b))?;
        class_palettes.push(cs.palette_size());
        for (j, &v) in vs.iter().enumerate() {
            keys[v] = (ci, cs.colors[j]);
        }
    }
    let coloring = merge_colors(&keys);
    if n > 0 && !is_valid_coloring(&gg.graph, &coloring.colors, 2) {
        return Err(ModelError::Assertion("game graph coloring is improper".into()));
    }
    Ok(AbsColoring {
        coloring,
        b,
        heavy_paths: hl.paths.len(),
        offline_palette,
        class_palettes,
        online_bound: abs_palette_bound(k, b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::random_game_graph;
    use crate::strategies::random_scenario;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn random_abs_game_graphs() {
        let mut rng = StdRng::seed_from_u64(9);
        for k in 1..=3 {
            for _ in 0..15 {
                let gg = random_game_graph(&AbsGame::new(k), 40, &mut rng);
                for off in [Offline::Exact, Offline::Filament] {
                    let r = color_abs_game_graph(&gg, k, off).unwrap();
                    assert!(r.class_palettes.iter().all(|&p| p <= r.online_bound));
                }
            }
        }
    }

    #[test]
    fn single_path_is_one_heavy_path() {
        let mut rng = StdRng::seed_from_u64(10);
        let s = random_scenario(&AbsGame::new(2), 8, &mut rng);
        let gg = GameGraph {
            game: "abs(2)".into(),
            graph: s.graph(),
            forest: RootedForest::path(s.len()),
            payload: s.payloads().cloned().collect(),
        };
        let r = color_abs_game_graph(&gg, 2, Offline::Exact).unwrap();
        // The bottom edge of a path splits 1 + 1 and is light.
        assert_eq!(r.heavy_paths, 2);
        assert_eq!(r.class_palettes.len(), r.offline_palette);
    }
}
