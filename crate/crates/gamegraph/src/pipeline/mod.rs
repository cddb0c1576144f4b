//! Off-line colorings built from level decompositions, filament classes
//! and heavy paths.

mod abs;
mod bfs;
mod filament;
mod reduction;

pub use abs::{color_abs_game_graph, class_game_graph, AbsColoring, Offline};
pub use bfs::{check_levels, is_containment_compatible, kclique_bfs, overlap_model_order, LevelDecomposition};
pub use filament::{filament_color, FilamentColoring};
pub use reduction::{clean_reduction_color, exact_clean_colorer, CleanReduction};

use crate::graph::Coloring;
use std::collections::HashMap;

/// Merges `(group, color)` pairs into one palette by first appearance.
fn merge_colors(keys: &[(usize, usize)]) -> Coloring {
    let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
    Coloring::new(
        keys.iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(*k).or_insert(next)
            })
            .collect(),
    )
}
