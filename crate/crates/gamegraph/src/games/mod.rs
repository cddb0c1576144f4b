//! Concrete games and game-graph validators.

mod abs;
mod blocks;
mod coco;
mod ifil;
mod interval;
mod plain;

pub use abs::{abs_rel, allowed, check_row, AbsGame, AbsRow};
pub use blocks::{greedy_blocks, WithBlocks};
pub use coco::{coco_less, CocoGame, DownSet};
pub use ifil::{trapezoid, IfilGame};
pub use interval::{breaks_cleanness, endpoints, interval_rel, iov_rows, place, IntGame, IovGame};
pub use plain::{Edges, PlainGame};

use crate::engine::{validate_game_graph, GameGraph};
use crate::error::EngineError;
use crate::geometry::Interval;

pub fn validate_int_game_graph(gg: &GameGraph<Interval>, k: usize) -> Result<(), EngineError> {
    validate_game_graph(&IntGame::new(k), gg)
}

pub fn validate_iov_game_graph(gg: &GameGraph<Interval>, k: usize) -> Result<(), EngineError> {
    validate_game_graph(&IovGame::new(k), gg)
}

pub fn validate_abs_game_graph(gg: &GameGraph<AbsRow>, k: usize) -> Result<(), EngineError> {
    validate_game_graph(&AbsGame::new(k), gg)
}

pub fn validate_coco_game_graph(gg: &GameGraph<DownSet>, k: usize) -> Result<(), EngineError> {
    validate_game_graph(&CocoGame::new(k), gg)
}

/// The relation rows of an interval overlap scenario, as an abstract
/// overlap scenario.
pub fn iov_to_abs(s: &crate::engine::Scenario<Interval>) -> crate::engine::Scenario<AbsRow> {
    let mut out = crate::engine::Scenario::new();
    for (z, row) in iov_rows(s).into_iter().enumerate() {
        out.push(AbsRow::new(row), s.rounds()[z].edges_to_previous.clone())
            .unwrap();
    }
    out
}
