//! Geometric models, exact predicates and syntheses from game graphs.

mod filament;
mod model;
mod shapes;
mod svg;
mod synth;

pub use filament::Filament;
pub use model::{
    is_clean, model_graph, FilamentModel, HostTree, IntervalModel, Mode, Model, RectangleModel, SubtreeModel,
};
pub use shapes::{sorted_unique, Interval, Rect, Rel};
pub use svg::svg_export;
pub use synth::{
    abs_certificate_from_subtrees, coco_certificate_from_filaments, filament_graph, filaments_from_coco_game_graph,
    filaments_from_path_subtrees, realize_poset_functions, rectangles_from_int_game_graph, subtrees_from_abs_game_graph,
};
