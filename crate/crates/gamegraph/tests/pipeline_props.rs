mod common;

use common::*;
use gamegraph::engine::random_game_graph;
use gamegraph::games::AbsGame;
use gamegraph::geometry::{model_graph, Mode, Model};
use gamegraph::graph::{clique_number, dsatur_coloring, is_valid_coloring, Graph};
use gamegraph::pipeline::{
    check_levels, clean_reduction_color, color_abs_game_graph, exact_clean_colorer, filament_color,
    is_containment_compatible, kclique_bfs, overlap_model_order, Offline,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn levels_hold(model: &Model) -> Result<(), TestCaseError> {
    let g = model_graph(model, Mode::Overlap).unwrap();
    let order = overlap_model_order(model).unwrap();
    prop_assert!(is_containment_compatible(model, &order));
    // the level properties are claimed at k = ω
    let k = clique_number(&g).unwrap().max(2);
    let dec = kclique_bfs(&g, &order, k);
    let mut all: Vec<usize> = dec.levels.concat();
    all.sort_unstable();
    prop_assert_eq!(all, (0..model.len()).collect::<Vec<_>>());
    prop_assert_eq!(check_levels(model, &g, &dec, k), Ok(()));
    Ok(())
}

fn reduction_holds(model: &Model, colorer: &dyn Fn(&Graph) -> Result<Vec<usize>, gamegraph::error::ModelError>) -> Result<(), TestCaseError> {
    let g = model_graph(model, Mode::Overlap).unwrap();
    let r = clean_reduction_color(model, colorer).unwrap();
    prop_assert!(is_valid_coloring(&g, &r.coloring.colors, 2));
    let bound: u128 = (2..=r.omega).map(|j| 2 * *r.alpha.get(&j).unwrap_or(&1) as u128).product();
    prop_assert_eq!(bound, r.bound);
    prop_assert!(r.coloring.palette_size() as u128 <= r.bound);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn interval_levels_and_reduction(seed in any::<u64>(), n in 1usize..40) {
        let m = Model::Intervals(random_intervals(&mut StdRng::seed_from_u64(seed), n, 90));
        levels_hold(&m)?;
        reduction_holds(&m, &exact_clean_colorer)?;
        reduction_holds(&m, &|g: &Graph| Ok(dsatur_coloring(g)))?;
    }

    #[test]
    fn rectangle_levels_and_reduction(seed in any::<u64>(), n in 1usize..20) {
        let m = Model::Rectangles(random_rectangles(&mut StdRng::seed_from_u64(seed), n));
        levels_hold(&m)?;
        reduction_holds(&m, &exact_clean_colorer)?;
    }

    #[test]
    fn filament_classes_are_laminar(seed in any::<u64>(), n in 1usize..30) {
        let m = general_filaments(&mut StdRng::seed_from_u64(seed), n);
        let r = filament_color(&m).unwrap();
        let g = model_graph(&Model::Filaments(m.clone()), Mode::Intersection).unwrap();
        prop_assert!(is_valid_coloring(&g, &r.coloring.colors, 2));
        let mut seen = vec![false; n];
        for class in &r.classes {
            for (i, &a) in class.iter().enumerate() {
                prop_assert!(!seen[a]);
                seen[a] = true;
                for &b in &class[i + 1..] {
                    prop_assert!(!m.filaments[a].domain().overlaps(&m.filaments[b].domain()));
                }
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn abs_game_graph_colorings(seed in any::<u64>(), n in 1usize..40, k in 1usize..4) {
        let gg = random_game_graph(&AbsGame::new(k), n, &mut StdRng::seed_from_u64(seed));
        for offline in [Offline::Exact, Offline::Filament] {
            let c = color_abs_game_graph(&gg, k, offline).unwrap();
            prop_assert!(is_valid_coloring(&gg.graph, &c.coloring.colors, 2));
            prop_assert!(c.coloring.palette_size() <= c.offline_palette * c.online_bound);
        }
    }
}
