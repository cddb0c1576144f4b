mod common;

use common::*;
use gamegraph::engine::{extract_game_graph, random_game_graph, DEFAULT_TREE_BUDGET};
use gamegraph::games::{validate_abs_game_graph, validate_coco_game_graph, AbsGame, CocoGame, IntGame};
use gamegraph::geometry::{
    abs_certificate_from_subtrees, coco_certificate_from_filaments, filaments_from_coco_game_graph, is_clean,
    model_graph, rectangles_from_int_game_graph, subtrees_from_abs_game_graph, Filament, FilamentModel, Interval,
    IntervalModel, Mode, Model, Rect, RectangleModel,
};
use gamegraph::rational::{frac, int, Q};
use gamegraph::strategies::RandomPresenter;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::sync::Arc;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn rectangles_realize_int_game_graphs(seed in any::<u64>(), n in 1usize..40, k in 1usize..4) {
        let gg = random_game_graph(&IntGame::new(k), n, &mut StdRng::seed_from_u64(seed));
        let m = rectangles_from_int_game_graph(&gg, k).unwrap();
        prop_assert_eq!(model_graph(&Model::Rectangles(m), Mode::Intersection).unwrap(), gg.graph);
    }

    #[test]
    fn subtrees_realize_abs_game_graphs(seed in any::<u64>(), n in 1usize..40, k in 1usize..4) {
        let gg = random_game_graph(&AbsGame::new(k), n, &mut StdRng::seed_from_u64(seed));
        let m = subtrees_from_abs_game_graph(&gg, k).unwrap();
        let model = Model::Subtrees(m.clone());
        prop_assert_eq!(&model_graph(&model, Mode::Overlap).unwrap(), &gg.graph);
        prop_assert!(is_clean(&model).unwrap());
        let cert = abs_certificate_from_subtrees(&m, k).unwrap();
        validate_abs_game_graph(&cert, k).unwrap();
        prop_assert_eq!(cert.graph, gg.graph);
    }

    #[test]
    fn filaments_realize_coco_game_graphs(seed in any::<u64>(), n in 1usize..30, k in 1usize..4) {
        let gg = random_game_graph(&CocoGame::new(k), n, &mut StdRng::seed_from_u64(seed));
        let m = filaments_from_coco_game_graph(&gg, k).unwrap();
        let doms: Vec<Interval> = m.filaments.iter().map(|f| f.domain()).collect();
        for a in 0..doms.len() {
            for b in 0..doms.len() {
                prop_assert!(!doms[a].overlaps(&doms[b]));
            }
        }
        prop_assert_eq!(&model_graph(&Model::Filaments(m.clone()), Mode::Intersection).unwrap(), &gg.graph);
        let cert = coco_certificate_from_filaments(&m, k).unwrap();
        validate_coco_game_graph(&cert, k).unwrap();
        prop_assert_eq!(cert.graph, gg.graph);
    }

    /// A positive affine map of the plane changes no predicate; exact
    /// arithmetic makes this hold even for tiny and huge factors.
    #[test]
    fn predicates_are_affine_invariant(seed in any::<u64>(), n in 1usize..25, p in 1i64..1000, q in 1i64..1000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let scale: Q = frac(p, q) * frac(1, 1_000_000_007) * frac(1, 998_244_353);
        let shift: Q = frac(q, p) * int(1_000_000_000_000);
        let map = |t: &Q| t * &scale + &shift;
        let iv = random_intervals(&mut rng, n, 80);
        let iv2 = IntervalModel {
            intervals: iv.intervals.iter().map(|x| Interval::new(map(&x.l), map(&x.r))).collect(),
        };
        let rs = random_rectangles(&mut rng, n);
        let rs2 = RectangleModel {
            rectangles: rs
                .rectangles
                .iter()
                .map(|r| Rect::new(Interval::new(map(&r.x.l), map(&r.x.r)), Interval::new(map(&r.y.l), map(&r.y.r))))
                .collect(),
        };
        let fs = general_filaments(&mut rng, n);
        let fs2 = FilamentModel {
            filaments: fs
                .filaments
                .iter()
                .map(|f| Filament::new(f.points.iter().map(|(x, y)| (map(x), y * &scale)).collect()).unwrap())
                .collect(),
        };
        for mode in [Mode::Intersection, Mode::Overlap] {
            prop_assert_eq!(
                model_graph(&Model::Intervals(iv.clone()), mode).unwrap(),
                model_graph(&Model::Intervals(iv2.clone()), mode).unwrap()
            );
            prop_assert_eq!(
                model_graph(&Model::Rectangles(rs.clone()), mode).unwrap(),
                model_graph(&Model::Rectangles(rs2.clone()), mode).unwrap()
            );
        }
        prop_assert_eq!(
            model_graph(&Model::Filaments(fs), Mode::Intersection).unwrap(),
            model_graph(&Model::Filaments(fs2), Mode::Intersection).unwrap()
        );
    }
}

#[test]
fn touching_is_decided_exactly() {
    let eps = frac(1, 1_000_000_007) * frac(1, 1_000_000_009) * frac(1, 998_244_353);
    let a = Interval::new(int(0), int(1));
    let touching = Interval::new(int(1), int(2));
    let apart = Interval::new(int(1) + &eps, int(2));
    assert!(a.intersects(&touching));
    assert!(!a.intersects(&apart));
    let low = Filament::new(vec![(int(0), int(0)), (int(1), int(1)), (int(2), int(0))]).unwrap();
    let high = Filament::new(vec![(int(0), int(0)), (int(1), int(1) + &eps), (int(2), int(0))]).unwrap();
    let over = Filament::new(vec![(-&eps, int(0)), (int(1), int(1) + &eps), (int(2) + &eps, int(0))]).unwrap();
    assert!(low.intersects(&high));
    assert!(!low.intersects(&over));
}

#[test]
fn models_from_extracted_strategies() {
    for seed in 0..30 {
        let g = Arc::new(AbsGame::new(3));
        let p = RandomPresenter::new(g.clone(), seed, 3);
        let gg = extract_game_graph(g.as_ref(), &p, usize::MAX, DEFAULT_TREE_BUDGET).unwrap();
        let m = subtrees_from_abs_game_graph(&gg, 3).unwrap();
        assert_eq!(model_graph(&Model::Subtrees(m), Mode::Overlap).unwrap(), gg.graph);
        let g = Arc::new(CocoGame::new(2));
        let p = RandomPresenter::new(g.clone(), seed, 3);
        let gg = extract_game_graph(g.as_ref(), &p, usize::MAX, DEFAULT_TREE_BUDGET).unwrap();
        let m = filaments_from_coco_game_graph(&gg, 2).unwrap();
        assert_eq!(model_graph(&Model::Filaments(m), Mode::Intersection).unwrap(), gg.graph);
    }
}
