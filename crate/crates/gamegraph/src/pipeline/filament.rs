use super::merge_colors;
use crate::engine::color_game_graph;
use crate::error::ModelError;
use crate::games::CocoGame;
use crate::geometry::{coco_certificate_from_filaments, filament_graph, FilamentModel, Model};
use crate::graph::{clique_number, dsatur_coloring, is_valid_coloring, optimal_coloring, Coloring, Graph};
use crate::strategies::CocoOnline;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilamentColoring {
    pub coloring: Coloring,
    /// Members of each domain-non-overlapping class.
    pub classes: Vec<Vec<usize>>,
    /// Clique number of the intersection graph inside each class.
    pub class_omega: Vec<usize>,
}

/// Splits by a proper coloring of the domain overlap graph, then colors
/// each domain-non-overlapping class by replaying the co-comparability
/// on-line algorithm over its certificate game graph.
pub fn filament_color(model: &FilamentModel) -> Result<FilamentColoring, ModelError> {
    Model::Filaments(model.clone()).validate()?;
    let n = model.filaments.len();
    let doms: Vec<_> = model.filaments.iter().map(|f| f.domain()).collect();
    let mut dg = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if doms[a].overlaps(&doms[b]) {
                dg.add_edge(a, b).unwrap();
            }
        }
    }
    let split = if n <= 30 { optimal_coloring(&dg)? } else { dsatur_coloring(&dg) };
    let classes = Coloring::new(split).classes();
    let mut keys = vec![(0, 0); n];
    let mut class_omega = Vec::new();
    for (ci, vs) in classes.iter().enumerate() {
        let sub = FilamentModel {
            filaments: vs.iter().map(|&v| model.filaments[v].clone()).collect(),
        };
        let k = clique_number(&filament_graph(&sub))?.max(1);
        let gg = coco_certificate_from_filaments(&sub, k)?;
        let cs = color_game_graph(&gg, &CocoGame::new(k), &CocoOnline::new(k))?;
        for (j, &v) in vs.iter().enumerate() {
            keys[v] = (ci, cs.colors[j]);
        }
        class_omega.push(k);
    }
    let coloring = merge_colors(&keys);
    if n > 0 && !is_valid_coloring(&filament_graph(model), &coloring.colors, 2) {
        return Err(ModelError::Assertion("filament coloring is improper".into()));
    }
    Ok(FilamentColoring {
        coloring,
        classes,
        class_omega,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Filament;
    use crate::rational::{frac, int};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// A filament over `[a, b]` through random interior heights.
    pub(crate) fn random_filament(rng: &mut StdRng, a: i64, b: i64) -> Filament {
        let steps = rng.gen_range(1..4);
        let mut pts = vec![(int(a), int(0))];
        for s in 1..=steps {
            pts.push((int(a) + (int(b) - int(a)) * frac(s, steps + 1), int(rng.gen_range(1..10))));
        }
        pts.push((int(b), int(0)));
        Filament::new(pts).unwrap()
    }

    #[test]
    fn disjoint_domains_share_one_color() {
        let mut rng = StdRng::seed_from_u64(1);
        let m = FilamentModel {
            filaments: (0..5).map(|i| random_filament(&mut rng, 3 * i, 3 * i + 2)).collect(),
        };
        let r = filament_color(&m).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert_eq!(r.coloring.palette_size(), 1);
    }

    #[test]
    fn random_general_models_are_proper() {
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..100 {
            let n = rng.gen_range(1..20);
            let filaments = (0..n)
                .map(|_| {
                    let a = rng.gen_range(0..30);
                    let len = rng.gen_range(1..12);
                    random_filament(&mut rng, a, a + len)
                })
                .collect();
            filament_color(&FilamentModel { filaments }).unwrap();
        }
    }
}
