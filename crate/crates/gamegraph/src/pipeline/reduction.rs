use super::bfs::{is_containment_compatible, kclique_bfs, overlap_model_order};
use super::merge_colors;
use crate::error::ModelError;
use crate::geometry::{is_clean, model_graph, Mode, Model};
use crate::graph::{clique_number, dsatur_coloring, is_valid_coloring, optimal_coloring, palette_size, Coloring, Graph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Exact coloring up to 30 vertices, DSATUR beyond.
pub fn exact_clean_colorer(g: &Graph) -> Result<Vec<usize>, ModelError> {
    if g.n() <= 30 {
        Ok(optimal_coloring(g)?)
    } else {
        Ok(dsatur_coloring(g))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanReduction {
    pub coloring: Coloring,
    pub omega: usize,
    /// Largest palette the clean colorer used at each clique bound.
    pub alpha: BTreeMap<usize, usize>,
    /// `∏_{j=2}^{ω} 2α_j`, with `α_j = 1` where no level needed coloring.
    pub bound: u128,
}

struct Ctx<'a> {
    model: &'a Model,
    g: Graph,
    colorer: &'a dyn Fn(&Graph) -> Result<Vec<usize>, ModelError>,
    alpha: BTreeMap<usize, usize>,
}

impl Ctx<'_> {
    /// Colors the vertices `vs`, listed in a containment-compatible order.
    fn color(&mut self, vs: &[usize]) -> Result<Vec<usize>, ModelError> {
        let sub = self.g.induced(vs);
        let k = clique_number(&sub)?;
        if k <= 1 {
            return Ok(vec![0; vs.len()]);
        }
        let order: Vec<usize> = (0..vs.len()).collect();
        let dec = kclique_bfs(&sub, &order, k);
        let mut class = vec![0; vs.len()];
        let mut parity = vec![0; vs.len()];
        for (d, level) in dec.levels.iter().enumerate() {
            let global: Vec<usize> = level.iter().map(|&i| vs[i]).collect();
            if !is_clean(&self.model.restrict(&global))? {
                return Err(ModelError::Assertion(format!("level {d} is not clean")));
            }
            let lg = sub.induced(level);
            let cs = (self.colorer)(&lg)?;
            if !is_valid_coloring(&lg, &cs, 2) && lg.n() > 0 {
                return Err(ModelError::Assertion("clean colorer returned an improper coloring".into()));
            }
            let a = self.alpha.entry(k).or_insert(0);
            *a = (*a).max(palette_size(&cs));
            for (j, &i) in level.iter().enumerate() {
                class[i] = cs[j];
                parity[i] = d % 2;
            }
        }
        let mut parts: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for i in 0..vs.len() {
            parts.entry((class[i], parity[i])).or_default().push(i);
        }
        let mut keys = vec![(0, 0); vs.len()];
        for (p, (_, idx)) in parts.iter().enumerate() {
            let inner: Vec<usize> = idx.iter().map(|&i| vs[i]).collect();
            for (j, c) in self.color(&inner)?.into_iter().enumerate() {
                keys[idx[j]] = (p, c);
            }
        }
        Ok(merge_colors(&keys).colors)
    }
}

/// Colors the overlap graph of `model` by recursing on clique size: each
/// k-clique BFS level is clean and colored by `colorer`; every class split
/// by level parity has smaller clique number.
pub fn clean_reduction_color(
    model: &Model,
    colorer: &dyn Fn(&Graph) -> Result<Vec<usize>, ModelError>,
) -> Result<CleanReduction, ModelError> {
    let g = model_graph(model, Mode::Overlap)?;
    let order = overlap_model_order(model)?;
    debug_assert!(is_containment_compatible(model, &order));
    let omega = clique_number(&g)?;
    let mut ctx = Ctx {
        model,
        g,
        colorer,
        alpha: BTreeMap::new(),
    };
    let colors = ctx.color(&order)?;
    let mut full = vec![0; model.len()];
    for (i, &v) in order.iter().enumerate() {
        full[v] = colors[i];
    }
    let coloring = Coloring::new(full).normalized();
    if !model.is_empty() && !is_valid_coloring(&ctx.g, &coloring.colors, 2) {
        return Err(ModelError::Assertion("reduction produced an improper coloring".into()));
    }
    let bound: u128 = (2..=omega).map(|j| 2 * *ctx.alpha.get(&j).unwrap_or(&1) as u128).product();
    if coloring.palette_size() as u128 > bound.max(1) {
        return Err(ModelError::Assertion("palette exceeds the product bound".into()));
    }
    Ok(CleanReduction {
        coloring,
        omega,
        alpha: ctx.alpha,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Interval, IntervalModel};
    use crate::pipeline::bfs::tests::figure4;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn independent_model_uses_one_color() {
        let m = Model::Intervals(IntervalModel {
            intervals: vec![Interval::ints(0, 1), Interval::ints(2, 3), Interval::ints(-5, 10)],
        });
        let r = clean_reduction_color(&m, &exact_clean_colorer).unwrap();
        assert_eq!(r.coloring.palette_size(), 1);
        assert_eq!(r.bound, 1);
    }

    #[test]
    fn random_interval_models() {
        let mut rng = StdRng::seed_from_u64(4);
        for _ in 0..60 {
            let n = rng.gen_range(1..30);
            let intervals = (0..n)
                .map(|_| {
                    let a = rng.gen_range(0..60);
                    Interval::ints(a, a + rng.gen_range(1..15))
                })
                .collect();
            let m = Model::Intervals(IntervalModel { intervals });
            let r = clean_reduction_color(&m, &exact_clean_colorer).unwrap();
            assert!(r.coloring.palette_size() as u128 <= r.bound);
        }
    }

    #[test]
    fn figure4_reduction() {
        let r = clean_reduction_color(&figure4(), &exact_clean_colorer).unwrap();
        assert_eq!(r.omega, 4);
        assert!(r.coloring.palette_size() as u128 <= r.bound);
    }

    #[test]
    fn improper_colorer_is_reported() {
        // A 5-cycle whose BFS from the longest interval puts an edge in level 2.
        let m = Model::Intervals(IntervalModel {
            intervals: vec![
                Interval::ints(0, 10),
                Interval::ints(5, 12),
                Interval::ints(-3, 2),
                Interval::ints(11, 20),
                Interval::ints(-2, 15),
            ],
        });
        assert_eq!(clean_reduction_color(&m, &exact_clean_colorer).unwrap().omega, 2);
        let bad = |g: &Graph| Ok(vec![0; g.n()]);
        assert!(matches!(clean_reduction_color(&m, &bad), Err(ModelError::Assertion(_))));
    }
}
