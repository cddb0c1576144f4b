//! Abstract overlap game `γABS(k)`: Presenter reveals, for the new vertex,
//! whether each earlier vertex includes it, overlaps it, or is parallel.

use crate::engine::{exceeds_clique_bound, Game, Scenario};
use crate::geometry::Rel;
use rand::seq::SliceRandom;
use rand::RngCore;
use serde::{Deserialize, Serialize};

/// `row[j]` is the relation of earlier vertex `j` to the new vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbsRow {
    pub row: Vec<Rel>,
}

impl AbsRow {
    pub fn new(row: Vec<Rel>) -> Self {
        AbsRow { row }
    }

    pub fn parallel(n: usize) -> Self {
        AbsRow { row: vec![Rel::Par; n] }
    }
}

/// Relations allowed for `x` vs `z` given `x` vs `y` and `y` vs `z`, for
/// `x ≺ y ≺ z`.
pub fn allowed(xy: Rel, yz: Rel) -> &'static [Rel] {
    use Rel::*;
    match (xy, yz) {
        (Inc, Inc) => &[Inc],
        (Inc, Ovl) => &[Inc, Ovl],
        (Ovl, Inc) => &[Ovl, Par],
        (Par, _) => &[Par],
        _ => &Rel::ALL,
    }
}

/// Relation of `x` to `z` for `x < z` in an ABS scenario.
pub fn abs_rel(s: &Scenario<AbsRow>, x: usize, z: usize) -> Rel {
    debug_assert!(x < z);
    s.payload(z).row[x]
}

/// Checks the four axioms on the triples whose last vertex is the new one.
pub fn check_row(s: &Scenario<AbsRow>, row: &[Rel]) -> Result<(), String> {
    if row.len() != s.len() {
        return Err(format!("row must have {} entries", s.len()));
    }
    for y in 0..row.len() {
        for x in 0..y {
            if !allowed(abs_rel(s, x, y), row[y]).contains(&row[x]) {
                return Err(format!("relations of {x}, {y} and the new vertex break the axioms"));
            }
        }
    }
    Ok(())
}

fn edges_of(row: &[Rel]) -> Vec<usize> {
    (0..row.len()).filter(|&j| row[j] == Rel::Ovl).collect()
}

/// Options for position `x` once positions above it are filled.
fn options(s: &Scenario<AbsRow>, row: &[Rel], x: usize) -> Vec<Rel> {
    Rel::ALL
        .into_iter()
        .filter(|r| (x + 1..row.len()).all(|y| allowed(abs_rel(s, x, y), row[y]).contains(r)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbsGame {
    pub k: usize,
}

impl AbsGame {
    pub fn new(k: usize) -> Self {
        AbsGame { k }
    }
}

impl Game for AbsGame {
    type Move = AbsRow;

    fn name(&self) -> String {
        format!("abs({})", self.k)
    }

    fn clique_bound(&self) -> usize {
        self.k
    }

    fn check_move(&self, s: &Scenario<AbsRow>, m: &AbsRow) -> Result<Vec<usize>, String> {
        check_row(s, &m.row)?;
        let edges = edges_of(&m.row);
        if exceeds_clique_bound(s, &edges, self.k) {
            return Err(format!("clique number would exceed {}", self.k));
        }
        Ok(edges)
    }

    fn moves(&self, s: &Scenario<AbsRow>) -> Vec<AbsRow> {
        fn rec(g: &AbsGame, s: &Scenario<AbsRow>, row: &mut Vec<Rel>, x: usize, out: &mut Vec<AbsRow>) {
            if x == 0 {
                let m = AbsRow::new(row.clone());
                if !exceeds_clique_bound(s, &edges_of(row), g.k) {
                    out.push(m);
                }
                return;
            }
            for r in options(s, row, x - 1) {
                row[x - 1] = r;
                rec(g, s, row, x - 1, out);
            }
            row[x - 1] = Rel::Par;
        }
        let mut out = Vec::new();
        let mut row = vec![Rel::Par; s.len()];
        rec(self, s, &mut row, s.len(), &mut out);
        out.sort();
        out
    }

    fn random_move(&self, s: &Scenario<AbsRow>, rng: &mut dyn RngCore) -> Option<AbsRow> {
        for _ in 0..64 {
            let mut row = vec![Rel::Par; s.len()];
            for x in (0..s.len()).rev() {
                row[x] = *options(s, &row, x).choose(rng).unwrap();
            }
            if !exceeds_clique_bound(s, &edges_of(&row), self.k) {
                return Some(AbsRow::new(row));
            }
        }
        Some(AbsRow::parallel(s.len()))
    }
}
