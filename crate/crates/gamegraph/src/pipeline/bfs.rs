use crate::error::ModelError;
use crate::geometry::{is_clean, Model};
use crate::graph::{k_cliques, Graph};
use serde::{Deserialize, Serialize};

/// Levels `L_0, L_1, …` of the k-clique breadth-first search. `from_if[d]`
/// tells whether `L_d` came from the clique branch rather than the
/// minimum-index fallback.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDecomposition {
    pub levels: Vec<Vec<usize>>,
    pub from_if: Vec<bool>,
}

impl LevelDecomposition {
    /// Level index of every vertex.
    pub fn level_of(&self, n: usize) -> Vec<usize> {
        let mut at = vec![usize::MAX; n];
        for (d, l) in self.levels.iter().enumerate() {
            for &v in l {
                at[v] = d;
            }
        }
        at
    }
}

/// Runs the k-clique BFS on `g`, where `order` lists the vertices from
/// the smallest index to the largest.
pub fn kclique_bfs(g: &Graph, order: &[usize], k: usize) -> LevelDecomposition {
    let n = g.n();
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    assert!(rank.iter().all(|&r| r != usize::MAX), "order must list every vertex");
    let cliques = k_cliques(g, k);
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, q) in cliques.iter().enumerate() {
        for &v in q {
            member[v].push(c);
        }
    }
    let mut left: Vec<usize> = vec![k; cliques.len()];
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut out = LevelDecomposition {
        levels: Vec::new(),
        from_if: Vec::new(),
    };
    while remaining > 0 {
        let mut level: Vec<usize> = cliques
            .iter()
            .zip(&left)
            .filter(|(_, &l)| l == 1)
            .map(|(q, _)| *q.iter().find(|&&v| alive[v]).unwrap())
            .collect();
        let from_if = !level.is_empty();
        if !from_if {
            level.push(*order.iter().find(|&&v| alive[v]).unwrap());
        }
        level.sort_by_key(|&v| rank[v]);
        level.dedup();
        for &v in &level {
            alive[v] = false;
            remaining -= 1;
            for &c in &member[v] {
                left[c] -= 1;
            }
        }
        out.levels.push(level);
        out.from_if.push(from_if);
    }
    out
}

/// Order with no member strictly inside a later one: decreasing size,
/// ties by index.
pub fn overlap_model_order(model: &Model) -> Result<Vec<usize>, ModelError> {
    let sizes = (0..model.len())
        .map(|v| model.size(v))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| ModelError::Precondition(format!("{} models have no containment order", model.kind())))?;
    let mut order: Vec<usize> = (0..model.len()).collect();
    order.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));
    Ok(order)
}

/// Is `order` containment-compatible: no member strictly inside a later one?
pub fn is_containment_compatible(model: &Model, order: &[usize]) -> bool {
    order.iter().enumerate().all(|(i, &a)| {
        order[i + 1..]
            .iter()
            .all(|&b| !(model.contains(b, a) == Some(true) && model.contains(a, b) != Some(true)))
    })
}

/// Checks the two level properties: every k-clique has two vertices in one
/// level or in consecutive levels, and every level is clean in the model.
pub fn check_levels(model: &Model, g: &Graph, dec: &LevelDecomposition, k: usize) -> Result<(), String> {
    let at = dec.level_of(g.n());
    for q in k_cliques(g, k) {
        let mut ds: Vec<usize> = q.iter().map(|&v| at[v]).collect();
        ds.sort_unstable();
        if !ds.windows(2).any(|w| w[1] - w[0] <= 1) {
            return Err(format!("clique {q:?} spreads over levels {ds:?}"));
        }
    }
    for (d, l) in dec.levels.iter().enumerate() {
        if !is_clean(&model.restrict(l)).map_err(|e| e.to_string())? {
            return Err(format!("level {d} is not clean"));
        }
    }
    Ok(())
}
