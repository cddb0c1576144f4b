use crate::engine::{Game, Scenario};
use rand::RngCore;

/// Number of blocks in the greedy partition of a presentation into runs of
/// consecutive vertices with no edge inside a run.
pub fn greedy_blocks<M: Clone>(s: &Scenario<M>) -> usize {
    block_state(s).1
}

/// Start of the current block and the block count.
pub(crate) fn block_state<M: Clone>(s: &Scenario<M>) -> (usize, usize) {
    let mut start = 0;
    let mut blocks = usize::from(!s.is_empty());
    for v in 0..s.len() {
        if s.neighbors(v).iter().any(|&u| u >= start && u < v) {
            start = v;
            blocks += 1;
        }
    }
    (start, blocks)
}

/// Restricts a game to presentations that split into at most `b` blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WithBlocks<G> {
    pub inner: G,
    pub b: usize,
}

impl<G: Game> WithBlocks<G> {
    pub fn new(inner: G, b: usize) -> Self {
        WithBlocks { inner, b }
    }

    fn blocks_after(&self, s: &Scenario<G::Move>, edges: &[usize]) -> usize {
        let (start, blocks) = block_state(s);
        if s.is_empty() {
            1
        } else if edges.iter().any(|&u| u >= start) {
            blocks + 1
        } else {
            blocks
        }
    }
}

impl<G: Game> Game for WithBlocks<G> {
    type Move = G::Move;

    fn name(&self) -> String {
        let n = self.inner.name();
        format!("{},{})", n.trim_end_matches(')'), self.b)
    }

    fn clique_bound(&self) -> usize {
        self.inner.clique_bound()
    }

    fn forbidden_class_clique(&self) -> usize {
        self.inner.forbidden_class_clique()
    }

    fn check_move(&self, s: &Scenario<G::Move>, m: &G::Move) -> Result<Vec<usize>, String> {
        let edges = self.inner.check_move(s, m)?;
        if self.blocks_after(s, &edges) > self.b {
            return Err(format!("more than {} blocks", self.b));
        }
        Ok(edges)
    }

    fn moves(&self, s: &Scenario<G::Move>) -> Vec<G::Move> {
        self.inner
            .moves(s)
            .into_iter()
            .filter(|m| self.check_move(s, m).is_ok())
            .collect()
    }

    fn random_move(&self, s: &Scenario<G::Move>, rng: &mut dyn RngCore) -> Option<G::Move> {
        for _ in 0..64 {
            let m = self.inner.random_move(s, rng)?;
            if self.check_move(s, &m).is_ok() {
                return Some(m);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{AbsGame, AbsRow};
    use crate::geometry::Rel::*;

    #[test]
    fn blocks_count_greedily() {
        let g = WithBlocks::new(AbsGame::new(2), 2);
        assert_eq!(g.name(), "abs(2,2)");
        let mut s = Scenario::new();
        for row in [vec![], vec![Inc], vec![Ovl, Ovl]] {
            let m = AbsRow::new(row);
            let e = g.check_move(&s, &m).unwrap();
            s.push(m, e).unwrap();
        }
        assert_eq!(greedy_blocks(&s), 2);
        let third = AbsRow::new(vec![Par, Par, Ovl]);
        assert!(g.check_move(&s, &third).is_err());
        assert!(g.check_move(&s, &AbsRow::new(vec![Ovl, Ovl, Par])).is_ok());
    }
}
