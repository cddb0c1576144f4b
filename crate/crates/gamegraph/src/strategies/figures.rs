//! The two small Presenter strategies forcing three colors.

use crate::engine::{Presenter, Scenario};
use crate::error::StrategyError;
use crate::games::DownSet;
use crate::geometry::Interval;

/// Interval presenter forcing 3 colors with clique number 2. Two disjoint
/// intervals first; if they get different colors a third meets both,
/// otherwise a chain `d`, `e` bridges them.
#[derive(Debug, Clone, Copy, Default)]
pub struct Figure2Presenter;

impl Figure2Presenter {
    pub fn a() -> Interval {
        Interval::fracs((1, 4), (9, 4))
    }
    pub fn b() -> Interval {
        Interval::fracs((11, 4), (19, 4))
    }
    pub fn c() -> Interval {
        Interval::fracs((5, 4), (15, 4))
    }
    pub fn d() -> Interval {
        Interval::fracs((3, 5), (13, 5))
    }
    pub fn e() -> Interval {
        Interval::fracs((12, 5), (22, 5))
    }
}

impl Presenter<Interval> for Figure2Presenter {
    fn name(&self) -> String {
        "figure2".into()
    }

    fn next_move(&self, s: &Scenario<Interval>, colors: &[usize]) -> Result<Option<Interval>, StrategyError> {
        Ok(match s.len() {
            0 => Some(Self::a()),
            1 => Some(Self::b()),
            2 if colors[0] != colors[1] => Some(Self::c()),
            2 => Some(Self::d()),
            3 if *s.payload(2) == Self::d() => Some(Self::e()),
            _ => None,
        })
    }
}

/// Up-growing order presenter forcing 3 colors with width 2: `a`, `b`
/// incomparable, `c` above both, then one more vertex above whichever of
/// `a`, `b` shares its color with `c`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Figure5Presenter;

impl Presenter<DownSet> for Figure5Presenter {
    fn name(&self) -> String {
        "figure5".into()
    }

    fn next_move(&self, s: &Scenario<DownSet>, colors: &[usize]) -> Result<Option<DownSet>, StrategyError> {
        Ok(match s.len() {
            0 | 1 => Some(DownSet::new(vec![])),
            2 => Some(DownSet::new(vec![0, 1])),
            3 if colors[2] == colors[0] => Some(DownSet::new(vec![0])),
            3 if colors[2] == colors[1] => Some(DownSet::new(vec![1])),
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::run_game;
    use crate::games::{CocoGame, IntGame};
    use crate::strategies::FirstFit;

    #[test]
    fn figure2_against_first_fit() {
        let t = run_game(&IntGame::new(2), &Figure2Presenter, &mut FirstFit).unwrap();
        assert_eq!(t.rounds(), 4);
        assert_eq!(t.colors_used, 3);
        assert_eq!(t.coloring.colors[3], 2);
    }

    #[test]
    fn figure5_against_first_fit() {
        let t = run_game(&CocoGame::new(2), &Figure5Presenter, &mut FirstFit).unwrap();
        assert!(t.rounds() <= 4);
        assert_eq!(t.colors_used, 3);
    }
}
