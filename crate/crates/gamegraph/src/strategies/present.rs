//! The recursive Presenter for the abstract overlap game that forces
//! `2m^(k-1) - 1` colors with clique number `k`.
//!
//! The presenter keeps no state: each call replays the recursion against
//! the recorded scenario and colors and stops at the first vertex not yet
//! presented.

use crate::engine::{Presenter, Scenario};
use crate::error::StrategyError;
use crate::games::{allowed, AbsRow};
use crate::geometry::Rel;
use crate::graph::{clique_number, Graph};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresentPresenter {
    pub k: usize,
    pub m: usize,
}

/// Counts from one complete run, plus the a-priori bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentAudit {
    pub vertices: usize,
    pub tests: usize,
    pub vertex_bound: u128,
    pub test_bound: u128,
    pub returns_checked: usize,
    pub colors: usize,
}

enum Stop {
    Next(AbsRow),
    Fail(StrategyError),
}

struct Replay<'a> {
    s: &'a Scenario<AbsRow>,
    colors: &'a [usize],
    cursor: usize,
    tests: usize,
    check: bool,
    returns_checked: usize,
}

fn distinct_colors(colors: &[usize], set: &[usize]) -> usize {
    set.iter().map(|&v| colors[v]).collect::<BTreeSet<_>>().len()
}

impl Replay<'_> {
    fn rel(&self, x: usize, z: usize) -> Rel {
        self.s.payload(z).row[x]
    }

    fn present(&mut self, k: usize, l: usize, m: usize, a1: &[usize], a2: &[usize]) -> Result<Vec<usize>, Stop> {
        let start = self.cursor;
        let r = if k == 1 {
            let n = self.cursor;
            let mut row = vec![Rel::Par; n];
            for &x in a1 {
                row[x] = Rel::Inc;
            }
            for &x in a2 {
                row[x] = Rel::Ovl;
            }
            let row = AbsRow::new(row);
            if n >= self.colors.len() {
                return Err(Stop::Next(row));
            }
            if *self.s.payload(n) != row {
                return Err(Stop::Fail(StrategyError::Protocol(format!(
                    "vertex {n} differs from the strategy's move"
                ))));
            }
            self.cursor += 1;
            vec![n]
        } else if l == 2 {
            self.present(k - 1, 2 * m, m, a1, a2)?
        } else {
            let r1 = self.present(k, l - 1, m, a1, a2)?;
            let a1r1: Vec<usize> = a1.iter().chain(&r1).copied().collect();
            let r2 = self.present(k, l - 1, m, &a1r1, a2)?;
            let r12: Vec<usize> = r1.iter().chain(&r2).copied().collect();
            self.tests += 1;
            let target = l * m.pow(k as u32 - 2) - 1;
            if distinct_colors(self.colors, &r12) >= target {
                r12
            } else {
                let a2r2: Vec<usize> = a2.iter().chain(&r2).copied().collect();
                let r3 = self.present(k - 1, 2 * m, m, &a1r1, &a2r2)?;
                r1.iter().chain(&r3).copied().collect()
            }
        };
        if self.check {
            let sset: Vec<usize> = (start..self.cursor).collect();
            self.check_return(k, l, m, a1, a2, &sset, &r).map_err(Stop::Fail)?;
            self.returns_checked += 1;
        }
        Ok(r)
    }

    #[allow(clippy::too_many_arguments)]
    fn check_return(
        &self,
        k: usize,
        l: usize,
        m: usize,
        a1: &[usize],
        a2: &[usize],
        sset: &[usize],
        r: &[usize],
    ) -> Result<(), StrategyError> {
        let fail = |what: &str| {
            Err(StrategyError::Assertion(format!(
                "present({k},{l},{m}) on {sset:?}: {what}"
            )))
        };
        let start = sset.first().copied().unwrap_or(self.cursor);
        for &y in sset {
            for x in 0..start {
                let want = if a1.contains(&x) {
                    Rel::Inc
                } else if a2.contains(&x) {
                    Rel::Ovl
                } else {
                    Rel::Par
                };
                if self.rel(x, y) != want {
                    return fail("relations to earlier vertices");
                }
            }
        }
        for (i, &x) in sset.iter().enumerate() {
            for (j, &y) in sset.iter().enumerate().skip(i + 1) {
                for &z in &sset[j + 1..] {
                    if !allowed(self.rel(x, y), self.rel(y, z)).contains(&self.rel(x, z)) {
                        return fail("axioms inside the presented set");
                    }
                }
            }
        }
        let in_r = |v: usize| r.contains(&v);
        for (i, &x) in sset.iter().enumerate() {
            for &y in &sset[i + 1..] {
                let rel = self.rel(x, y);
                if in_r(x) && in_r(y) && rel != Rel::Inc {
                    return fail("returned vertices must form an inclusion chain");
                }
                if rel == Rel::Inc && in_r(y) && !in_r(x) {
                    return fail("returned set must be closed upward under inclusion");
                }
                if rel == Rel::Par && in_r(x) {
                    return fail("a returned vertex is parallel to a later one");
                }
            }
        }
        let mut g = Graph::new(sset.len());
        for (i, &x) in sset.iter().enumerate() {
            for (j, &y) in sset.iter().enumerate().skip(i + 1) {
                if self.rel(x, y) == Rel::Ovl {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        if clique_number(&g).map_err(|e| StrategyError::Assertion(e.to_string()))? > k {
            return fail("overlap clique number exceeds k");
        }
        let used = distinct_colors(self.colors, r);
        let enough = if k == 1 {
            used * m + m >= l
        } else {
            used + 1 >= l * m.pow(k as u32 - 2)
        };
        if !enough {
            return fail("too few colors on the returned set");
        }
        Ok(())
    }
}

impl PresentPresenter {
    pub fn new(k: usize, m: usize) -> Self {
        assert!(k >= 1 && m >= 1);
        PresentPresenter { k, m }
    }

    /// Colors the strategy promises: `2m^(k-1) - 1`.
    pub fn forced_colors(&self) -> usize {
        2 * self.m.pow(self.k as u32 - 1) - 1
    }

    pub fn vertex_bound(&self) -> u128 {
        ((1u128 << (2 * self.m - 1)) - 1).pow(self.k as u32 - 1)
    }

    pub fn test_bound(&self) -> u128 {
        (1u128 << ((2 * self.m - 1) * (self.k - 1))) - 1
    }

    fn replay(&self, s: &Scenario<AbsRow>, colors: &[usize], check: bool) -> (Result<Vec<usize>, Stop>, usize, usize, usize) {
        let mut r = Replay {
            s,
            colors,
            cursor: 0,
            tests: 0,
            check,
            returns_checked: 0,
        };
        let out = r.present(self.k, 2 * self.m, self.m, &[], &[]);
        (out, r.cursor, r.tests, r.returns_checked)
    }

    /// Replays a finished run with every recursive return checked, and
    /// reports the counts against their bounds.
    pub fn audit(&self, s: &Scenario<AbsRow>, colors: &[usize]) -> Result<PresentAudit, StrategyError> {
        let colors = &colors[..colors.len().min(s.len())];
        let (out, vertices, tests, returns_checked) = self.replay(s, colors, true);
        let r = match out {
            Ok(r) => r,
            Err(Stop::Next(_)) => return Err(StrategyError::Protocol("the run is not finished".into())),
            Err(Stop::Fail(e)) => return Err(e),
        };
        if vertices != s.len() {
            return Err(StrategyError::Protocol("scenario continues past the strategy".into()));
        }
        let audit = PresentAudit {
            vertices,
            tests,
            vertex_bound: self.vertex_bound(),
            test_bound: self.test_bound(),
            returns_checked,
            colors: distinct_colors(colors, &r),
        };
        if audit.vertices as u128 > audit.vertex_bound || audit.tests as u128 > audit.test_bound {
            return Err(StrategyError::Assertion(format!("run exceeds its size bounds: {audit:?}")));
        }
        Ok(audit)
    }
}

impl Presenter<AbsRow> for PresentPresenter {
    fn name(&self) -> String {
        format!("present({},{})", self.k, self.m)
    }

    fn next_move(&self, s: &Scenario<AbsRow>, colors: &[usize]) -> Result<Option<AbsRow>, StrategyError> {
        match self.replay(s, colors, false).0 {
            Err(Stop::Next(row)) => Ok(Some(row)),
            Err(Stop::Fail(e)) => Err(e),
            Ok(_) => {
                self.audit(s, colors)?;
                Ok(None)
            }
        }
    }
}
