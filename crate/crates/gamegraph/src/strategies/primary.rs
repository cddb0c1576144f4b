//! Primary/secondary decomposition behind the on-line algorithms for the
//! abstract and interval overlap games.
//!
//! A new vertex `z` is secondary when some primary `y` includes it and some
//! `x` presented before `y` overlaps both; it then joins `S(y)`. Primaries are colored by a
//! triple `(φ, ψ, ζ)` and each `S(p)` is colored by its own sub-instance,
//! giving `ξ`. The final color is the tuple, numbered by first appearance.

use super::chains::ChainPartitioner;
use crate::engine::{Algorithm, Scenario};
use crate::error::StrategyError;
use crate::games::{interval_rel, AbsRow};
use crate::geometry::{Interval, Rel};
use std::collections::HashMap;

/// Colors one secondary set on-line. `rel(j)` is the relation of the
/// `j`-th earlier member to the new one.
pub trait SecondaryColorer: Clone + Send {
    fn fresh(parent_k: usize) -> Self;
    fn add(&mut self, rel: &dyn Fn(usize) -> Rel) -> Result<usize, StrategyError>;
}

impl SecondaryColorer for ChainPartitioner {
    fn fresh(parent_k: usize) -> Self {
        ChainPartitioner::new(Some(parent_k.saturating_sub(1)))
    }

    fn add(&mut self, rel: &dyn Fn(usize) -> Rel) -> Result<usize, StrategyError> {
        ChainPartitioner::add(self, &|j| rel(j) == Rel::Inc)
    }
}

/// Snapshot of the decomposition for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub primary: Vec<bool>,
    /// The primary `p` with `v ∈ S(p)`.
    pub owner: Vec<usize>,
    pub phi: Vec<usize>,
    pub psi: Vec<usize>,
    pub zeta: Vec<usize>,
    pub xi: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PrimaryMachine<X> {
    k: usize,
    use_psi: bool,
    rows: Vec<Vec<Rel>>,
    primary: Vec<bool>,
    owner: Vec<usize>,
    members: Vec<Vec<usize>>,
    phi: Vec<usize>,
    psi: Vec<usize>,
    zeta: Vec<usize>,
    xi: Vec<usize>,
    sub: Vec<Option<X>>,
    tuples: HashMap<(usize, usize, usize, usize), usize>,
    colors: Vec<usize>,
}

impl<X: SecondaryColorer> PrimaryMachine<X> {
    pub fn new(k: usize, use_psi: bool) -> Self {
        PrimaryMachine {
            k,
            use_psi,
            rows: Vec::new(),
            primary: Vec::new(),
            owner: Vec::new(),
            members: Vec::new(),
            phi: Vec::new(),
            psi: Vec::new(),
            zeta: Vec::new(),
            xi: Vec::new(),
            sub: Vec::new(),
            tuples: HashMap::new(),
            colors: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn decomposition(&self) -> Decomposition {
        Decomposition {
            primary: self.primary.clone(),
            owner: self.owner.clone(),
            phi: self.phi.clone(),
            psi: self.psi.clone(),
            zeta: self.zeta.clone(),
            xi: self.xi.clone(),
        }
    }

    fn primaries(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&v| self.primary[v])
    }

    /// Adds the next vertex given its relation row and returns its color.
    pub fn add_row(&mut self, row: Vec<Rel>) -> Result<usize, StrategyError> {
        let z = self.len();
        if row.len() != z {
            return Err(StrategyError::Protocol(format!("row of length {} for vertex {z}", row.len())));
        }
        let hosts: Vec<usize> = self
            .primaries()
            .filter(|&y| row[y] == Rel::Inc && (0..y).any(|x| row[x] == Rel::Ovl && self.rows[y][x] == Rel::Ovl))
            .collect();
        if hosts.len() > 1 {
            return Err(StrategyError::Assertion(format!(
                "vertex {z} is secondary for several primaries {hosts:?}"
            )));
        }
        let host = hosts.first().copied().unwrap_or(z);
        let (phi, psi, zeta, xi) = if host != z {
            let mem = &self.members[host];
            let xi = self.sub[host].as_mut().unwrap().add(&|j| row[mem[j]])?;
            (self.phi[host], self.psi[host], self.zeta[host], xi)
        } else {
            let (phi, psi, zeta) = self.color_primary(z, &row)?;
            (phi, psi, zeta, 0)
        };
        self.rows.push(row);
        self.owner.push(host);
        self.members.push(Vec::new());
        self.members[host].push(z);
        self.primary.push(host == z);
        self.phi.push(phi);
        self.psi.push(psi);
        self.zeta.push(zeta);
        if host == z {
            let mut sub = X::fresh(self.k);
            let xi = sub.add(&|_| unreachable!("first member has no predecessors"))?;
            self.sub.push(Some(sub));
            self.xi.push(xi);
        } else {
            self.sub.push(None);
            self.xi.push(xi);
        }
        let key = (self.phi[z], self.psi[z], self.zeta[z], self.xi[z]);
        let next = self.tuples.len();
        let c = *self.tuples.entry(key).or_insert(next);
        self.colors.push(c);
        Ok(c)
    }

    fn color_primary(&self, z: usize, row: &[Rel]) -> Result<(usize, usize, usize), StrategyError> {
        let prim: Vec<usize> = self.primaries().collect();
        // Primaries y forming a triple x ≬ y ≺ z with neither x ∥ z nor y ∥ z.
        let blocked: Vec<usize> = prim
            .iter()
            .copied()
            .filter(|&y| {
                row[y] != Rel::Par
                    && prim
                        .iter()
                        .any(|&x| x < y && row[x] != Rel::Par && self.rows[y][x] == Rel::Ovl)
            })
            .map(|y| self.phi[y])
            .collect();
        let phi = (0..self.k)
            .find(|c| !blocked.contains(c))
            .ok_or_else(|| StrategyError::Protocol(format!("no free primary color for vertex {z}")))?;
        let psi = if self.use_psi {
            let nbr: Vec<usize> = prim
                .iter()
                .copied()
                .filter(|&q| self.phi[q] == phi && row[q] == Rel::Ovl)
                .map(|q| self.psi[q])
                .collect();
            super::basic::first_fit_color(nbr)
        } else {
            0
        };
        let rivals: Vec<usize> = prim
            .iter()
            .copied()
            .filter(|&p| {
                self.phi[p] == phi
                    && self.psi[p] == psi
                    && row[p] != Rel::Ovl
                    && self.members[p].iter().any(|&x| row[x] == Rel::Ovl)
            })
            .collect();
        let zeta = match rivals.as_slice() {
            [] => 0,
            [p] => 1 - self.zeta[*p],
            _ => {
                return Err(StrategyError::Assertion(format!(
                    "vertex {z} conflicts with several secondary sets {rivals:?}"
                )))
            }
        };
        Ok((phi, psi, zeta))
    }
}

/// The recursive colorer of the abstract overlap game with clique bound `k`.
#[derive(Debug, Clone)]
pub enum AbsCore {
    /// `k <= 1`: the graph is edgeless.
    Single(usize),
    Machine(Box<PrimaryMachine<AbsCore>>),
}

impl AbsCore {
    pub fn new(k: usize) -> Self {
        if k <= 1 {
            AbsCore::Single(0)
        } else {
            AbsCore::Machine(Box::new(PrimaryMachine::new(k, true)))
        }
    }
}

impl SecondaryColorer for AbsCore {
    fn fresh(parent_k: usize) -> Self {
        AbsCore::new(parent_k - 1)
    }

    fn add(&mut self, rel: &dyn Fn(usize) -> Rel) -> Result<usize, StrategyError> {
        match self {
            AbsCore::Single(n) => {
                if (0..*n).any(|j| rel(j) == Rel::Ovl) {
                    return Err(StrategyError::Protocol("edge in a graph with clique number 1".into()));
                }
                *n += 1;
                Ok(0)
            }
            AbsCore::Machine(m) => {
                let row = (0..m.len()).map(rel).collect();
                m.add_row(row)
            }
        }
    }
}

/// `⌊log2 b⌋ + 3`, the First-fit level bound for `b` blocks.
pub fn first_fit_levels(b: usize) -> usize {
    (usize::BITS - 1 - b.max(1).leading_zeros()) as usize + 3
}

/// Palette bound `2kℓ·B(k-1)` of the abstract overlap algorithm, `B(1) = 1`.
pub fn abs_palette_bound(k: usize, b: usize) -> usize {
    if k <= 1 {
        1
    } else {
        2 * k * first_fit_levels(b) * abs_palette_bound(k - 1, b)
    }
}

pub fn iov_palette_bound(k: usize, b: usize) -> usize {
    2 * k * first_fit_levels(b) * binom2(k).max(1)
}

pub fn iov3_palette_bound(k: usize) -> usize {
    2 * k * binom2(k).max(1)
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// On-line algorithm for `γABS(k, b)`.
#[derive(Debug, Clone)]
pub struct AbsOnline {
    pub k: usize,
    pub b: usize,
    core: AbsCore,
}

impl AbsOnline {
    pub fn new(k: usize, b: usize) -> Self {
        AbsOnline { k, b, core: AbsCore::new(k) }
    }

    pub fn palette_bound(&self) -> usize {
        abs_palette_bound(self.k, self.b)
    }

    pub fn decomposition(&self) -> Option<Decomposition> {
        match &self.core {
            AbsCore::Machine(m) => Some(m.decomposition()),
            AbsCore::Single(_) => None,
        }
    }

    fn done(&self) -> usize {
        match &self.core {
            AbsCore::Single(n) => *n,
            AbsCore::Machine(m) => m.len(),
        }
    }
}

impl Algorithm<AbsRow> for AbsOnline {
    fn name(&self) -> String {
        format!("abs_online({},{})", self.k, self.b)
    }

    fn color(&mut self, s: &Scenario<AbsRow>, _: &[usize]) -> Result<usize, StrategyError> {
        if self.done() + 1 != s.len() {
            self.core = AbsCore::new(self.k);
            for v in 0..s.len() - 1 {
                let row = &s.payload(v).row;
                self.core.add(&|j| row[j])?;
            }
        }
        let row = &s.payload(s.len() - 1).row;
        self.core.add(&|j| row[j])
    }

    fn box_clone(&self) -> Box<dyn Algorithm<AbsRow>> {
        Box::new(self.clone())
    }
}

/// On-line algorithm for the interval overlap games. With `triangle_free`
/// it drops the First-fit level and only guarantees triangle-free classes.
#[derive(Debug, Clone)]
pub struct IovOnline {
    pub k: usize,
    pub b: usize,
    pub triangle_free: bool,
    machine: PrimaryMachine<ChainPartitioner>,
}

impl IovOnline {
    pub fn new(k: usize, b: usize) -> Self {
        IovOnline {
            k,
            b,
            triangle_free: false,
            machine: PrimaryMachine::new(k, true),
        }
    }

    pub fn triangle_free(k: usize) -> Self {
        IovOnline {
            k,
            b: 0,
            triangle_free: true,
            machine: PrimaryMachine::new(k, false),
        }
    }

    pub fn palette_bound(&self) -> usize {
        if self.triangle_free {
            iov3_palette_bound(self.k)
        } else {
            iov_palette_bound(self.k, self.b)
        }
    }

    pub fn decomposition(&self) -> Decomposition {
        self.machine.decomposition()
    }

    /// Colors the next interval given all earlier ones.
    pub fn add_interval(&mut self, earlier: &[&Interval], z: &Interval) -> Result<usize, StrategyError> {
        let row = earlier.iter().map(|x| interval_rel(x, z)).collect();
        self.machine.add_row(row)
    }

    pub fn len(&self) -> usize {
        self.machine.len()
    }

    pub fn is_empty(&self) -> bool {
        self.machine.is_empty()
    }
}

impl Algorithm<Interval> for IovOnline {
    fn name(&self) -> String {
        if self.triangle_free {
            format!("iov3_online({})", self.k)
        } else {
            format!("iov_online({},{})", self.k, self.b)
        }
    }

    fn color(&mut self, s: &Scenario<Interval>, _: &[usize]) -> Result<usize, StrategyError> {
        let xs: Vec<&Interval> = s.payloads().collect();
        if self.machine.len() + 1 != s.len() {
            self.machine = PrimaryMachine::new(self.k, !self.triangle_free);
            for v in 0..s.len() - 1 {
                self.add_interval(&xs[..v], xs[v])?;
            }
        }
        let z = s.len() - 1;
        self.add_interval(&xs[..z], xs[z])
    }

    fn box_clone(&self) -> Box<dyn Algorithm<Interval>> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{replay_algorithm, Game};
    use crate::games::{AbsGame, IovGame};
    use crate::graph::{is_valid_coloring, palette_size};
    use crate::strategies::random_scenario;
    use rand::SeedableRng;

    #[test]
    fn bounds() {
        assert_eq!(first_fit_levels(1), 3);
        assert_eq!(first_fit_levels(8), 6);
        assert_eq!(iov3_palette_bound(3), 18);
        assert_eq!(iov3_palette_bound(2), 4);
        assert_eq!(abs_palette_bound(1, 5), 1);
    }

    #[test]
    fn edgeless_uses_one_color() {
        let g = AbsGame::new(1);
        let mut s = Scenario::new();
        for n in 0..6 {
            let m = AbsRow::parallel(n);
            let e = g.check_move(&s, &m).unwrap();
            s.push(m, e).unwrap();
        }
        let c = replay_algorithm(&s, &mut AbsOnline::new(1, 1)).unwrap();
        assert_eq!(palette_size(&c), 1);
    }

    #[test]
    fn owners_partition_vertices() {
        let g = AbsGame::new(3);
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let s = random_scenario(&g, 40, &mut rng);
            let mut alg = AbsOnline::new(3, 40);
            let c = replay_algorithm(&s, &mut alg).unwrap();
            assert!(is_valid_coloring(&s.graph(), &c, 2));
            let d = alg.decomposition().unwrap();
            for v in 0..s.len() {
                assert!(d.primary[d.owner[v]]);
                assert_eq!(d.primary[v], d.owner[v] == v);
            }
        }
    }

    #[test]
    fn triangle_free_variant() {
        let g = IovGame::triangle_free(3);
        let mut rng = rand::rngs::StdRng::seed_from_u64(2);
        for _ in 0..30 {
            let s = random_scenario(&g, 60, &mut rng);
            let c = replay_algorithm(&s, &mut IovOnline::triangle_free(3)).unwrap();
            assert!(is_valid_coloring(&s.graph(), &c, 3));
            assert!(palette_size(&c) <= 18);
        }
    }
}
