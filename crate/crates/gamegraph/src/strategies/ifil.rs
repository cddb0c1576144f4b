use super::chains::ChainPartitioner;
use super::primary::IovOnline;
use crate::engine::{Algorithm, Scenario};
use crate::error::StrategyError;
use crate::geometry::{Filament, Interval};
use std::collections::HashMap;

/// On-line algorithm for `γIFIL(k, b)`.
///
/// Domains are colored by the interval overlap algorithm. Inside one
/// domain class the domains are laminar, and along each chain of nested
/// domains disjoint filaments are comparable (the inner one lies below), so
/// each class is colored by chain partitioning keyed to the nesting forest.
#[derive(Debug, Clone)]
pub struct IfilOnline {
    pub k: usize,
    pub b: usize,
    aux: IovOnline,
    aux_color: Vec<usize>,
    /// Same-class ancestors of each vertex, outermost first, with the chain
    /// state after the vertex.
    path: Vec<Vec<usize>>,
    state: Vec<ChainPartitioner>,
    tuples: HashMap<(usize, usize), usize>,
}

impl IfilOnline {
    pub fn new(k: usize, b: usize) -> Self {
        IfilOnline {
            k,
            b,
            aux: IovOnline::new(k, b),
            aux_color: Vec::new(),
            path: Vec::new(),
            state: Vec::new(),
            tuples: HashMap::new(),
        }
    }

    fn add(&mut self, fs: &[&Filament]) -> Result<usize, StrategyError> {
        let z = fs.len() - 1;
        let doms: Vec<Interval> = fs.iter().map(|f| f.domain()).collect();
        let earlier: Vec<&Interval> = doms[..z].iter().collect();
        let a = self.aux.add_interval(&earlier, &doms[z])?;
        let parent = (0..z)
            .rev()
            .find(|&u| self.aux_color[u] == a && doms[u].contains(&doms[z]));
        let (mut path, mut chains) = match parent {
            Some(p) => {
                let mut path = self.path[p].clone();
                path.push(p);
                (path, self.state[p].clone())
            }
            None => (Vec::new(), ChainPartitioner::new(Some(self.k))),
        };
        let c = chains.add(&|j| !fs[path[j]].intersects(fs[z]))?;
        path.shrink_to_fit();
        self.aux_color.push(a);
        self.path.push(path);
        self.state.push(chains);
        let next = self.tuples.len();
        Ok(*self.tuples.entry((a, c)).or_insert(next))
    }
}

impl Algorithm<Filament> for IfilOnline {
    fn name(&self) -> String {
        format!("ifil_online({},{})", self.k, self.b)
    }

    fn color(&mut self, s: &Scenario<Filament>, _: &[usize]) -> Result<usize, StrategyError> {
        let fs: Vec<&Filament> = s.payloads().collect();
        if self.aux_color.len() + 1 != s.len() {
            *self = IfilOnline::new(self.k, self.b);
            for v in 1..s.len() {
                self.add(&fs[..v])?;
            }
        }
        self.add(&fs)
    }

    fn box_clone(&self) -> Box<dyn Algorithm<Filament>> {
        Box::new(self.clone())
    }
}
