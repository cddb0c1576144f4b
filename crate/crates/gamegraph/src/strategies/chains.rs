//! On-line chain partitioning of up-growing orders.

use crate::engine::{contains_clique, Algorithm, Scenario};
use crate::error::StrategyError;
use crate::games::DownSet;

/// Chain partitioner for orders where every new element is maximal.
///
/// Chains sit in buckets `B_1, B_2, ...`; bucket `B_i` holds at most `i`
/// chains whose tops are pairwise incomparable. A new element extends a
/// chain from the lowest bucket that has a chain top below it, and that
/// chain trades places with the whole previous bucket. On an order of
/// width `w` no bucket past `B_w` is ever used, so at most `w(w+1)/2`
/// chains are opened.
#[derive(Debug, Clone, Default)]
pub struct ChainPartitioner {
    width: Option<usize>,
    /// Top element of each chain.
    tops: Vec<usize>,
    buckets: Vec<Vec<usize>>,
    chain_of: Vec<usize>,
}

impl ChainPartitioner {
    /// With `width = Some(w)`, adding an element that shows width above
    /// `w` is a protocol error.
    pub fn new(width: Option<usize>) -> Self {
        ChainPartitioner {
            width,
            ..Default::default()
        }
    }

    pub fn len(&self) -> usize {
        self.chain_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain_of.is_empty()
    }

    pub fn chain_count(&self) -> usize {
        self.tops.len()
    }

    pub fn chain_of(&self) -> &[usize] {
        &self.chain_of
    }

    /// Adds a new maximal element; `below(j)` tells whether earlier element
    /// `j` lies below it. Returns its chain.
    pub fn add(&mut self, below: &dyn Fn(usize) -> bool) -> Result<usize, StrategyError> {
        let x = self.chain_of.len();
        let hit = self.buckets.iter().enumerate().find_map(|(i, b)| {
            b.iter().position(|&c| below(self.tops[c])).map(|pos| (i, pos))
        });
        let chain = match hit {
            Some((i, pos)) => {
                let c = self.buckets[i][pos];
                self.tops[c] = x;
                if i > 0 {
                    let mut rest = std::mem::take(&mut self.buckets[i]);
                    rest.remove(pos);
                    let mut prev = std::mem::replace(&mut self.buckets[i - 1], rest);
                    prev.push(c);
                    self.buckets[i] = prev;
                }
                c
            }
            None => {
                let i = match self.buckets.iter().enumerate().position(|(i, b)| b.len() <= i) {
                    Some(i) => i,
                    None => {
                        self.buckets.push(Vec::new());
                        self.buckets.len() - 1
                    }
                };
                if self.width.is_some_and(|w| i >= w) {
                    return Err(StrategyError::Protocol(format!(
                        "order has width above {}",
                        self.width.unwrap()
                    )));
                }
                let c = self.tops.len();
                self.tops.push(x);
                self.buckets[i].push(c);
                c
            }
        };
        self.chain_of.push(chain);
        Ok(chain)
    }
}

/// On-line coloring for the up-growing co-comparability game: the color is
/// the chain.
#[derive(Debug, Clone)]
pub struct CocoOnline {
    pub k: usize,
    chains: ChainPartitioner,
}

impl CocoOnline {
    pub fn new(k: usize) -> Self {
        CocoOnline {
            k,
            chains: ChainPartitioner::new(Some(k)),
        }
    }

    pub fn chain_count(&self) -> usize {
        self.chains.chain_count()
    }
}

impl Algorithm<DownSet> for CocoOnline {
    fn name(&self) -> String {
        format!("coco_online({})", self.k)
    }

    fn color(&mut self, s: &Scenario<DownSet>, _: &[usize]) -> Result<usize, StrategyError> {
        let z = s.len() - 1;
        if contains_clique(s, s.neighbors(z), self.k) {
            return Err(StrategyError::Protocol(format!("order has width above {}", self.k)));
        }
        if self.chains.len() + 1 != s.len() {
            *self = CocoOnline::new(self.k);
            for v in 0..s.len() - 1 {
                let d = s.payload(v);
                self.chains.add(&|j| d.contains(j))?;
            }
        }
        let d = s.payload(s.len() - 1);
        self.chains.add(&|j| d.contains(j))
    }

    fn box_clone(&self) -> Box<dyn Algorithm<DownSet>> {
        Box::new(self.clone())
    }
}
