//! Exact brute-force oracles. Every search takes a node budget; running out
//! of it yields an error carrying the best bracket found, never a guess.

use super::Graph;
use crate::error::OracleError;

pub const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

fn adjacency_bits(g: &Graph) -> Vec<Bits> {
    (0..g.n())
        .map(|v| {
            let mut b = Bits::empty(g.n());
            for w in g.neighbors(v) {
                b.set(w);
            }
            b
        })
        .collect()
}

struct CliqueSearch<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    /// Greedy sequential coloring of the candidate set gives an upper bound
    /// on any clique inside it.
    fn color_bound(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut rest = cand.clone();
        let mut color = 0;
        while !rest.is_empty() {
            color += 1;
            let mut avail = rest.clone();
            while let Some(v) = avail.first() {
                avail.clear(v);
                rest.clear(v);
                out.push((v, color));
                for (w, a) in avail.0.iter_mut().zip(&self.adj[v].0) {
                    *w &= !a;
                }
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, cand: Bits) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let order = self.color_bound(&cand);
        let mut cand = cand;
        for &(v, c) in order.iter().rev() {
            if current.len() + c <= self.best.len() {
                return Ok(());
            }
            current.push(v);
            let next = cand.and(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next)?;
            }
            current.pop();
            cand.clear(v);
        }
        Ok(())
    }
}

pub fn max_clique_with_budget(g: &Graph, budget: u64) -> Result<Vec<usize>, OracleError> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = adjacency_bits(g);
    let mut all = Bits::empty(n);
    for v in 0..n {
        all.set(v);
    }
    let mut s = CliqueSearch {
        adj: &adj,
        best: vec![0],
        nodes: 0,
        budget,
    };
    match s.expand(&mut Vec::new(), all) {
        Ok(()) => Ok(s.best),
        Err(()) => Err(OracleError::Budget {
            what: "clique number",
            lower: s.best.len(),
            upper: n,
        }),
    }
}

pub fn max_clique(g: &Graph) -> Result<Vec<usize>, OracleError> {
    max_clique_with_budget(g, DEFAULT_BUDGET)
}

pub fn clique_number_with_budget(g: &Graph, budget: u64) -> Result<usize, OracleError> {
    max_clique_with_budget(g, budget).map(|c| c.len())
}

pub fn clique_number(g: &Graph) -> Result<usize, OracleError> {
    clique_number_with_budget(g, DEFAULT_BUDGET)
}

/// All cliques of exactly `k` vertices, each listed in increasing order.
pub fn k_cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let adj = adjacency_bits(g);
    fn rec(adj: &[Bits], k: usize, cur: &mut Vec<usize>, cand: Bits, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        if cur.len() + cand.count() < k {
            return;
        }
        let vs: Vec<usize> = cand.ones().collect();
        for v in vs {
            let mut next = cand.and(&adj[v]);
            for w in next.clone().ones() {
                if w <= v {
                    next.clear(w);
                }
            }
            cur.push(v);
            rec(adj, k, cur, next, out);
            cur.pop();
        }
    }
    let mut all = Bits::empty(n);
    for v in 0..n {
        all.set(v);
    }
    rec(&adj, k, &mut Vec::new(), all, &mut out);
    out
}

/// Does `vs` (a vertex subset) contain a clique on `k` vertices?
fn has_clique_within(adj: &[Bits], cand: &Bits, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if cand.count() < k {
        return false;
    }
    let mut cand = cand.clone();
    let vs: Vec<usize> = cand.ones().collect();
    for v in vs {
        cand.clear(v);
        let next = cand.and(&adj[v]);
        if has_clique_within(adj, &next, k - 1) {
            return true;
        }
    }
    false
}

pub fn is_valid_coloring(g: &Graph, colors: &[usize], k: usize) -> bool {
    if colors.len() != g.n() || k < 2 {
        return false;
    }
    if k == 2 {
        return g.edges().iter().all(|&(u, v)| colors[u] != colors[v]);
    }
    let adj = adjacency_bits(g);
    let mut classes: std::collections::BTreeMap<usize, Bits> = Default::default();
    for (v, &c) in colors.iter().enumerate() {
        classes.entry(c).or_insert_with(|| Bits::empty(g.n())).set(v);
    }
    classes.values().all(|cls| !has_clique_within(&adj, cls, k))
}

pub fn dsatur_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut sat: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (sat[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|c| !sat[v].contains(c)).unwrap();
        color[v] = c;
        for w in g.neighbors(v) {
            sat[w].insert(c);
        }
    }
    color
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![2u8; n];
    for s in 0..n {
        if side[s] != 2 {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if side[w] == 2 {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

struct ColorSearch<'a> {
    g: &'a Graph,
    adj: Vec<Bits>,
    /// Classes must be free of cliques on this many vertices.
    forbid: usize,
    color: Vec<usize>,
    classes: Vec<Bits>,
    nodes: u64,
    budget: u64,
}

impl ColorSearch<'_> {
    fn fits(&self, v: usize, c: usize) -> bool {
        if self.forbid == 2 {
            return self.adj[v].and(&self.classes[c]).is_empty();
        }
        let inside = self.adj[v].and(&self.classes[c]);
        !has_clique_within(&self.adj, &inside, self.forbid - 1)
    }

    fn pick(&self) -> Option<usize> {
        let n = self.g.n();
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if self.color[v] != usize::MAX {
                continue;
            }
            let sat = (0..self.classes.len())
                .filter(|&c| !self.adj[v].and(&self.classes[c]).is_empty())
                .count();
            let key = (sat, self.g.degree(v), v);
            if best.is_none_or(|b| (key.0, key.1) > (b.0, b.1)) {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }

    fn solve(&mut self, limit: usize, used: usize) -> Result<bool, ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        for c in 0..limit.min(used + 1) {
            if self.fits(v, c) {
                self.color[v] = c;
                self.classes[c].set(v);
                if self.solve(limit, used.max(c + 1))? {
                    return Ok(true);
                }
                self.classes[c].clear(v);
                self.color[v] = usize::MAX;
            }
        }
        Ok(false)
    }
}

/// A partition into the least number `c` of classes, none containing a
/// clique on `forbid` vertices, searched from `lower` up; `fallback` is a
/// valid partition that bounds the search. `forbid = 2` is ordinary coloring.
fn partition_coloring(
    g: &Graph,
    forbid: usize,
    lower: usize,
    fallback: Vec<usize>,
    budget: u64,
    what: &'static str,
) -> Result<Vec<usize>, OracleError> {
    let upper = super::palette_size(&fallback);
    let mut s = ColorSearch {
        g,
        adj: adjacency_bits(g),
        forbid,
        color: vec![usize::MAX; g.n()],
        classes: Vec::new(),
        nodes: 0,
        budget,
    };
    for c in lower..upper {
        s.color = vec![usize::MAX; g.n()];
        s.classes = vec![Bits::empty(g.n()); c];
        match s.solve(c, 0) {
            Ok(true) => return Ok(s.color),
            Ok(false) => {}
            Err(()) => {
                return Err(OracleError::Budget {
                    what,
                    lower: c,
                    upper,
                })
            }
        }
    }
    Ok(fallback)
}

/// A proper coloring with the least number of colors.
pub fn optimal_coloring_with_budget(g: &Graph, budget: u64) -> Result<Vec<usize>, OracleError> {
    let lower = match clique_number_with_budget(g, budget) {
        Ok(w) => w,
        Err(OracleError::Budget { lower, .. }) => lower,
        Err(e) => return Err(e),
    };
    partition_coloring(g, 2, lower, dsatur_coloring(g), budget, "chromatic number")
}

pub fn optimal_coloring(g: &Graph) -> Result<Vec<usize>, OracleError> {
    optimal_coloring_with_budget(g, DEFAULT_BUDGET)
}

pub fn chromatic_number_with_budget(g: &Graph, budget: u64) -> Result<usize, OracleError> {
    if g.n() == 0 {
        return Ok(0);
    }
    optimal_coloring_with_budget(g, budget).map(|c| super::palette_size(&c))
}

pub fn chromatic_number(g: &Graph) -> Result<usize, OracleError> {
    chromatic_number_with_budget(g, DEFAULT_BUDGET)
}

pub fn kfree_chromatic_number_with_budget(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<usize, OracleError> {
    if k < 2 {
        return Err(OracleError::Invalid(format!("K_{k}-free coloring needs k >= 2")));
    }
    if k == 2 {
        return chromatic_number_with_budget(g, budget);
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let omega = match clique_number_with_budget(g, budget) {
        Ok(w) => w,
        Err(OracleError::Budget { lower, .. }) => lower,
        Err(e) => return Err(e),
    };
    let lower = omega.div_ceil(k - 1).max(1);
    // First-fit into classes gives the upper end of the bracket.
    let adj = adjacency_bits(g);
    let mut classes: Vec<Bits> = Vec::new();
    let mut fallback = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let slot = classes
            .iter()
            .position(|cls| !has_clique_within(&adj, &adj[v].and(cls), k - 1));
        let i = slot.unwrap_or_else(|| {
            classes.push(Bits::empty(g.n()));
            classes.len() - 1
        });
        classes[i].set(v);
        fallback.push(i);
    }
    partition_coloring(g, k, lower, fallback, budget, "K_k-free chromatic number").map(|c| super::palette_size(&c))
}

pub fn kfree_chromatic_number(g: &Graph, k: usize) -> Result<usize, OracleError> {
    kfree_chromatic_number_with_budget(g, k, DEFAULT_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        }
        g
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Graph::new(3)).unwrap(), 1);
        assert_eq!(clique_number(&Graph::complete(4)).unwrap(), 4);
        assert_eq!(clique_number(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(clique_number(&Graph::new(0)).unwrap(), 0);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete(4)).unwrap(), 4);
        assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6)).unwrap(), 2);
    }

    #[test]
    fn kfree_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(kfree_chromatic_number(&k4, 2).unwrap(), 4);
        assert_eq!(kfree_chromatic_number(&k4, 3).unwrap(), 2);
        assert_eq!(kfree_chromatic_number(&Graph::cycle(5), 3).unwrap(), 1);
        assert_eq!(kfree_chromatic_number(&Graph::complete(7), 3).unwrap(), 4);
        assert!(kfree_chromatic_number(&k4, 1).is_err());
    }

    #[test]
    fn validity_examples() {
        let mut e = Graph::new(2);
        e.add_edge(0, 1).unwrap();
        assert!(!is_valid_coloring(&e, &[1, 1], 2));
        assert!(is_valid_coloring(&e, &[1, 1], 3));
        assert!(is_valid_coloring(&Graph::cycle(5), &[1, 2, 1, 2, 3], 2));
        assert!(!is_valid_coloring(&Graph::complete(3), &[0, 0, 0], 3));
        assert!(!is_valid_coloring(&e, &[0], 2));
    }

    #[test]
    fn k_clique_listing() {
        assert_eq!(k_cliques(&Graph::complete(4), 3).len(), 4);
        assert_eq!(k_cliques(&Graph::cycle(5), 2).len(), 5);
        assert!(k_cliques(&Graph::cycle(5), 3).is_empty());
    }

    #[test]
    fn budget_is_reported() {
        let err = chromatic_number_with_budget(&petersen(), 1).unwrap_err();
        match err {
            OracleError::Budget { lower, upper, .. } => assert!(lower <= 3 && 3 <= upper),
            _ => panic!("unexpected error"),
        }
    }

    #[test]
    fn bipartite() {
        assert!(is_bipartite(&Graph::cycle(6)));
        assert!(!is_bipartite(&Graph::cycle(5)));
    }
}
