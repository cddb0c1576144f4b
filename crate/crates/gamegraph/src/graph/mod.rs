//! Finite simple graphs, colorings, rooted forests and exact oracles.

mod forest;
mod oracle;

pub use forest::{dfs_times, heavy_light, HeavyLight, RootedForest};
pub use oracle::{
    chromatic_number, chromatic_number_with_budget, clique_number, clique_number_with_budget,
    dsatur_coloring, is_bipartite, is_valid_coloring, k_cliques, kfree_chromatic_number,
    kfree_chromatic_number_with_budget, max_clique, optimal_coloring, optimal_coloring_with_budget,
    DEFAULT_BUDGET,
};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, String> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n).unwrap();
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        if let Some(l) = &mut self.labels {
            l.push(String::new());
        }
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), String> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(format!("edge {u}-{v} out of range for n = {n}"));
        }
        if u == v {
            return Err(format!("self-loop at {u}"));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, s) in self.adj.iter().enumerate() {
            for &v in s.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<(), String> {
        if labels.len() != self.n() {
            return Err(format!("{} labels for {} vertices", labels.len(), self.n()));
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Induced subgraph; vertex `i` of the result is `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(vs.len());
        for (i, &v) in vs.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self, String> {
        let mut g = Graph::new(j.n);
        for &[u, v] in &j.edges {
            g.add_edge(u, v)?;
        }
        if let Some(l) = &j.labels {
            g.set_labels(l.clone())?;
        }
        Ok(g)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::from_json(&j).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn palette_size(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Relabels colors to `0, 1, ...` in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        Coloring {
            colors: normalize_colors(&self.colors),
        }
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let norm = self.normalized();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); norm.palette_size()];
        for (v, &c) in norm.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

pub fn normalize_colors(colors: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    colors
        .iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

pub fn palette_size(colors: &[usize]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_construction() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(0, 3).is_err());
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn induced_and_json() {
        let g = Graph::cycle(5);
        let h = g.induced(&[0, 1, 2]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        let text = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        let bad = r#"{"n":2,"edges":[[0,0]]}"#;
        assert!(serde_json::from_str::<Graph>(bad).is_err());
    }

    #[test]
    fn coloring_helpers() {
        let c = Coloring::new(vec![5, 2, 5, 9]);
        assert_eq!(c.palette_size(), 3);
        assert_eq!(c.normalized().colors, vec![0, 1, 0, 2]);
        assert_eq!(c.classes(), vec![vec![0, 2], vec![1], vec![3]]);
    }
}
