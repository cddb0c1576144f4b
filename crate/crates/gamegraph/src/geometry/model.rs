use super::{Filament, Interval, Rect};
use crate::error::ModelError;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Intersection,
    Overlap,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "intersection" => Ok(Mode::Intersection),
            "overlap" => Ok(Mode::Overlap),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalModel {
    pub intervals: Vec<Interval>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectangleModel {
    pub rectangles: Vec<Rect>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilamentModel {
    pub filaments: Vec<Filament>,
}

/// Host tree on nodes `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostTree {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub root: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl HostTree {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &[u, v] in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Parent of every node when rooted at `root`.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut stack = vec![self.root];
        seen[self.root] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    stack.push(v);
                }
            }
        }
        parent
    }

    pub fn depths(&self) -> Vec<usize> {
        let parent = self.parents();
        let mut depth = vec![usize::MAX; self.n];
        fn go(v: usize, parent: &[Option<usize>], depth: &mut [usize]) -> usize {
            if depth[v] == usize::MAX {
                depth[v] = match parent[v] {
                    None => 0,
                    Some(p) => go(p, parent, depth) + 1,
                };
            }
            depth[v]
        }
        for v in 0..self.n {
            go(v, &parent, &mut depth);
        }
        depth
    }

    pub fn label(&self, v: usize) -> String {
        self.labels
            .as_ref()
            .and_then(|l| l.get(v).cloned())
            .unwrap_or_else(|| v.to_string())
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n == 0 || self.root >= self.n {
            return Err("tree needs a root among its nodes".into());
        }
        if self.edges.len() + 1 != self.n {
            return Err("a tree on n nodes has n - 1 edges".into());
        }
        if self.edges.iter().any(|&[u, v]| u >= self.n || v >= self.n || u == v) {
            return Err("edge endpoint out of range".into());
        }
        if self.labels.as_ref().is_some_and(|l| l.len() != self.n) {
            return Err("one label per node".into());
        }
        if self.parents().iter().enumerate().filter(|(v, p)| p.is_none() && *v != self.root).count() > 0 {
            return Err("tree is not connected".into());
        }
        Ok(())
    }
}

/// Subtrees of a host tree, as sorted node sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubtreeModel {
    pub tree: HostTree,
    pub subtrees: Vec<Vec<usize>>,
}

impl SubtreeModel {
    pub fn new(tree: HostTree, subtrees: Vec<Vec<usize>>) -> Result<Self, ModelError> {
        let m = SubtreeModel {
            tree,
            subtrees: subtrees
                .into_iter()
                .map(|s| s.into_iter().collect::<BTreeSet<_>>().into_iter().collect())
                .collect(),
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        self.tree.validate().map_err(ModelError::Invalid)?;
        let adj = self.tree.adjacency();
        for (x, s) in self.subtrees.iter().enumerate() {
            if s.is_empty() || s.windows(2).any(|w| w[0] >= w[1]) || s[s.len() - 1] >= self.tree.n {
                return Err(ModelError::Invalid(format!("subtree {x} must be a nonempty sorted node set")));
            }
            let mut seen = BTreeSet::from([s[0]]);
            let mut stack = vec![s[0]];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if s.binary_search(&v).is_ok() && seen.insert(v) {
                        stack.push(v);
                    }
                }
            }
            if seen.len() != s.len() {
                return Err(ModelError::Invalid(format!("subtree {x} is not connected")));
            }
        }
        Ok(())
    }

    fn set(&self, x: usize) -> &[usize] {
        &self.subtrees[x]
    }

    pub fn intersects(&self, x: usize, y: usize) -> bool {
        let (a, b) = (self.set(x), self.set(y));
        a.iter().any(|v| b.binary_search(v).is_ok())
    }

    /// `S_y ⊆ S_x`.
    pub fn contains(&self, x: usize, y: usize) -> bool {
        let a = self.set(x);
        self.set(y).iter().all(|v| a.binary_search(v).is_ok())
    }

    pub fn overlaps(&self, x: usize, y: usize) -> bool {
        self.intersects(x, y) && !self.contains(x, y) && !self.contains(y, x)
    }

    /// The model restricted to some of its subtrees, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> SubtreeModel {
        SubtreeModel {
            tree: self.tree.clone(),
            subtrees: keep.iter().map(|&x| self.subtrees[x].clone()).collect(),
        }
    }
}

/// Any geometric model, tagged by kind in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Model {
    Intervals(IntervalModel),
    Rectangles(RectangleModel),
    Filaments(FilamentModel),
    Subtrees(SubtreeModel),
}

impl Model {
    pub fn len(&self) -> usize {
        match self {
            Model::Intervals(m) => m.intervals.len(),
            Model::Rectangles(m) => m.rectangles.len(),
            Model::Filaments(m) => m.filaments.len(),
            Model::Subtrees(m) => m.subtrees.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Model::Intervals(_) => "intervals",
            Model::Rectangles(_) => "rectangles",
            Model::Filaments(_) => "filaments",
            Model::Subtrees(_) => "subtrees",
        }
    }

    /// The members listed in `vs`, in that order.
    pub fn restrict(&self, vs: &[usize]) -> Model {
        fn pick<T: Clone>(xs: &[T], vs: &[usize]) -> Vec<T> {
            vs.iter().map(|&v| xs[v].clone()).collect()
        }
        match self {
            Model::Intervals(m) => Model::Intervals(IntervalModel { intervals: pick(&m.intervals, vs) }),
            Model::Rectangles(m) => Model::Rectangles(RectangleModel { rectangles: pick(&m.rectangles, vs) }),
            Model::Filaments(m) => Model::Filaments(FilamentModel { filaments: pick(&m.filaments, vs) }),
            Model::Subtrees(m) => Model::Subtrees(m.restrict(vs)),
        }
    }

    /// `b ⊆ a`, or `None` for filaments.
    pub fn contains(&self, a: usize, b: usize) -> Option<bool> {
        self.pair(a, b).1.map(|(ab, _)| ab)
    }

    /// A containment measure: strict containment strictly decreases it.
    pub fn size(&self, v: usize) -> Option<crate::rational::Q> {
        match self {
            Model::Intervals(m) => Some(m.intervals[v].len()),
            Model::Rectangles(m) => Some(m.rectangles[v].half_perimeter()),
            Model::Filaments(_) => None,
            Model::Subtrees(m) => Some(crate::rational::int(m.subtrees[v].len() as i64)),
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        let bad = |what: &str, i: usize| Err(ModelError::Invalid(format!("{what} {i} is empty or reversed")));
        match self {
            Model::Intervals(m) => {
                for (i, x) in m.intervals.iter().enumerate() {
                    if !x.is_valid() {
                        return bad("interval", i);
                    }
                }
            }
            Model::Rectangles(m) => {
                for (i, r) in m.rectangles.iter().enumerate() {
                    if !r.is_valid() {
                        return bad("rectangle", i);
                    }
                }
            }
            Model::Filaments(m) => {
                for (i, f) in m.filaments.iter().enumerate() {
                    f.validate().map_err(|e| ModelError::Invalid(format!("filament {i}: {e}")))?;
                }
            }
            Model::Subtrees(m) => m.validate()?,
        }
        Ok(())
    }

    /// Pairwise relation predicates `(intersects, contains)`; `contains(a,b)`
    /// means `b ⊆ a`. Filaments have no containment.
    fn pair(&self, a: usize, b: usize) -> (bool, Option<(bool, bool)>) {
        match self {
            Model::Intervals(m) => {
                let (x, y) = (&m.intervals[a], &m.intervals[b]);
                (x.intersects(y), Some((x.contains(y), y.contains(x))))
            }
            Model::Rectangles(m) => {
                let (x, y) = (&m.rectangles[a], &m.rectangles[b]);
                (x.intersects(y), Some((x.contains(y), y.contains(x))))
            }
            Model::Filaments(m) => (m.filaments[a].intersects(&m.filaments[b]), None),
            Model::Subtrees(m) => (m.intersects(a, b), Some((m.contains(a, b), m.contains(b, a)))),
        }
    }

    fn overlap(&self, a: usize, b: usize) -> Result<bool, ModelError> {
        match self.pair(a, b) {
            (i, Some((ab, ba))) => Ok(i && !ab && !ba),
            (_, None) => Err(ModelError::Precondition("filament models have no overlap mode".into())),
        }
    }
}

pub fn model_graph(model: &Model, mode: Mode) -> Result<Graph, ModelError> {
    model.validate()?;
    let n = model.len();
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            let edge = match mode {
                Mode::Intersection => model.pair(a, b).0,
                Mode::Overlap => model.overlap(a, b)?,
            };
            if edge {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    Ok(g)
}

/// No two overlapping members both contain a third one.
pub fn is_clean(model: &Model) -> Result<bool, ModelError> {
    model.validate()?;
    let n = model.len();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                match model.pair(a, b).1 {
                    Some((true, _)) => holders[b].push(a),
                    Some(_) => {}
                    None => return Err(ModelError::Precondition("filament models have no overlap mode".into())),
                }
            }
        }
    }
    for h in &holders {
        for (i, &a) in h.iter().enumerate() {
            for &b in &h[i + 1..] {
                if model.overlap(a, b)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
