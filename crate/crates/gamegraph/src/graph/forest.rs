use serde::{Deserialize, Serialize};

/// A rooted forest given by parent pointers. Children are kept in ascending
/// index order, which fixes every traversal below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedForest {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
}

impl RootedForest {
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self, String> {
        let n = parent.len();
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(format!("parent {p} of {v} out of range"));
                }
                if p == v {
                    return Err(format!("vertex {v} is its own parent"));
                }
                children[p].push(v);
            }
        }
        let mut f = RootedForest {
            parent,
            children,
            depth: vec![0; n],
            tin: vec![0; n],
            tout: vec![0; n],
        };
        let mut seen = 0;
        let mut clock = 0;
        let roots: Vec<usize> = f.roots().collect();
        for r in roots {
            let mut stack = vec![(r, 0usize)];
            f.tin[r] = clock;
            clock += 1;
            seen += 1;
            while let Some(top) = stack.last_mut() {
                let v = top.0;
                if top.1 < f.children[v].len() {
                    let c = f.children[v][top.1];
                    top.1 += 1;
                    f.depth[c] = f.depth[v] + 1;
                    f.tin[c] = clock;
                    clock += 1;
                    seen += 1;
                    stack.push((c, 0));
                } else {
                    f.tout[v] = clock;
                    clock += 1;
                    stack.pop();
                }
            }
        }
        if seen != n {
            return Err("parent pointers contain a cycle".into());
        }
        Ok(f)
    }

    /// A single path `0 -> 1 -> ... -> n-1`.
    pub fn path(n: usize) -> Self {
        RootedForest::new((0..n).map(|v| v.checked_sub(1)).collect()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| self.parent[v].is_none())
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    /// Strict ancestor relation `u ≺ v`.
    pub fn is_ancestor(&self, u: usize, v: usize) -> bool {
        u != v && self.tin[u] < self.tin[v] && self.tout[v] < self.tout[u]
    }

    pub fn related(&self, u: usize, v: usize) -> bool {
        self.is_ancestor(u, v) || self.is_ancestor(v, u)
    }

    /// Vertices on the path from the root down to `v`, inclusive.
    pub fn root_path(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            out.push(p);
            cur = p;
        }
        out.reverse();
        out
    }

    /// All vertices in depth-first preorder.
    pub fn preorder(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| self.tin[v]);
        order
    }

    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.n()];
        for v in self.preorder().into_iter().rev() {
            if let Some(p) = self.parent[v] {
                size[p] += size[v];
            }
        }
        size
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.preorder().into_iter().filter(|&v| self.is_leaf(v)).collect()
    }
}

impl Serialize for RootedForest {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parent.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootedForest {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parent = Vec::<Option<usize>>::deserialize(d)?;
        RootedForest::new(parent).map_err(serde::de::Error::custom)
    }
}

/// Enter/leave times of a depth-first search with a single shared counter.
pub fn dfs_times(f: &RootedForest) -> Vec<(i64, i64)> {
    f.tin
        .iter()
        .zip(&f.tout)
        .map(|(&a, &b)| (a as i64, b as i64))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeavyLight {
    /// `heavy[v]` tells whether the edge from `v` to its parent is heavy.
    pub heavy: Vec<bool>,
    /// Maximal heavy paths listed top-down; singletons included, so the
    /// paths partition the vertex set.
    pub paths: Vec<Vec<usize>>,
}

impl HeavyLight {
    pub fn heavy_edge_count(&self) -> usize {
        self.heavy.iter().filter(|&&h| h).count()
    }

    pub fn path_of(&self) -> Vec<usize> {
        let n = self.heavy.len();
        let mut out = vec![0; n];
        for (i, p) in self.paths.iter().enumerate() {
            for &v in p {
                out[v] = i;
            }
        }
        out
    }
}

pub fn heavy_light(f: &RootedForest) -> HeavyLight {
    let size = f.subtree_sizes();
    let n = f.n();
    let heavy: Vec<bool> = (0..n)
        .map(|v| f.parent(v).is_some_and(|p| 2 * size[v] > size[p]))
        .collect();
    let mut paths = Vec::new();
    for top in f.preorder() {
        if heavy[top] {
            continue;
        }
        let mut path = vec![top];
        let mut cur = top;
        while let Some(&c) = f.children(cur).iter().find(|&&c| heavy[c]) {
            path.push(c);
            cur = c;
        }
        paths.push(path);
    }
    HeavyLight { heavy, paths }
}
