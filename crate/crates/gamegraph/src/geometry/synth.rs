//! Constructions between game graphs and geometric models.

use super::model::{FilamentModel, HostTree, Model, Mode, RectangleModel, SubtreeModel};
use super::{model_graph, Filament, Interval, Rect, Rel};
use crate::engine::GameGraph;
use crate::error::ModelError;
use crate::games::{validate_abs_game_graph, validate_coco_game_graph, validate_int_game_graph, AbsRow, DownSet};
use crate::graph::{dfs_times, Graph, RootedForest};
use crate::rational::{frac, int, Q};
use std::collections::{BTreeSet, HashMap};

/// `R_u = μ(u) × [x_u, y_u]` with DFS enter/leave times on the forest.
pub fn rectangles_from_int_game_graph(gg: &GameGraph<Interval>, k: usize) -> Result<RectangleModel, ModelError> {
    validate_int_game_graph(gg, k)?;
    let times = dfs_times(&gg.forest);
    Ok(RectangleModel {
        rectangles: (0..gg.n())
            .map(|u| Rect::new(gg.payload[u].clone(), Interval::ints(times[u].0, times[u].1)))
            .collect(),
    })
}

/// Host tree nodes: `r = 0`, `u_x = 1 + x`, `v_x = 1 + n + x`.
pub fn subtrees_from_abs_game_graph(gg: &GameGraph<AbsRow>, k: usize) -> Result<SubtreeModel, ModelError> {
    validate_abs_game_graph(gg, k)?;
    let n = gg.n();
    let f = &gg.forest;
    let (u, v) = (|x: usize| 1 + x, |x: usize| 1 + n + x);
    let mut edges = Vec::new();
    let mut labels = vec!["r".to_string()];
    labels.extend((0..n).map(|x| format!("u{x}")));
    labels.extend((0..n).map(|x| format!("v{x}")));
    for x in 0..n {
        match f.parent(x) {
            None => edges.push([0, u(x)]),
            Some(p) => edges.push([u(p), u(x)]),
        }
        edges.push([u(x), v(x)]);
    }
    let tree = HostTree {
        n: 1 + 2 * n,
        edges,
        root: 0,
        labels: Some(labels),
    };
    let mut sets = Vec::with_capacity(n);
    for x in 0..n {
        let dx = f.depth(x);
        let mut s = vec![u(x), v(x)];
        for y in (0..n).filter(|&y| y != x && f.is_ancestor(x, y)) {
            match gg.payload[y].row[dx] {
                Rel::Inc => s.extend([u(y), v(y)]),
                Rel::Ovl => s.push(u(y)),
                Rel::Par => {}
            }
        }
        sets.push(s);
    }
    SubtreeModel::new(tree, sets)
}

/// Reads an abstract overlap game graph off a subtree model. The forest
/// follows subtree roots (the node of `S_x` closest to the tree root);
/// subtrees sharing a root are chained by decreasing size, then index.
pub fn abs_certificate_from_subtrees(m: &SubtreeModel, k: usize) -> Result<GameGraph<AbsRow>, ModelError> {
    m.validate()?;
    let tparent = m.tree.parents();
    let tdepth = m.tree.depths();
    let n = m.subtrees.len();
    let top: Vec<usize> = m
        .subtrees
        .iter()
        .map(|s| *s.iter().min_by_key(|&&t| (tdepth[t], t)).unwrap())
        .collect();
    let mut at: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..n {
        at.entry(top[x]).or_default().push(x);
    }
    for group in at.values_mut() {
        group.sort_by_key(|&x| (std::cmp::Reverse(m.subtrees[x].len()), x));
    }
    let parent: Vec<Option<usize>> = (0..n)
        .map(|x| {
            let group = &at[&top[x]];
            let i = group.iter().position(|&y| y == x).unwrap();
            if i > 0 {
                return Some(group[i - 1]);
            }
            let mut t = tparent[top[x]];
            while let Some(node) = t {
                if let Some(g) = at.get(&node) {
                    return Some(*g.last().unwrap());
                }
                t = tparent[node];
            }
            None
        })
        .collect();
    let forest = RootedForest::new(parent).map_err(ModelError::Invalid)?;
    let graph = model_graph(&Model::Subtrees(m.clone()), Mode::Overlap)?;
    let payload = (0..n)
        .map(|z| {
            let path = forest.root_path(z);
            let row = path[..path.len() - 1]
                .iter()
                .map(|&x| {
                    if m.contains(x, z) {
                        Rel::Inc
                    } else if m.intersects(x, z) {
                        Rel::Ovl
                    } else {
                        Rel::Par
                    }
                })
                .collect();
            AbsRow::new(row)
        })
        .collect();
    let gg = GameGraph {
        game: format!("abs({k})"),
        graph,
        forest,
        payload,
    };
    validate_abs_game_graph(&gg, k)?;
    Ok(gg)
}

/// Linear extension of `less` (plus one forced pair) that always takes the
/// smallest available index.
fn extension(less: &[Vec<bool>], forced: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let n = less.len();
    let below = |a: usize, b: usize| less[a][b] || forced == Some((a, b));
    let mut indeg: Vec<usize> = (0..n).map(|b| (0..n).filter(|&a| below(a, b)).count()).collect();
    let mut done = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n).find(|&v| !done[v] && indeg[v] == 0)?;
        done[next] = true;
        out.push(next);
        for b in 0..n {
            if below(next, b) {
                indeg[b] -= 1;
            }
        }
    }
    Some(out)
}

fn transitive(less: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = less.len();
    let mut c = less.to_vec();
    for m in 0..n {
        for a in 0..n {
            if c[a][m] {
                for b in 0..n {
                    if c[m][b] {
                        c[a][b] = true;
                    }
                }
            }
        }
    }
    c
}

/// Piecewise-linear functions on `dom` whose pointwise order is the reverse
/// of `less`: `a < b` iff `f_a > f_b` everywhere. One sample per linear
/// extension of the realizer, evenly spaced with both ends included.
/// Heights are integers in `1..=n`, so comparable pairs keep distance 1.
pub fn realize_poset_functions(less: &[Vec<bool>], dom: &Interval) -> Vec<Vec<(Q, Q)>> {
    let n = less.len();
    let less = transitive(less);
    let mut exts: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && !less[a][b] && !less[b][a] {
                let e = extension(&less, Some((a, b))).expect("order must be acyclic");
                if !exts.contains(&e) {
                    exts.push(e);
                }
            }
        }
    }
    if exts.is_empty() {
        exts.push(extension(&less, None).expect("order must be acyclic"));
    }
    if exts.len() == 1 {
        exts.push(exts[0].clone());
    }
    let t = exts.len() as i64;
    let xs: Vec<Q> = (0..t).map(|j| &dom.l + dom.len() * frac(j, t - 1)).collect();
    let mut out = vec![Vec::with_capacity(exts.len()); n];
    for (e, x) in exts.iter().zip(&xs) {
        for (pos, &v) in e.iter().enumerate() {
            out[v].push((x.clone(), int((n - pos) as i64)));
        }
    }
    out
}

/// Domain-non-overlapping filaments for a co-comparability game graph:
/// per leaf `v`, the root path is realized over `[x_v, y_v]`; each `f_u`
/// ramps up from `(x_u - 1/3, 0)`, joins its leaf pieces by segments, and
/// ramps down to `(y_u + 1/3, 0)`.
pub fn filaments_from_coco_game_graph(gg: &GameGraph<DownSet>, k: usize) -> Result<FilamentModel, ModelError> {
    validate_coco_game_graph(gg, k)?;
    let n = gg.n();
    let f = &gg.forest;
    let times = dfs_times(f);
    // Steep enough that ramps clear longer filaments by at least 1.
    let scale = int(2 * n as i64 + 1);
    let mut pieces: Vec<Vec<(Q, Q)>> = vec![Vec::new(); n];
    for leaf in f.leaves() {
        let path = f.root_path(leaf);
        let d = path.len();
        let less: Vec<Vec<bool>> = (0..d)
            .map(|i| (0..d).map(|j| i < j && gg.payload[path[j]].contains(i)).collect())
            .collect();
        let dom = Interval::ints(times[leaf].0, times[leaf].1);
        for (i, pts) in realize_poset_functions(&less, &dom).into_iter().enumerate() {
            pieces[path[i]].extend(pts.into_iter().map(|(t, h)| (t, h * &scale)));
        }
    }
    let third = frac(1, 3);
    let filaments = (0..n)
        .map(|u| {
            let mut pts = vec![(int(times[u].0) - &third, int(0))];
            // Leaves were visited in DFS order, so pieces are already sorted.
            pts.append(&mut pieces[u]);
            pts.push((int(times[u].1) + &third, int(0)));
            Filament::new(pts).map_err(ModelError::Invalid)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FilamentModel { filaments })
}

/// Reads a co-comparability game graph off a domain-non-overlapping
/// filament model. Equal domains nest by index.
pub fn coco_certificate_from_filaments(m: &FilamentModel, k: usize) -> Result<GameGraph<DownSet>, ModelError> {
    let model = Model::Filaments(m.clone());
    model.validate()?;
    let n = m.filaments.len();
    let doms: Vec<Interval> = m.filaments.iter().map(|f| f.domain()).collect();
    for a in 0..n {
        for b in a + 1..n {
            if doms[a].overlaps(&doms[b]) {
                return Err(ModelError::Precondition(format!("domains of {a} and {b} overlap")));
            }
        }
    }
    // a strictly encloses b in the nesting order
    let encloses = |a: usize, b: usize| a != b && doms[a].contains(&doms[b]) && (doms[a] != doms[b] || a < b);
    let parent: Vec<Option<usize>> = (0..n)
        .map(|b| {
            (0..n)
                .filter(|&a| encloses(a, b))
                .min_by(|&x, &y| {
                    if encloses(y, x) {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                })
        })
        .collect();
    let forest = RootedForest::new(parent).map_err(ModelError::Invalid)?;
    let graph = model_graph(&model, Mode::Intersection)?;
    let payload = (0..n)
        .map(|v| {
            let path = forest.root_path(v);
            DownSet::new(
                (0..path.len() - 1)
                    .filter(|&i| !m.filaments[path[i]].intersects(&m.filaments[v]))
                    .collect(),
            )
        })
        .collect();
    let gg = GameGraph {
        game: format!("coco({k})"),
        graph,
        forest,
        payload,
    };
    validate_coco_game_graph(&gg, k)?;
    Ok(gg)
}

/// Filaments over a path `Q = q_1 … q_m` of the host tree whose intersection
/// graph is the overlap graph of the subtrees, all of which must meet `Q`.
///
/// `q_i` sits at `x = i` and the rest of its branch in `(i, i+1)`. A filament
/// for `S_x` with `S_x ∩ Q = q_i … q_j` lives over `(i-1, j+1)`, at height
/// `1 + M + rank` above its own nodes and `1 + rank` elsewhere, where rank
/// orders subtrees by size. Within a gap, branch nodes come first, then
/// domain ends by increasing rank, then domain starts by decreasing rank.
pub fn filaments_from_path_subtrees(m: &SubtreeModel, path: &[usize]) -> Result<FilamentModel, ModelError> {
    m.validate()?;
    let tn = m.tree.n;
    let adj = m.tree.adjacency();
    if path.is_empty() || path.iter().collect::<BTreeSet<_>>().len() != path.len() || path.iter().any(|&q| q >= tn) {
        return Err(ModelError::Invalid("path must list distinct tree nodes".into()));
    }
    if path.windows(2).any(|w| !adj[w[0]].contains(&w[1])) {
        return Err(ModelError::Invalid("consecutive path nodes must be adjacent".into()));
    }
    let pm = path.len();
    // branch[t] = the 1-based index of the path node whose branch holds t
    let mut branch = vec![0usize; tn];
    for (i, &q) in path.iter().enumerate() {
        branch[q] = i + 1;
    }
    let mut stack: Vec<usize> = path.to_vec();
    while let Some(t) = stack.pop() {
        for &w in &adj[t] {
            if branch[w] == 0 {
                branch[w] = branch[t];
                stack.push(w);
            }
        }
    }
    let n = m.subtrees.len();
    let mut span = Vec::with_capacity(n);
    for (x, s) in m.subtrees.iter().enumerate() {
        let on: Vec<usize> = s.iter().filter(|&&t| path.contains(&t)).map(|&t| branch[t]).collect();
        let (Some(&i), Some(&j)) = (on.iter().min(), on.iter().max()) else {
            return Err(ModelError::Precondition(format!("subtree {x} misses the path")));
        };
        span.push((i, j));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (m.subtrees[x].len(), x));
    let mut rank = vec![0usize; n];
    for (r, &x) in order.iter().enumerate() {
        rank[x] = r;
    }
    // Events inside gap g, i.e. (g, g+1), for g in 0..=pm.
    #[derive(Clone, Copy)]
    enum Ev {
        Node(usize),
        End(usize),
        Start(usize),
    }
    let mut gaps: Vec<Vec<Ev>> = vec![Vec::new(); pm + 1];
    for t in 0..tn {
        if branch[t] != 0 && !path.contains(&t) {
            gaps[branch[t]].push(Ev::Node(t));
        }
    }
    for &x in &order {
        gaps[span[x].1].push(Ev::End(x));
    }
    for &x in order.iter().rev() {
        gaps[span[x].0 - 1].push(Ev::Start(x));
    }
    let mut coord: HashMap<usize, Q> = HashMap::new();
    let mut ends: Vec<(Q, Q)> = vec![(int(0), int(0)); n];
    let mut events: Vec<(Q, Option<usize>)> = path.iter().enumerate().map(|(i, &q)| (int(i as i64 + 1), Some(q))).collect();
    for (g, evs) in gaps.iter().enumerate() {
        let c = evs.len() as i64 + 1;
        for (e, ev) in evs.iter().enumerate() {
            let t = int(g as i64) + frac(e as i64 + 1, c);
            match *ev {
                Ev::Node(node) => {
                    coord.insert(node, t.clone());
                    events.push((t, Some(node)));
                }
                Ev::End(x) => {
                    ends[x].1 = t.clone();
                    events.push((t, None));
                }
                Ev::Start(x) => {
                    ends[x].0 = t.clone();
                    events.push((t, None));
                }
            }
        }
    }
    events.sort();
    let big = n as i64 + 1;
    let filaments = (0..n)
        .map(|x| {
            let (a, b) = &ends[x];
            let r = rank[x] as i64;
            let mut pts = vec![(a.clone(), int(0))];
            for (t, node) in events.iter().filter(|(t, _)| a < t && t < b) {
                let own = node.is_some_and(|v| m.subtrees[x].binary_search(&v).is_ok());
                pts.push((t.clone(), int(if own { 1 + big + r } else { 1 + r })));
            }
            pts.push((b.clone(), int(0)));
            Filament::new(pts).map_err(ModelError::Invalid)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FilamentModel { filaments })
}

/// Convenience: the intersection graph of a filament model.
pub fn filament_graph(m: &FilamentModel) -> Graph {
    model_graph(&Model::Filaments(m.clone()), Mode::Intersection).expect("synthesized filaments are valid")
}
