//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use gamegraph::engine::Scenario;
use gamegraph::games::Edges;
use gamegraph::geometry::{Filament, FilamentModel, Interval, IntervalModel, Rect, RectangleModel};
use gamegraph::graph::{Graph, RootedForest};
use gamegraph::rational::{frac, int, Q};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Does the vertex mask contain a clique on `k` vertices? Tries every
/// `k`-subset.
fn mask_has_clique(g: &Graph, mask: u32, k: usize) -> bool {
    let vs: Vec<usize> = (0..32).filter(|&v| mask >> v & 1 == 1).collect();
    if k == 0 {
        return true;
    }
    let mut pick = vec![0usize; 0];
    fn go(g: &Graph, vs: &[usize], start: usize, k: usize, pick: &mut Vec<usize>) -> bool {
        if pick.len() == k {
            return true;
        }
        for i in start..vs.len() {
            if pick.iter().all(|&u| g.has_edge(u, vs[i])) {
                pick.push(vs[i]);
                if go(g, vs, i + 1, k, pick) {
                    return true;
                }
                pick.pop();
            }
        }
        false
    }
    go(g, &vs, 0, k, &mut pick)
}

/// Fewest classes covering all vertices, each class free of `K_k`, by a
/// dynamic program over vertex subsets. Exponential; for `n <= 10`.
pub fn naive_partition_number(g: &Graph, k: usize) -> usize {
    let n = g.n();
    assert!(n <= 12);
    let full = (1u32 << n) - 1;
    let ok: Vec<bool> = (0..=full).map(|m| !mask_has_clique(g, m, k)).collect();
    let mut best = vec![usize::MAX; full as usize + 1];
    best[0] = 0;
    for m in 1..=full {
        let low = m & m.wrapping_neg();
        let rest = m ^ low;
        // every class containing the lowest vertex
        let mut sub = rest;
        loop {
            let class = sub | low;
            if ok[class as usize] {
                let r = best[(m ^ class) as usize];
                if r != usize::MAX {
                    best[m as usize] = best[m as usize].min(r + 1);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

pub fn naive_chromatic(g: &Graph) -> usize {
    naive_partition_number(g, 2)
}

/// Largest clique by trying every vertex subset.
pub fn naive_clique(g: &Graph) -> usize {
    let n = g.n();
    (0..1u32 << n)
        .filter(|&m| {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                g.add_edge(u, v).unwrap();
            }
            i += 1;
        }
    }
    g
}

pub fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.05..0.95);
    let bits: Vec<bool> = (0..n * n.saturating_sub(1) / 2).map(|_| rng.gen_bool(p)).collect();
    graph_from_bits(n, &bits)
}

/// Random rooted forest. `stretch` near 1 gives long paths, near 0 bushy
/// trees.
pub fn random_forest(rng: &mut StdRng, n: usize, stretch: f64) -> RootedForest {
    let parent = (0..n)
        .map(|i| {
            if i == 0 || rng.gen_bool(0.01) {
                None
            } else if rng.gen_bool(stretch) {
                Some(i - 1)
            } else {
                Some(rng.gen_range(0..i))
            }
        })
        .collect();
    RootedForest::new(parent).unwrap()
}

/// A forest presented as a plain scenario: the tree edges are revealed in
/// a random vertex order.
pub fn forest_presentation(rng: &mut StdRng, n: usize) -> Scenario<Edges> {
    let stretch = rng.gen_range(0.0..1.0);
    let f = random_forest(rng, n, stretch);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut s = Scenario::new();
    for &v in &order {
        let mut e: Vec<usize> = f.children(v).iter().copied().chain(f.parent(v)).map(|u| pos[u]).collect();
        e.retain(|&u| u < pos[v]);
        s.push(Edges::new(e.clone()), e).unwrap();
    }
    s
}

/// The forest on `2^k` vertices on which First-fit uses `k + 1` colors:
/// copies of the smaller forests, then a vertex joined to the copy of
/// color `i` in the `i`-th copy.
pub fn first_fit_worst_forest(k: usize) -> Scenario<Edges> {
    fn build(k: usize, s: &mut Scenario<Edges>) -> usize {
        let mut tops = Vec::new();
        for i in 0..k {
            tops.push((i, build(i, s)));
        }
        let e: Vec<usize> = tops.iter().map(|&(_, t)| t).collect();
        s.push(Edges::new(e.clone()), e).unwrap();
        s.len() - 1
    }
    let mut s = Scenario::new();
    build(k, &mut s);
    s
}

/// Random intervals with distinct integer endpoints.
pub fn random_intervals(rng: &mut StdRng, n: usize, span: i64) -> IntervalModel {
    let mut ends: Vec<i64> = (0..span).collect();
    ends.shuffle(rng);
    let intervals = (0..n.min(span as usize / 2))
        .map(|i| {
            let (a, b) = (ends[2 * i], ends[2 * i + 1]);
            Interval::ints(a.min(b), a.max(b))
        })
        .collect();
    IntervalModel { intervals }
}

pub fn random_rectangles(rng: &mut StdRng, n: usize) -> RectangleModel {
    let rectangles = (0..n)
        .map(|_| {
            let x = rng.gen_range(0..40);
            let y = rng.gen_range(0..40);
            let w = rng.gen_range(1..15);
            let h = rng.gen_range(1..15);
            Rect::new(
                Interval::new(frac(x, 2), frac(x + w, 2)),
                Interval::new(frac(y, 3), frac(y + h, 3)),
            )
        })
        .collect();
    RectangleModel { rectangles }
}

/// Piecewise-linear filament over `[a, b]` with a few random peaks.
pub fn random_filament(rng: &mut StdRng, a: Q, b: Q) -> Filament {
    let steps = rng.gen_range(1..4);
    let mut pts = vec![(a.clone(), int(0))];
    for s in 1..=steps {
        pts.push((&a + (&b - &a) * frac(s, steps + 1), int(rng.gen_range(1..10))));
    }
    pts.push((b, int(0)));
    Filament::new(pts).unwrap()
}

/// Filaments whose domains are pairwise nested or disjoint.
pub fn laminar_filaments(rng: &mut StdRng, n: usize) -> FilamentModel {
    let mut doms: Vec<(i64, i64)> = Vec::new();
    let mut tries = 0;
    while doms.len() < n && tries < 50 * n {
        tries += 1;
        let a = rng.gen_range(0..200);
        let b = a + rng.gen_range(1..60);
        let crosses = doms
            .iter()
            .any(|&(c, d)| (a < c && c < b && b < d) || (c < a && a < d && d < b) || a == c || b == d || a == d || b == c);
        if !crosses {
            doms.push((a, b));
        }
    }
    FilamentModel {
        filaments: doms
            .into_iter()
            .map(|(a, b)| random_filament(rng, int(a), int(b)))
            .collect(),
    }
}

/// Filaments over arbitrary random domains.
pub fn general_filaments(rng: &mut StdRng, n: usize) -> FilamentModel {
    FilamentModel {
        filaments: (0..n)
            .map(|_| {
                let a = rng.gen_range(0..60);
                let len = rng.gen_range(1..20);
                random_filament(rng, int(a), int(a + len))
            })
            .collect(),
    }
}
