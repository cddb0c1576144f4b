use super::model::{HostTree, Model};
use crate::rational::to_f64;
use std::fmt::Write;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];
const W: f64 = 640.0;
const H: f64 = 480.0;
const PAD: f64 = 20.0;

struct Frame {
    x0: f64,
    y0: f64,
    sx: f64,
    sy: f64,
}

impl Frame {
    fn fit(xs: impl Iterator<Item = f64> + Clone, ys: impl Iterator<Item = f64> + Clone) -> Frame {
        let lo = |it: &mut dyn Iterator<Item = f64>| it.fold((f64::MAX, f64::MIN), |(a, b), v| (a.min(v), b.max(v)));
        let (x0, x1) = lo(&mut xs.clone());
        let (y0, y1) = lo(&mut ys.clone());
        let span = |a: f64, b: f64| if b > a { b - a } else { 1.0 };
        Frame {
            x0,
            y0,
            sx: (W - 2.0 * PAD) / span(x0, x1),
            sy: (H - 2.0 * PAD) / span(y0, y1),
        }
    }

    fn x(&self, v: f64) -> f64 {
        PAD + (v - self.x0) * self.sx
    }

    /// SVG's y axis points down.
    fn y(&self, v: f64) -> f64 {
        H - PAD - (v - self.y0) * self.sy
    }
}

/// Tree layout: leaves spread left to right in DFS order, depth downwards.
fn layout(t: &HostTree) -> Vec<(f64, f64)> {
    let adj = t.adjacency();
    let parent = t.parents();
    let mut pos = vec![(0.0, 0.0); t.n];
    let mut next_leaf = 0.0;
    fn go(v: usize, d: f64, adj: &[Vec<usize>], parent: &[Option<usize>], pos: &mut [(f64, f64)], leaf: &mut f64) {
        let kids: Vec<usize> = adj[v].iter().copied().filter(|&w| parent[w] == Some(v)).collect();
        if kids.is_empty() {
            pos[v] = (*leaf, -d);
            *leaf += 1.0;
            return;
        }
        for &w in &kids {
            go(w, d + 1.0, adj, parent, pos, leaf);
        }
        let x = kids.iter().map(|&w| pos[w].0).sum::<f64>() / kids.len() as f64;
        pos[v] = (x, -d);
    }
    go(t.root, 0.0, &adj, &parent, &mut pos, &mut next_leaf);
    pos
}

/// Deterministic SVG 1.1 drawing of a model.
pub fn svg_export(model: &Model) -> String {
    let mut body = String::new();
    let color = |i: usize| PALETTE[i % PALETTE.len()];
    match model {
        Model::Intervals(m) if !m.intervals.is_empty() => {
            let f = Frame::fit(
                m.intervals.iter().flat_map(|i| [to_f64(&i.l), to_f64(&i.r)]),
                (0..=m.intervals.len()).map(|i| i as f64),
            );
            for (i, iv) in m.intervals.iter().enumerate() {
                let y = f.y(i as f64 + 0.5);
                writeln!(
                    body,
                    r#"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{}" stroke-width="3"/>"#,
                    f.x(to_f64(&iv.l)),
                    f.x(to_f64(&iv.r)),
                    color(i)
                )
                .unwrap();
            }
        }
        Model::Rectangles(m) if !m.rectangles.is_empty() => {
            let f = Frame::fit(
                m.rectangles.iter().flat_map(|r| [to_f64(&r.x.l), to_f64(&r.x.r)]),
                m.rectangles.iter().flat_map(|r| [to_f64(&r.y.l), to_f64(&r.y.r)]),
            );
            for (i, r) in m.rectangles.iter().enumerate() {
                let (x1, x2) = (f.x(to_f64(&r.x.l)), f.x(to_f64(&r.x.r)));
                let (y1, y2) = (f.y(to_f64(&r.y.r)), f.y(to_f64(&r.y.l)));
                writeln!(
                    body,
                    r#"<rect x="{x1:.2}" y="{y1:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="{}"/>"#,
                    x2 - x1,
                    y2 - y1,
                    color(i)
                )
                .unwrap();
            }
        }
        Model::Filaments(m) if !m.filaments.is_empty() => {
            let pts = || m.filaments.iter().flat_map(|f| f.points.iter());
            let f = Frame::fit(pts().map(|p| to_f64(&p.0)), pts().map(|p| to_f64(&p.1)));
            for (i, fil) in m.filaments.iter().enumerate() {
                let coords: Vec<String> = fil
                    .points
                    .iter()
                    .map(|(t, h)| format!("{:.2},{:.2}", f.x(to_f64(t)), f.y(to_f64(h))))
                    .collect();
                writeln!(
                    body,
                    r#"<polyline points="{}" fill="none" stroke="{}"/>"#,
                    coords.join(" "),
                    color(i)
                )
                .unwrap();
            }
        }
        Model::Subtrees(m) => {
            let pos = layout(&m.tree);
            let f = Frame::fit(pos.iter().map(|p| p.0), pos.iter().map(|p| p.1));
            for (i, s) in m.subtrees.iter().enumerate() {
                let r = 8.0 + 4.0 * (i % 6) as f64;
                for &[a, b] in &m.tree.edges {
                    if s.binary_search(&a).is_ok() && s.binary_search(&b).is_ok() {
                        writeln!(
                            body,
                            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}" stroke-width="{:.0}" stroke-opacity="0.3" stroke-linecap="round"/>"#,
                            f.x(pos[a].0), f.y(pos[a].1), f.x(pos[b].0), f.y(pos[b].1), color(i), r
                        )
                        .unwrap();
                    }
                }
                for &t in s {
                    writeln!(
                        body,
                        r#"<circle cx="{:.2}" cy="{:.2}" r="{:.1}" fill="none" stroke="{}"/>"#,
                        f.x(pos[t].0),
                        f.y(pos[t].1),
                        r / 2.0 + 3.0,
                        color(i)
                    )
                    .unwrap();
                }
            }
            for &[a, b] in &m.tree.edges {
                writeln!(
                    body,
                    r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
                    f.x(pos[a].0), f.y(pos[a].1), f.x(pos[b].0), f.y(pos[b].1)
                )
                .unwrap();
            }
            for (v, p) in pos.iter().enumerate() {
                writeln!(
                    body,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="black"/><text x="{:.2}" y="{:.2}" font-size="10">{}</text>"#,
                    f.x(p.0), f.y(p.1), f.x(p.0) + 5.0, f.y(p.1) - 5.0, m.tree.label(v)
                )
                .unwrap();
            }
        }
        _ => {}
    }
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">\n{body}</svg>\n"
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Interval, Rect, RectangleModel};

    #[test]
    fn empty_and_rectangles() {
        let empty = svg_export(&Model::Rectangles(RectangleModel { rectangles: vec![] }));
        assert!(empty.contains("<svg") && !empty.contains("<rect"));
        let m = Model::Rectangles(RectangleModel {
            rectangles: vec![Rect::new(Interval::ints(0, 2), Interval::ints(0, 1))],
        });
        let a = svg_export(&m);
        assert_eq!(a.matches("<rect").count(), 1);
        assert_eq!(a, svg_export(&m));
    }
}
