//! SVG cross-sections of a decomposition.
//!
//! Geometry stays exact until a coordinate is written; each chamber is a
//! `<g class="chamber">` group so the regions can be counted.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use sbl_core::{Decomposition, Rational, SlicePoint};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 700.0;
const MARGIN: f64 = 60.0;

struct Frame {
    x0: Rational,
    y1: Rational,
    scale: Rational,
    ox: f64,
    oy: f64,
}

impl Frame {
    fn new(pts: &[SlicePoint]) -> Frame {
        let min = |f: fn(&SlicePoint) -> &Rational| pts.iter().map(f).min().unwrap().clone();
        let max = |f: fn(&SlicePoint) -> &Rational| pts.iter().map(f).max().unwrap().clone();
        let (x0, x1) = (min(|p| &p.x), max(|p| &p.x));
        let (y0, y1) = (min(|p| &p.y), max(|p| &p.y));
        let w = Rational::from_float(WIDTH - 2.0 * MARGIN).unwrap();
        let h = Rational::from_float(HEIGHT - 2.0 * MARGIN).unwrap();
        let scale = (w / (&x1 - &x0)).min(h / (&y1 - &y0));
        let used_w = (&scale * (&x1 - &x0)).to_f64().unwrap();
        let used_h = (&scale * (&y1 - &y0)).to_f64().unwrap();
        Frame {
            x0,
            y1,
            scale,
            ox: (WIDTH - used_w) / 2.0,
            oy: (HEIGHT - used_h) / 2.0,
        }
    }

    fn map(&self, p: &SlicePoint) -> (f64, f64) {
        let x = (&self.scale * (&p.x - &self.x0)).to_f64().unwrap();
        let y = (&self.scale * (&self.y1 - &p.y)).to_f64().unwrap();
        (self.ox + x, self.oy + y)
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn points(frame: &Frame, pts: &[SlicePoint]) -> String {
    pts.iter()
        .map(|p| {
            let (x, y) = frame.map(p);
            format!("{},{}", num(x), num(y))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn centroid(pts: &[SlicePoint]) -> SlicePoint {
    let n = Rational::from_integer(pts.len().into());
    let sx: Rational = pts.iter().map(|p| p.x.clone()).sum();
    let sy: Rational = pts.iter().map(|p| p.y.clone()).sum();
    SlicePoint::new(sx / &n, sy / n)
}

/// Renders the effective triangle, chamber walls, named rays and chamber
/// numbers. Unmatched chambers are numbered `?<index>`.
pub fn render(d: &Decomposition) -> String {
    let arr = d.arrangement();
    let tri = arr.triangle().to_vec();
    let frame = Frame::new(&tri);
    let items = d.match_items();
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = WIDTH,
        h = HEIGHT
    );
    let _ = writeln!(
        s,
        "<title>{}</title>",
        escape(&d.catalog().space().to_string())
    );
    let _ = writeln!(
        s,
        "<style>.chamber polygon{{fill:#f4f4f4;stroke:none}} .gap polygon{{fill:#f6c6c6}} \
         .wall{{stroke:#222;stroke-width:1.2}} .effective{{fill:none;stroke:#000;stroke-width:2}} \
         .ray{{fill:#000}} .ray-label{{font:13px sans-serif}} \
         .chamber-label{{font:bold 14px sans-serif;text-anchor:middle;dominant-baseline:middle}}</style>"
    );

    for (ci, c) in d.chambers().iter().enumerate() {
        let class = if c.is_resolved() {
            "chamber"
        } else {
            "chamber gap"
        };
        let id = items[ci].map_or(format!("?{ci}"), |i| i.to_string());
        let _ = writeln!(s, r#"<g class="{class}" data-item="{id}">"#);
        for &f in &c.faces {
            let _ = writeln!(
                s,
                r#"  <polygon points="{}"/>"#,
                points(&frame, &arr.faces()[f].vertices)
            );
        }
        let _ = writeln!(s, "</g>");
    }

    for (e, edge) in arr.edges().iter().enumerate() {
        let fs = arr.edge_faces(e);
        let wall = match fs {
            [a, b] => d.chamber_of_face(*a) != d.chamber_of_face(*b),
            _ => false,
        };
        if wall {
            let (x1, y1) = frame.map(&edge.vertices[0]);
            let (x2, y2) = frame.map(&edge.vertices[1]);
            let _ = writeln!(
                s,
                r#"<line class="wall" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(x1),
                num(y1),
                num(x2),
                num(y2)
            );
        }
    }
    let _ = writeln!(
        s,
        r#"<polygon class="effective" points="{}"/>"#,
        points(&frame, &tri)
    );

    let mid = centroid(&tri);
    let (mx, my) = frame.map(&mid);
    for (name, p) in arr.named_points() {
        let (x, y) = frame.map(p);
        // Push labels away from the middle of the triangle.
        let (dx, dy) = (x - mx, y - my);
        let len = (dx * dx + dy * dy).sqrt().max(1.0);
        let (lx, ly) = (x + 14.0 * dx / len, y + 14.0 * dy / len);
        let anchor = if dx < -1.0 {
            "end"
        } else if dx > 1.0 {
            "start"
        } else {
            "middle"
        };
        let _ = writeln!(
            s,
            r#"<circle class="ray" cx="{}" cy="{}" r="3"/><text class="ray-label" x="{}" y="{}" text-anchor="{anchor}">{}</text>"#,
            num(x),
            num(y),
            num(lx),
            num(ly),
            escape(name)
        );
    }

    for (ci, c) in d.chambers().iter().enumerate() {
        let largest = c
            .faces
            .iter()
            .max_by(|a, b| {
                arr.faces()[**a]
                    .doubled_area()
                    .cmp(&arr.faces()[**b].doubled_area())
                    .then(b.cmp(a))
            })
            .copied()
            .expect("chambers are nonempty");
        let (x, y) = frame.map(&centroid(&arr.faces()[largest].vertices));
        let id = items[ci].map_or(format!("?{ci}"), |i| i.to_string());
        let _ = writeln!(
            s,
            r#"<text class="chamber-label" x="{}" y="{}">{id}</text>"#,
            num(x),
            num(y)
        );
    }
    let _ = writeln!(s, "</svg>");
    s
}
