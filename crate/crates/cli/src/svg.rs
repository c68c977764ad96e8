//! SVG figures of a quadrilateral and some of its inscribed ellipses.

use std::fmt::Write;

use inellipse_core::{InscribedEllipse, Point, Quadrilateral, Vector};

/// Segments per ellipse polyline.
pub const ELLIPSE_SEGMENTS: usize = 256;

const CANVAS: f64 = 800.0;
const PADDING: f64 = 40.0;

const STYLE: &str = "\
.quad{fill:none;stroke:#222;stroke-width:2}\
.diagonal{stroke:#777;stroke-width:1;stroke-dasharray:6 4}\
.newton{stroke:#b36b00;stroke-width:1}\
.midpoint{fill:#b36b00}\
.ellipse{fill:none;stroke:#1f5fa8;stroke-width:1.5}\
.tangency{fill:#c0392b}\
.conjugate-diameter{stroke:#2e8b57;stroke-width:1.5}";

/// Maps plane coordinates onto the canvas with `y` pointing up.
struct View {
    min: Point,
    max: Point,
    scale: f64,
}

impl View {
    fn fit(q: &Quadrilateral) -> Self {
        let v = q.vertices();
        let lo = Point::new(
            v.iter().map(|p| p.x).fold(f64::INFINITY, f64::min),
            v.iter().map(|p| p.y).fold(f64::INFINITY, f64::min),
        );
        let hi = Point::new(
            v.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max),
            v.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max),
        );
        let pad = 0.05 * q.diameter();
        let min = Point::new(lo.x - pad, lo.y - pad);
        let max = Point::new(hi.x + pad, hi.y + pad);
        let scale = (CANVAS - 2.0 * PADDING) / (max.x - min.x).max(max.y - min.y);
        View { min, max, scale }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (PADDING + (p.x - self.min.x) * self.scale, PADDING + (self.max.y - p.y) * self.scale)
    }

    /// The part of the line through `p` along `u` inside the view box.
    fn clip_line(&self, p: Point, u: Vector) -> Option<(Point, Point)> {
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (start, dir, a, b) in [(p.x, u.x, self.min.x, self.max.x), (p.y, u.y, self.min.y, self.max.y)] {
            if dir.abs() < 1e-300 {
                if start < a || start > b {
                    return None;
                }
                continue;
            }
            let (t0, t1) = ((a - start) / dir, (b - start) / dir);
            lo = lo.max(t0.min(t1));
            hi = hi.min(t0.max(t1));
        }
        (lo < hi).then(|| (p + u * lo, p + u * hi))
    }
}

pub struct Figure<'a> {
    pub quad: &'a Quadrilateral,
    pub ellipses: &'a [InscribedEllipse],
    /// Endpoints of the equal conjugate diameters of the least eccentric ellipse.
    pub conjugate_diameters: Option<[(Point, Point); 2]>,
    pub title: Option<&'a str>,
}

impl Figure<'_> {
    pub fn render(&self) -> String {
        let view = View::fit(self.quad);
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
        );
        if let Some(title) = self.title {
            let _ = writeln!(out, "<title>{}</title>", escape(title));
        }
        let _ = writeln!(out, r#"<style type="text/css">{STYLE}</style>"#);

        let corners: Vec<String> = self.quad.vertices().iter().map(|&p| coord(view.map(p))).collect();
        let _ = writeln!(out, r#"<polygon class="quad" points="{}"/>"#, corners.join(" "));

        let diag = self.quad.diagonals();
        for d in [diag.d1, diag.d2] {
            line(&mut out, &view, "diagonal", d.start, d.end);
        }
        if let Some(newton) = diag.newton_segment {
            if let Some((a, b)) = view.clip_line(newton.start, newton.direction()) {
                line(&mut out, &view, "newton", a, b);
            }
            for m in [diag.m1, diag.m2] {
                circle(&mut out, &view, "midpoint", m, 3.0);
            }
        }

        for ie in self.ellipses {
            let Ok(g) = ie.geometry() else { continue };
            let points: Vec<String> = (0..=ELLIPSE_SEGMENTS)
                .map(|i| coord(view.map(g.point_at(std::f64::consts::TAU * i as f64 / ELLIPSE_SEGMENTS as f64))))
                .collect();
            let _ = writeln!(out, r#"<polyline class="ellipse" points="{}"/>"#, points.join(" "));
            for &t in &ie.tangency {
                circle(&mut out, &view, "tangency", t, 4.0);
            }
        }

        if let Some(pairs) = self.conjugate_diameters {
            for (a, b) in pairs {
                line(&mut out, &view, "conjugate-diameter", a, b);
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn coord((x, y): (f64, f64)) -> String {
    format!("{x:.3},{y:.3}")
}

fn line(out: &mut String, view: &View, class: &str, a: Point, b: Point) {
    let ((x1, y1), (x2, y2)) = (view.map(a), view.map(b));
    let _ = writeln!(out, r#"<line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
}

fn circle(out: &mut String, view: &View, class: &str, p: Point, radius: f64) {
    let (cx, cy) = view.map(p);
    let _ = writeln!(out, r#"<circle class="{class}" cx="{cx:.3}" cy="{cy:.3}" r="{radius}"/>"#);
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
