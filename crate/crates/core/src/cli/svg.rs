//! Floating-point drawings and their SVG 1.1 serialization. Exact values are
//! converted to f64 only here.

use std::fmt::Write;

use crate::projective::{Conic, Line, Point};

const SIZE: f64 = 640.0;
const GLYPH: f64 = 9.0;

pub type P2 = [f64; 2];

#[derive(Clone, Debug, PartialEq)]
pub enum Absolute {
    /// Center, semi-axes and the rotation of the first axis in radians.
    Ellipse { center: P2, radii: P2, angle: f64 },
    /// A real conic that is not an ellipse in the affine chart.
    Unbounded,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Drawing {
    pub title: String,
    pub absolute: Option<Absolute>,
    /// `a·x + b·y + c = 0`, clipped to the viewport.
    pub lines: Vec<[f64; 3]>,
    pub segments: Vec<(P2, P2)>,
    /// Vertex, then one point along each arm.
    pub right_angles: Vec<(P2, P2, P2)>,
    pub points: Vec<(String, P2)>,
    pub notes: Vec<String>,
    /// xmin, ymin, xmax, ymax.
    pub viewport: Option<[f64; 4]>,
}

pub fn p2(p: &Point) -> Option<P2> {
    p.affine_f64().map(|(x, y)| [x, y])
}

pub fn line3(l: &Line) -> Option<[f64; 3]> {
    let c = l.coords();
    Some([c[0].to_f64()?, c[1].to_f64()?, c[2].to_f64()?])
}

/// The affine trace of a real conic.
pub fn absolute_shape(k: &Conic) -> Absolute {
    let m: Vec<Vec<f64>> = k
        .matrix()
        .iter()
        .map(|row| row.iter().map(|x| num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)).collect())
        .collect();
    let (a, b, c, d, e, f) = (m[0][0], m[0][1], m[1][1], m[0][2], m[1][2], m[2][2]);
    let det = a * c - b * b;
    if det <= 0.0 {
        return Absolute::Unbounded;
    }
    let cx = (b * e - c * d) / det;
    let cy = (b * d - a * e) / det;
    let k0 = f + d * cx + e * cy;
    let angle = 0.5 * (2.0 * b).atan2(a - c);
    let (s, co) = angle.sin_cos();
    let l1 = a * co * co + 2.0 * b * s * co + c * s * s;
    let l2 = a * s * s - 2.0 * b * s * co + c * co * co;
    if -k0 / l1 <= 0.0 || -k0 / l2 <= 0.0 {
        return Absolute::Unbounded;
    }
    Absolute::Ellipse { center: [cx, cy], radii: [(-k0 / l1).sqrt(), (-k0 / l2).sqrt()], angle }
}

fn square_around(x0: f64, y0: f64, x1: f64, y1: f64) -> [f64; 4] {
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let half = ((x1 - x0).max(y1 - y0) / 2.0).max(1e-9) * 1.2;
    [cx - half, cy - half, cx + half, cy + half]
}

impl Drawing {
    /// The given viewport, else the bounding square of the absolute (or of
    /// the labeled points) padded by 20%.
    pub fn view(&self) -> [f64; 4] {
        if let Some(v) = self.viewport {
            return v;
        }
        if let Some(Absolute::Ellipse { center, radii, angle }) = &self.absolute {
            let (s, c) = angle.sin_cos();
            let wx = (radii[0] * radii[0] * c * c + radii[1] * radii[1] * s * s).sqrt();
            let wy = (radii[0] * radii[0] * s * s + radii[1] * radii[1] * c * c).sqrt();
            return square_around(center[0] - wx, center[1] - wy, center[0] + wx, center[1] + wy);
        }
        let pts = self.points.iter().map(|(_, p)| *p);
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for [x, y] in pts {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        if x0 > x1 {
            return [-1.0, -1.0, 1.0, 1.0];
        }
        square_around(x0, y0, x1, y1)
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Part of `a·x + b·y + c = 0` inside the box.
fn clip_line(l: &[f64; 3], v: &[f64; 4]) -> Option<(P2, P2)> {
    let [a, b, c] = *l;
    let mut hits: Vec<P2> = Vec::new();
    if b.abs() > 1e-15 {
        for x in [v[0], v[2]] {
            let y = -(a * x + c) / b;
            if y >= v[1] - 1e-12 && y <= v[3] + 1e-12 {
                hits.push([x, y]);
            }
        }
    }
    if a.abs() > 1e-15 {
        for y in [v[1], v[3]] {
            let x = -(b * y + c) / a;
            if x >= v[0] - 1e-12 && x <= v[2] + 1e-12 {
                hits.push([x, y]);
            }
        }
    }
    hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    hits.dedup_by(|p, q| (p[0] - q[0]).abs() < 1e-12 && (p[1] - q[1]).abs() < 1e-12);
    (hits.len() >= 2).then(|| (hits[0], hits[hits.len() - 1]))
}

pub fn render(d: &Drawing) -> String {
    let v = d.view();
    let scale = SIZE / (v[2] - v[0]).max(v[3] - v[1]);
    let sx = |x: f64| (x - v[0]) * scale;
    let sy = |y: f64| (v[3] - y) * scale;
    let mut s = String::new();
    let w = &mut s;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(w, "<title>{}</title>", escape(&d.title));
    let _ = writeln!(w, r#"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    match &d.absolute {
        Some(Absolute::Ellipse { center, radii, angle }) => {
            let (cx, cy) = (num(sx(center[0])), num(sy(center[1])));
            let (rx, ry) = (radii[0] * scale, radii[1] * scale);
            if (rx - ry).abs() <= 1e-9 * rx.max(1.0) {
                let _ = writeln!(w, r#"<circle class="absolute" cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="black" stroke-width="1.5"/>"#, num(rx));
            } else {
                let deg = -angle.to_degrees();
                let _ = writeln!(
                    w,
                    r#"<ellipse class="absolute" cx="{cx}" cy="{cy}" rx="{}" ry="{}" transform="rotate({} {cx} {cy})" fill="none" stroke="black" stroke-width="1.5"/>"#,
                    num(rx),
                    num(ry),
                    num(deg)
                );
            }
        }
        Some(Absolute::Unbounded) => {}
        None => {}
    }
    for l in &d.lines {
        if let Some((p, q)) = clip_line(l, &v) {
            let _ = writeln!(
                w,
                r##"<line class="line" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#777" stroke-width="1" stroke-dasharray="6 4"/>"##,
                num(sx(p[0])),
                num(sy(p[1])),
                num(sx(q[0])),
                num(sy(q[1]))
            );
        }
    }
    for (p, q) in &d.segments {
        let _ = writeln!(
            w,
            r#"<line class="segment" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1.2"/>"#,
            num(sx(p[0])),
            num(sy(p[1])),
            num(sx(q[0])),
            num(sy(q[1]))
        );
    }
    for (vx, a1, a2) in &d.right_angles {
        let o = [sx(vx[0]), sy(vx[1])];
        let unit = |p: &P2| -> Option<P2> {
            let (dx, dy) = (sx(p[0]) - o[0], sy(p[1]) - o[1]);
            let n = dx.hypot(dy);
            (n > 1e-9).then(|| [dx / n * GLYPH, dy / n * GLYPH])
        };
        if let (Some(u), Some(t)) = (unit(a1), unit(a2)) {
            let _ = writeln!(
                w,
                r#"<path class="right-angle" d="M {} {} L {} {} L {} {}" fill="none" stroke="black" stroke-width="0.8"/>"#,
                num(o[0] + u[0]),
                num(o[1] + u[1]),
                num(o[0] + u[0] + t[0]),
                num(o[1] + u[1] + t[1]),
                num(o[0] + t[0]),
                num(o[1] + t[1])
            );
        }
    }
    for (name, p) in &d.points {
        let (x, y) = (sx(p[0]), sy(p[1]));
        let _ = writeln!(w, r#"<circle class="point" cx="{}" cy="{}" r="3" fill="black"/>"#, num(x), num(y));
        let _ = writeln!(
            w,
            r#"<text class="label" x="{}" y="{}" font-family="serif" font-size="16">{}</text>"#,
            num(x + 6.0),
            num(y - 6.0),
            escape(name)
        );
    }
    for (i, note) in d.notes.iter().enumerate() {
        let _ = writeln!(
            w,
            r#"<text class="note" x="8" y="{}" font-family="sans-serif" font-size="12">{}</text>"#,
            num(SIZE - 10.0 - 16.0 * (d.notes.len() - 1 - i) as f64),
            escape(note)
        );
    }
    let _ = writeln!(w, "</svg>");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_circle_shape_and_view() {
        let Absolute::Ellipse { center, radii, .. } = absolute_shape(&Conic::unit_circle()) else {
            panic!("ellipse expected");
        };
        assert_eq!(center, [0.0, 0.0]);
        assert!((radii[0] - 1.0).abs() < 1e-12 && (radii[1] - 1.0).abs() < 1e-12);
        let d = Drawing { absolute: Some(absolute_shape(&Conic::unit_circle())), ..Drawing::default() };
        let v = d.view();
        assert!((v[0] + 1.2).abs() < 1e-12 && (v[2] - 1.2).abs() < 1e-12);
        assert!(render(&d).contains("<circle class=\"absolute\""));
    }

    #[test]
    fn clipping() {
        let v = [-1.0, -1.0, 1.0, 1.0];
        let (p, q) = clip_line(&[0.0, 1.0, 0.0], &v).unwrap();
        assert_eq!((p, q), ([-1.0, 0.0], [1.0, 0.0]));
        assert!(clip_line(&[0.0, 1.0, -5.0], &v).is_none());
        let (p, q) = clip_line(&[1.0, -1.0, 0.0], &v).unwrap();
        assert_eq!((p, q), ([-1.0, -1.0], [1.0, 1.0]));
    }
}
