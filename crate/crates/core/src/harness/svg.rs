use super::poly::gap_samples;
use super::set::generic_directions;
use super::{Input, PolyCtx};
use crate::exact::rat::to_f64;
use crate::exact::BPoly;
use crate::stratified::{stratified_critical_points, SetKind};
use std::fmt::Write;

const SIZE: f64 = 600.0;
const GRID: usize = 180;

struct View {
    half: f64,
}

impl View {
    fn px(&self, x: f64) -> f64 {
        (x + self.half) / (2.0 * self.half) * SIZE
    }
    fn py(&self, y: f64) -> f64 {
        (self.half - y) / (2.0 * self.half) * SIZE
    }
}

/// Segments of `{p = level}` by marching squares on a uniform grid.
fn contour(p: &BPoly, level: f64, v: &View) -> String {
    let h = 2.0 * v.half / GRID as f64;
    let at = |i: usize, j: usize| {
        let (x, y) = (-v.half + i as f64 * h, -v.half + j as f64 * h);
        (x, y, p.eval_f64(x, y) - level)
    };
    let mut vals = vec![vec![(0.0, 0.0, 0.0); GRID + 1]; GRID + 1];
    for (i, row) in vals.iter_mut().enumerate() {
        for (j, c) in row.iter_mut().enumerate() {
            *c = at(i, j);
        }
    }
    let mut d = String::new();
    for i in 0..GRID {
        for j in 0..GRID {
            let c = [vals[i][j], vals[i + 1][j], vals[i + 1][j + 1], vals[i][j + 1]];
            let mut pts = Vec::new();
            for k in 0..4 {
                let (a, b) = (c[k], c[(k + 1) % 4]);
                if (a.2 < 0.0) != (b.2 < 0.0) {
                    let t = a.2 / (a.2 - b.2);
                    pts.push((a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)));
                }
            }
            for s in pts.chunks(2) {
                if let [p0, p1] = s {
                    let _ = write!(d, "M{:.1} {:.1}L{:.1} {:.1}", v.px(p0.0), v.py(p0.1), v.px(p1.0), v.py(p1.1));
                }
            }
        }
    }
    d
}

fn path(out: &mut String, d: &str, style: &str) {
    if !d.is_empty() {
        let _ = writeln!(out, "<path d=\"{d}\" fill=\"none\" {style}/>");
    }
}

fn marker(out: &mut String, v: &View, x: f64, y: f64, color: &str, label: &str) {
    let _ = writeln!(
        out,
        "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"4\" fill=\"{color}\"/><text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\">{label}</text>",
        v.px(x),
        v.py(y),
        v.px(x) + 6.0,
        v.py(y) - 6.0
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// A plot of the input: level curves at the breakpoints and between them,
/// critical points, the polar curve and the certified circle for a
/// polynomial; the set and the critical points of a generic linear
/// function for a region or curve. Pieces that cannot be computed are
/// left out.
pub fn render_svg(input: &Input, seed: u64) -> String {
    let mut body = String::new();
    let mut notes = vec![escape(&input.to_string())];
    let mut half: f64 = 3.0;
    match input {
        Input::Poly(f) => {
            let ctx = PolyCtx::new(f, seed);
            let mut pts = Vec::new();
            if let Ok(cs) = ctx.critical() {
                for c in cs {
                    let mut p = c.point.clone();
                    let (x, y) = p.to_f64();
                    half = half.max(x.abs() + 1.5).max(y.abs() + 1.5);
                    pts.push((x, y, c.local_degree, c.value.to_f64()));
                }
            }
            let v = View { half: half.min(50.0) };
            if let Ok(bps) = ctx.breakpoints() {
                for s in gap_samples(&bps) {
                    path(&mut body, &contour(f, to_f64(&s), &v), "stroke=\"#999\" stroke-width=\"1\"");
                }
                for b in &bps {
                    path(&mut body, &contour(f, b.to_f64(), &v), "stroke=\"#c0392b\" stroke-width=\"1.5\"");
                }
                notes.push(format!(
                    "breakpoints: {}",
                    bps.iter().map(|b| format!("{:.4}", b.to_f64())).collect::<Vec<_>>().join(", ")
                ));
            }
            if let Ok(inf) = ctx.infinity() {
                path(&mut body, &contour(&inf.h, 0.0, &v), "stroke=\"#2e86c1\" stroke-dasharray=\"4 3\"");
                let r = to_f64(inf.base_radius());
                let _ = writeln!(
                    body,
                    "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"{:.1}\" fill=\"none\" stroke=\"#27ae60\"/>",
                    v.px(to_f64(&inf.a.0)),
                    v.py(to_f64(&inf.a.1)),
                    r / (2.0 * v.half) * SIZE
                );
                notes.push(format!("certified radius {r} around ({}, {})", inf.a.0, inf.a.1));
            }
            if let Ok(js) = ctx.jump_sets() {
                let l: Vec<String> = js.lambda.iter().map(|x| escape(&x.to_string())).collect();
                notes.push(format!("asymptotic critical values: {{{}}}", l.join(", ")));
            }
            for (x, y, d, val) in pts {
                marker(&mut body, &v, x, y, "#000", &format!("deg {d}, f = {val:.3}"));
            }
            half = v.half;
        }
        Input::Set(x) => {
            let v = View { half };
            let fill = if x.kind == SetKind::Region { "stroke=\"#000\" stroke-width=\"2\"" } else { "stroke=\"#8e44ad\" stroke-width=\"2\"" };
            if x.kind == SetKind::Region {
                let h = 2.0 * half / 60.0;
                for i in 0..60 {
                    for j in 0..60 {
                        let (cx, cy) = (-half + (i as f64 + 0.5) * h, -half + (j as f64 + 0.5) * h);
                        if x.g.eval_f64(cx, cy) <= 0.0 {
                            let _ = writeln!(
                                body,
                                "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"#d6eaf8\"/>",
                                v.px(cx - h / 2.0),
                                v.py(cy + h / 2.0),
                                h / (2.0 * half) * SIZE,
                                h / (2.0 * half) * SIZE
                            );
                        }
                    }
                }
            }
            path(&mut body, &contour(&x.g, 0.0, &v), fill);
            if let Ok(ds) = generic_directions(x, 1) {
                let d = &ds[0];
                notes.push(format!("critical points of v* for v = {d}"));
                if let Ok(cs) = stratified_critical_points(x, &d.linear()) {
                    for c in cs {
                        let mut p = c.point.clone();
                        let (px, py) = p.to_f64();
                        marker(&mut body, &v, px, py, "#e67e22", &format!("ind {}", c.index));
                    }
                }
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{}\" viewBox=\"0 0 {SIZE} {}\">",
        SIZE + 20.0 * notes.len() as f64,
        SIZE + 20.0 * notes.len() as f64
    );
    let _ = writeln!(out, "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"#fff\" stroke=\"#ccc\"/>");
    let v = View { half };
    let _ = writeln!(
        out,
        "<path d=\"M0 {:.1}H{SIZE}M{:.1} 0V{SIZE}\" stroke=\"#eee\"/>",
        v.py(0.0),
        v.px(0.0)
    );
    out.push_str(&body);
    for (i, n) in notes.iter().enumerate() {
        let _ = writeln!(out, "<text x=\"4\" y=\"{:.1}\" font-size=\"12\">{n}</text>", SIZE + 15.0 + 20.0 * i as f64);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;
    use crate::stratified::PlaneSet;

    #[test]
    fn well_formed() {
        let s = render_svg(&Input::Poly(parse_poly("x^2 - y^2").unwrap()), 0);
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
        assert!(s.contains("deg -1"));
        let s = render_svg(&Input::Poly(parse_poly("x*(x*y - 1)").unwrap()), 0);
        assert!(s.contains("asymptotic critical values: {0/1}"));
        let disk = PlaneSet::region(parse_poly("x^2 + y^2 - 1").unwrap()).unwrap();
        let s = render_svg(&Input::Set(disk), 0);
        assert_eq!(s.matches("ind ").count(), 2);
    }
}
