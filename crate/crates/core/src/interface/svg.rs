use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{io_error, InterfaceError};
use crate::constructions::GeometricConfiguration;
use crate::{Conic, ConicKind, PlanarPoint};

/// Samples per unbounded or degenerate conic.
const SAMPLES: usize = 256;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SceneStyle {
    pub stroke_width: f64,
    pub point_radius: f64,
    /// Conic `j` is stroked with `palette[j % len]`.
    pub palette: Vec<String>,
    pub width: u32,
    pub height: u32,
    /// Fraction of the canvas left free on each side.
    pub margin: f64,
}

impl Default for SceneStyle {
    fn default() -> Self {
        Self {
            stroke_width: 1.2,
            point_radius: 3.0,
            palette: ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"]
                .map(String::from)
                .to_vec(),
            width: 800,
            height: 800,
            margin: 0.05,
        }
    }
}

impl SceneStyle {
    /// Parses a style file; missing fields take their defaults.
    pub fn from_json(text: &str) -> Result<Self, InterfaceError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        super::validate(&value, super::SchemaKind::Style)?;
        let style: Self = serde_json::from_value(value)?;
        style.validate()?;
        Ok(style)
    }

    pub fn validate(&self) -> Result<(), InterfaceError> {
        let bad = |s: &str| Err(InterfaceError::Style(s.into()));
        if !(self.stroke_width > 0.0 && self.point_radius > 0.0) {
            return bad("stroke width and point radius must be positive");
        }
        if self.palette.is_empty() {
            return bad("palette is empty");
        }
        if self.width == 0 || self.height == 0 {
            return bad("canvas dimensions must be positive");
        }
        if !(0.0..0.5).contains(&self.margin) {
            return bad("margin must lie in [0, 0.5)");
        }
        Ok(())
    }
}

/// World-to-canvas map: uniform scale, y pointing up.
struct View {
    scale: f64,
    center: PlanarPoint,
    width: f64,
    height: f64,
}

impl View {
    fn map(&self, p: &PlanarPoint) -> (f64, f64) {
        (
            self.width / 2.0 + (p.x - self.center.x) * self.scale,
            self.height / 2.0 - (p.y - self.center.y) * self.scale,
        )
    }

    /// World x-range and y-range covered by the canvas.
    fn window(&self) -> ((f64, f64), (f64, f64)) {
        let (hw, hh) = (self.width / 2.0 / self.scale, self.height / 2.0 / self.scale);
        (
            (self.center.x - hw, self.center.x + hw),
            (self.center.y - hh, self.center.y + hh),
        )
    }
}

fn ellipse_extent(c: &Conic) -> Option<(PlanarPoint, f64, f64)> {
    let e = c.ellipse_params()?;
    let (s, t) = e.angle.sin_cos();
    let hx = ((e.semi_major * t).powi(2) + (e.semi_minor * s).powi(2)).sqrt();
    let hy = ((e.semi_major * s).powi(2) + (e.semi_minor * t).powi(2)).sqrt();
    Some((e.center, hx, hy))
}

fn fit_view(g: &GeometricConfiguration, style: &SceneStyle) -> Result<Option<View>, InterfaceError> {
    let mut lo = PlanarPoint::new(f64::INFINITY, f64::INFINITY);
    let mut hi = PlanarPoint::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut grow = |p: PlanarPoint| {
        lo = PlanarPoint::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = PlanarPoint::new(hi.x.max(p.x), hi.y.max(p.y));
    };
    for p in &g.points {
        grow(*p);
    }
    for c in &g.conics {
        if let Some((center, hx, hy)) = ellipse_extent(c) {
            grow(center - PlanarPoint::new(hx, hy));
            grow(center + PlanarPoint::new(hx, hy));
        }
    }
    if !lo.x.is_finite() {
        if let Some(j) = (0..g.conics.len()).next() {
            return Err(InterfaceError::Unbounded(j));
        }
        return Ok(None);
    }
    let (w, h) = (style.width as f64, style.height as f64);
    let span = PlanarPoint::new((hi.x - lo.x).max(1e-9), (hi.y - lo.y).max(1e-9));
    let usable = 1.0 - 2.0 * style.margin;
    let scale = (w * usable / span.x).min(h * usable / span.y);
    // a lone point gets a unit-sized window
    let scale = if span.x.max(span.y) <= 1e-9 {
        w.min(h) * usable
    } else {
        scale
    };
    Ok(Some(View {
        scale,
        center: lo.midpoint(&hi),
        width: w,
        height: h,
    }))
}

/// Polyline branches of a non-ellipse conic over the canvas window,
/// solving for `y` at evenly spaced `x`.
fn sampled_branches(c: &Conic, view: &View) -> Vec<Vec<PlanarPoint>> {
    let [a, b, cc, d, e, f] = c.coefficients();
    let ((x0, x1), (y0, y1)) = view.window();
    let pad = y1 - y0;
    let inside = |y: f64| y.is_finite() && y > y0 - pad && y < y1 + pad;
    let mut lower: Vec<Vec<PlanarPoint>> = vec![Vec::new()];
    let mut upper: Vec<Vec<PlanarPoint>> = vec![Vec::new()];
    let scale = a
        .abs()
        .max(b.abs())
        .max(cc.abs())
        .max(d.abs())
        .max(e.abs())
        .max(f.abs());
    for k in 0..SAMPLES {
        let x = x0 + (x1 - x0) * k as f64 / (SAMPLES - 1) as f64;
        // cc y² + (b x + e) y + (a x² + d x + f) = 0
        let (qa, qb, qc) = (cc, b * x + e, a * x * x + d * x + f);
        let roots: Vec<f64> = if qa.abs() <= 1e-12 * scale {
            if qb.abs() <= 1e-12 * scale {
                vec![]
            } else {
                vec![-qc / qb]
            }
        } else {
            let disc = qb * qb - 4.0 * qa * qc;
            if disc < 0.0 {
                vec![]
            } else {
                let s = disc.sqrt();
                let (r1, r2) = ((-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa));
                vec![r1.min(r2), r1.max(r2)]
            }
        };
        for (branches, root) in [(&mut lower, roots.first()), (&mut upper, roots.get(1))] {
            match root {
                Some(&y) if inside(y) => branches.last_mut().unwrap().push(PlanarPoint::new(x, y)),
                _ => {
                    if !branches.last().unwrap().is_empty() {
                        branches.push(Vec::new());
                    }
                }
            }
        }
    }
    lower.into_iter().chain(upper).filter(|b| b.len() >= 2).collect()
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// Deterministic SVG of the configuration: one `<ellipse>` per ellipse,
/// one sampled `<path>` per other conic, one `<circle>` per point, fitted
/// to the canvas.
pub fn render_svg(g: &GeometricConfiguration, style: &SceneStyle) -> Result<String, InterfaceError> {
    style.validate()?;
    let mut out = String::new();
    let (w, h) = (style.width, style.height);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    if let Some(view) = fit_view(g, style)? {
        writeln!(out, r#"<g fill="none" stroke-width="{}">"#, num(style.stroke_width)).unwrap();
        for (j, c) in g.conics.iter().enumerate() {
            let colour = &style.palette[j % style.palette.len()];
            match c.ellipse_params() {
                Some(e) if c.kind() == ConicKind::Ellipse => {
                    let (cx, cy) = view.map(&e.center);
                    writeln!(
                        out,
                        r#"<ellipse cx="{}" cy="{}" rx="{}" ry="{}" transform="rotate({} {} {})" stroke="{colour}"/>"#,
                        num(cx),
                        num(cy),
                        num(e.semi_major * view.scale),
                        num(e.semi_minor * view.scale),
                        num(-e.angle.to_degrees()),
                        num(cx),
                        num(cy)
                    )
                    .unwrap();
                }
                _ => {
                    let mut d = String::new();
                    for branch in sampled_branches(c, &view) {
                        for (k, p) in branch.iter().enumerate() {
                            let (x, y) = view.map(p);
                            write!(d, "{}{} {} ", if k == 0 { "M" } else { "L" }, num(x), num(y)).unwrap();
                        }
                    }
                    writeln!(out, r#"<path d="{}" stroke="{colour}"/>"#, d.trim_end()).unwrap();
                }
            }
        }
        writeln!(out, "</g>").unwrap();
        writeln!(out, r#"<g fill="black">"#).unwrap();
        for p in &g.points {
            let (x, y) = view.map(p);
            writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{}"/>"#,
                num(x),
                num(y),
                num(style.point_radius)
            )
            .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

pub fn write_svg(g: &GeometricConfiguration, style: &SceneStyle, path: &Path) -> Result<(), InterfaceError> {
    let svg = render_svg(g, style)?;
    std::fs::write(path, svg).map_err(io_error(path))
}
