//! Static SVG line plots: a framed axis box, tick labels and one polyline
//! per series. No plotting dependency; the output is plain SVG 1.1.

use std::fmt::Write;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PlotError {
    #[error("plot has no series")]
    NoSeries,
    #[error("series '{0}' has no points")]
    EmptySeries(String),
    #[error("series '{0}' contains a non-finite value")]
    NonFinite(String),
    #[error("axis range must be finite and increasing")]
    BadRange,
    #[error("plot size must be at least 100x100 pixels")]
    BadSize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub width: u32,
    pub height: u32,
    pub x_label: String,
    pub y_label: String,
    /// `None` fits the data.
    pub x_range: Option<(f64, f64)>,
    pub y_range: Option<(f64, f64)>,
    pub series: Vec<Series>,
}

impl PlotSpec {
    pub fn new(x_label: &str, y_label: &str, series: Vec<Series>) -> Self {
        PlotSpec {
            width: 640,
            height: 400,
            x_label: x_label.to_string(),
            y_label: y_label.to_string(),
            x_range: None,
            y_range: None,
            series,
        }
    }
}

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 45.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

pub fn render(spec: &PlotSpec) -> Result<String, PlotError> {
    if spec.series.is_empty() {
        return Err(PlotError::NoSeries);
    }
    if spec.width < 100 || spec.height < 100 {
        return Err(PlotError::BadSize);
    }
    for s in &spec.series {
        if s.points.is_empty() {
            return Err(PlotError::EmptySeries(s.label.clone()));
        }
        if s.points.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(PlotError::NonFinite(s.label.clone()));
        }
    }
    let all = || spec.series.iter().flat_map(|s| s.points.iter().copied());
    let (x0, x1) = resolve(spec.x_range, all().map(|p| p.0))?;
    let (y0, y1) = resolve(spec.y_range, all().map(|p| p.1))?;

    let (w, h) = (spec.width as f64, spec.height as f64);
    let (left, right) = (MARGIN_LEFT, w - MARGIN_RIGHT);
    let (top, bottom) = (MARGIN_TOP, h - MARGIN_BOTTOM);
    let sx = |x: f64| left + (x - x0) / (x1 - x0) * (right - left);
    let sy = |y: f64| bottom - (y - y0) / (y1 - y0) * (bottom - top);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        spec.width, spec.height, spec.width, spec.height
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<g font-family="sans-serif" font-size="11" fill="black">"#
    );
    for t in ticks(x0, x1) {
        let x = sx(t.value);
        let _ = writeln!(
            out,
            r#"<line x1="{x:.2}" y1="{bottom:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#,
            bottom + 5.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            bottom + 17.0,
            t.label
        );
    }
    for t in ticks(y0, y1) {
        let y = sy(t.value);
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{left:.2}" y2="{y:.2}" stroke="black"/>"#,
            left - 5.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            left - 8.0,
            y + 4.0,
            t.label
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        (left + right) / 2.0,
        h - 8.0,
        escape(&spec.x_label)
    );
    let _ = writeln!(
        out,
        r#"<text x="14" y="{:.2}" text-anchor="middle" transform="rotate(-90 14 {:.2})">{}</text>"#,
        (top + bottom) / 2.0,
        (top + bottom) / 2.0,
        escape(&spec.y_label)
    );
    out.push_str("</g>\n");
    let _ = writeln!(
        out,
        r#"<rect x="{left:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        right - left,
        bottom - top
    );

    for (i, s) in spec.series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let mut pts = String::new();
        for (j, &(x, y)) in s.points.iter().enumerate() {
            if j > 0 {
                pts.push(' ');
            }
            let _ = write!(pts, "{:.2},{:.2}", sx(x), sy(y));
        }
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"><title>{}</title></polyline>"#,
            escape(&s.label)
        );
        let ly = top + 14.0 + 14.0 * i as f64;
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{ly:.2}" font-family="sans-serif" font-size="11" fill="{color}" text-anchor="end">{}</text>"#,
            right - 6.0,
            escape(&s.label)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn resolve(explicit: Option<(f64, f64)>, values: impl Iterator<Item = f64>) -> Result<(f64, f64), PlotError> {
    if let Some((a, b)) = explicit {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(PlotError::BadRange);
        }
        return Ok((a, b));
    }
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if lo == hi {
        let pad = if lo == 0.0 { 1.0 } else { lo.abs() * 0.1 };
        return Ok((lo - pad, hi + pad));
    }
    Ok((lo, hi))
}

struct Tick {
    value: f64,
    label: String,
}

/// Round-number ticks inside `[lo, hi]`, roughly five of them.
fn ticks(lo: f64, hi: f64) -> Vec<Tick> {
    let raw = (hi - lo) / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last)
        .map(|i| {
            let value = i as f64 * step;
            // + 0.0 turns a negative zero into zero
            let label = format!("{:.*}", decimals, value + 0.0);
            Tick { value, label }
        })
        .collect()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
