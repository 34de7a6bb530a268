//! Standalone SVG plots of sequence terms: scatter plots (one dot per term)
//! and pin plots (a vertical pin from the axis to each term). Output is a
//! pure function of the inputs, so files are byte-identical across runs.

use std::collections::BTreeSet;
use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::seq::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotStyle {
    Scatter,
    Pin,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotOptions {
    pub style: PlotStyle,
    /// Logarithmic y axis; every value must then be positive.
    pub log_y: bool,
    pub title: String,
    pub width: u32,
    pub height: u32,
    /// Indexes whose values are only lower bounds (for example a budget
    /// stop). They are drawn in a contrasting colour, never dropped.
    pub lower_bounds: BTreeSet<i64>,
}

impl Default for PlotOptions {
    fn default() -> Self {
        Self { style: PlotStyle::Scatter, log_y: false, title: String::new(), width: 800, height: 500, lower_bounds: BTreeSet::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlotError {
    #[error("nothing to plot")]
    Empty,
    #[error("a(n) = {value} at n = {index} cannot be drawn on a log scale")]
    NonPositive { index: i64, value: String },
}

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 45.0;

struct Axis {
    lo: f64,
    hi: f64,
    from: f64,
    to: f64,
}

impl Axis {
    /// Maps `lo..hi` onto `from..to`; a degenerate range maps to the middle.
    fn map(&self, v: f64) -> f64 {
        if self.hi == self.lo {
            (self.from + self.to) / 2.0
        } else {
            self.from + (v - self.lo) / (self.hi - self.lo) * (self.to - self.from)
        }
    }
}

/// Coordinates are rounded to two decimals so output does not depend on
/// the last bits of floating-point evaluation order.
fn px(v: f64) -> String {
    format!("{v:.2}")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders `terms` as an SVG document with axes labelled `n` and `a(n)`.
pub fn render_svg(terms: &[Term], opts: &PlotOptions) -> Result<String, PlotError> {
    if terms.is_empty() {
        return Err(PlotError::Empty);
    }
    let mut points = Vec::with_capacity(terms.len());
    for t in terms {
        let y = t.value.to_f64().unwrap_or(f64::INFINITY);
        let y = if opts.log_y {
            if y <= 0.0 {
                return Err(PlotError::NonPositive { index: t.index, value: t.value.to_string() });
            }
            y.log10()
        } else {
            y
        };
        points.push((t.index as f64, y));
    }
    let (w, h) = (opts.width as f64, opts.height as f64);
    let fold = |f: fn(f64, f64) -> f64, sel: fn(&(f64, f64)) -> f64, init: f64| points.iter().map(sel).fold(init, f);
    let x_axis = Axis { lo: fold(f64::min, |p| p.0, f64::INFINITY), hi: fold(f64::max, |p| p.0, f64::NEG_INFINITY), from: MARGIN_LEFT, to: w - MARGIN_RIGHT };
    let (mut y_lo, y_hi) = (fold(f64::min, |p| p.1, f64::INFINITY), fold(f64::max, |p| p.1, f64::NEG_INFINITY));
    if opts.style == PlotStyle::Pin && !opts.log_y {
        y_lo = y_lo.min(0.0);
    }
    let y_axis = Axis { lo: y_lo, hi: y_hi, from: h - MARGIN_BOTTOM, to: MARGIN_TOP };

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}" font-family="sans-serif" font-size="12">"#, opts.width, opts.height, opts.width, opts.height);
    let _ = writeln!(out, r#"<rect width="{}" height="{}" fill="white"/>"#, opts.width, opts.height);
    if !opts.title.is_empty() {
        let _ = writeln!(out, r#"<text x="{}" y="18" text-anchor="middle">{}</text>"#, px(w / 2.0), escape(&opts.title));
    }
    // Axes and labels.
    let (x0, x1, y0, y1) = (MARGIN_LEFT, w - MARGIN_RIGHT, h - MARGIN_BOTTOM, MARGIN_TOP);
    let _ = writeln!(out, r#"<g class="axes" stroke="black" stroke-width="1"><line x1="{}" y1="{}" x2="{}" y2="{}"/><line x1="{}" y1="{}" x2="{}" y2="{}"/></g>"#, px(x0), px(y0), px(x1), px(y0), px(x0), px(y0), px(x0), px(y1));
    let _ = writeln!(out, r#"<text class="xlabel" x="{}" y="{}" text-anchor="middle">n</text>"#, px((x0 + x1) / 2.0), px(h - 8.0));
    let ylabel = if opts.log_y { "log10 a(n)" } else { "a(n)" };
    let _ = writeln!(out, r#"<text class="ylabel" x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">{ylabel}</text>"#, px((y0 + y1) / 2.0), px((y0 + y1) / 2.0));
    for (axis, is_x) in [(&x_axis, true), (&y_axis, false)] {
        let ticks = if axis.hi == axis.lo { vec![axis.lo] } else { (0..=4).map(|k| axis.lo + (axis.hi - axis.lo) * k as f64 / 4.0).collect() };
        for v in ticks {
            let label = if v.abs() >= 1e6 { format!("{v:.3e}") } else if v.fract() == 0.0 { format!("{v:.0}") } else { format!("{v:.2}") };
            let p = axis.map(v);
            if is_x {
                let _ = writeln!(out, r#"<text class="tick" x="{}" y="{}" text-anchor="middle">{label}</text>"#, px(p), px(y0 + 16.0));
            } else {
                let _ = writeln!(out, r#"<text class="tick" x="{}" y="{}" text-anchor="end">{label}</text>"#, px(x0 - 4.0), px(p + 4.0));
            }
        }
    }
    // Data.
    let _ = writeln!(out, r#"<g class="data" fill="steelblue" stroke="steelblue">"#);
    let base = y_axis.map(if opts.log_y { y_axis.lo } else { 0f64.clamp(y_axis.lo, y_axis.hi) });
    for (t, &(x, y)) in terms.iter().zip(&points) {
        let (cx, cy) = (px(x_axis.map(x)), px(y_axis.map(y)));
        let mark = if opts.lower_bounds.contains(&t.index) { r#" class="lower-bound" fill="crimson" stroke="crimson""# } else { "" };
        match opts.style {
            PlotStyle::Scatter => {
                let _ = writeln!(out, r#"<circle cx="{cx}" cy="{cy}" r="1.2"{mark}/>"#);
            }
            PlotStyle::Pin => {
                let _ = writeln!(out, r#"<line x1="{cx}" y1="{}" x2="{cx}" y2="{cy}" stroke-width="1"{mark}/>"#, px(base));
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::index_terms;

    #[test]
    fn scatter_has_one_dot_per_term() {
        let terms = index_terms(1, (1..=500u64).map(|n| n * n % 97));
        let svg = render_svg(&terms, &PlotOptions::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 500);
        assert!(svg.contains(">n</text>") && svg.contains(">a(n)</text>"));
        assert_eq!(svg, render_svg(&terms, &PlotOptions::default()).unwrap());
    }

    #[test]
    fn constant_sequence_is_one_horizontal_line() {
        let terms = index_terms(0, [7u64; 30]);
        let svg = render_svg(&terms, &PlotOptions::default()).unwrap();
        let ys: std::collections::BTreeSet<&str> = svg.lines().filter(|l| l.starts_with("<circle")).map(|l| l.split("cy=\"").nth(1).unwrap().split('"').next().unwrap()).collect();
        assert_eq!(ys.len(), 1);
    }

    #[test]
    fn pins_and_log_scale() {
        let terms = index_terms(1, [1u64, 10, 100, 1_000_000_000_000]);
        let opts = PlotOptions { style: PlotStyle::Pin, log_y: true, ..PlotOptions::default() };
        let svg = render_svg(&terms, &opts).unwrap();
        assert_eq!(svg.matches("<line x1").count() - 2, 4);
        assert!(svg.contains("log10 a(n)"));
        let marked = PlotOptions { lower_bounds: BTreeSet::from([4]), ..opts.clone() };
        assert_eq!(render_svg(&terms, &marked).unwrap().matches("lower-bound").count(), 1);
        let bad = index_terms(1, [3i64, 0]);
        assert_eq!(render_svg(&bad, &opts), Err(PlotError::NonPositive { index: 2, value: "0".into() }));
        assert_eq!(render_svg(&[], &opts), Err(PlotError::Empty));
    }
}
