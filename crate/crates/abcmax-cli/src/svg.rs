//! Hand-rolled SVG 1.1 line charts for sweep data: no dependencies, and
//! byte-identical output for identical input.

use crate::sweep::SweepRow;
use std::fmt;
use std::fmt::Write as _;

/// Chart dimensions and title.
#[derive(Debug, Clone)]
pub struct ChartSpec {
    pub title: String,
    pub width: u32,
    pub height: u32,
}

impl Default for ChartSpec {
    fn default() -> ChartSpec {
        ChartSpec {
            title: String::from("maximum ABC index by class parameter"),
            width: 900,
            height: 560,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvgError {
    /// There is nothing to plot.
    NoRows,
}

impl fmt::Display for SvgError {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SvgError::NoRows => write!(fm, "no rows to plot"),
        }
    }
}

impl std::error::Error for SvgError {}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 44.0;
const MARGIN_BOTTOM: f64 = 52.0;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Render one polyline per (n, family) series, with axes, ticks, and legend.
pub fn render_svg(rows: &[SweepRow], spec: &ChartSpec) -> Result<String, SvgError> {
    if rows.is_empty() {
        return Err(SvgError::NoRows);
    }
    // series keyed by (n, family), in first-appearance order
    let mut series: Vec<((u64, &'static str), Vec<&SweepRow>)> = Vec::new();
    for row in rows {
        let key = (row.n, row.param_kind.label());
        match series.iter_mut().find(|(k, _)| *k == key) {
            Some((_, list)) => list.push(row),
            None => series.push((key, vec![row])),
        }
    }
    let mut x_lo = f64::INFINITY;
    let mut x_hi = f64::NEG_INFINITY;
    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for row in rows {
        let x = row.param_value as f64;
        x_lo = x_lo.min(x);
        x_hi = x_hi.max(x);
        y_lo = y_lo.min(row.abc_max);
        y_hi = y_hi.max(row.abc_max);
    }
    // degenerate domains (single point, constant series) still need extent
    if x_hi - x_lo < 1.0 {
        x_lo -= 1.0;
        x_hi += 1.0;
    }
    if y_hi - y_lo < 1e-9 {
        y_lo -= 1.0;
        y_hi += 1.0;
    }
    let pad = (y_hi - y_lo) * 0.05;
    y_lo -= pad;
    y_hi += pad;

    let w = spec.width as f64;
    let h = spec.height as f64;
    let plot_w = w - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = h - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |v: f64| MARGIN_LEFT + (v - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |v: f64| MARGIN_TOP + (1.0 - (v - y_lo) / (y_hi - y_lo)) * plot_h;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        spec.width, spec.height, spec.width, spec.height
    );
    let _ = writeln!(out, "<rect width=\"{}\" height=\"{}\" fill=\"white\"/>", spec.width, spec.height);
    let _ = writeln!(
        out,
        "<text x=\"{:.2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{}</text>",
        w / 2.0,
        escape(&spec.title)
    );
    // axes
    let _ = writeln!(
        out,
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
        MARGIN_LEFT,
        MARGIN_TOP + plot_h,
        MARGIN_LEFT + plot_w,
        MARGIN_TOP + plot_h
    );
    let _ = writeln!(
        out,
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
        MARGIN_LEFT, MARGIN_TOP, MARGIN_LEFT, MARGIN_TOP + plot_h
    );
    // ticks and grid labels
    for i in 0..5 {
        let t = i as f64 / 4.0;
        let xv = x_lo + t * (x_hi - x_lo);
        let yv = y_lo + t * (y_hi - y_lo);
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
            sx(xv),
            MARGIN_TOP + plot_h,
            sx(xv),
            MARGIN_TOP + plot_h + 5.0
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{:.0}</text>",
            sx(xv),
            MARGIN_TOP + plot_h + 18.0,
            xv
        );
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
            MARGIN_LEFT - 5.0,
            sy(yv),
            MARGIN_LEFT,
            sy(yv)
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.1}</text>",
            MARGIN_LEFT - 8.0,
            sy(yv) + 4.0,
            yv
        );
    }
    // axis titles
    let _ = writeln!(
        out,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">parameter value</text>",
        MARGIN_LEFT + plot_w / 2.0,
        h - 14.0
    );
    let _ = writeln!(
        out,
        "<text x=\"16\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.2})\">maximum ABC index</text>",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    );
    // series polylines and legend
    for (i, ((n, label), list)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut points = String::new();
        for row in list {
            let _ = write!(points, "{:.2},{:.2} ", sx(row.param_value as f64), sy(row.abc_max));
        }
        let _ = writeln!(
            out,
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>",
            color,
            points.trim_end()
        );
        let ly = MARGIN_TOP + 8.0 + 18.0 * i as f64;
        let _ = writeln!(
            out,
            "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"10\" height=\"10\" fill=\"{}\"/>",
            MARGIN_LEFT + plot_w - 150.0,
            ly,
            color
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\">n={} {}</text>",
            MARGIN_LEFT + plot_w - 134.0,
            ly + 9.0,
            n,
            label
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

// ===== tests =====
