//! Minimal deterministic SVG charts: fixed 640x640 canvas, explicit data
//! ranges, polylines/polygons/dots and a stacked legend. No timestamps or
//! generator metadata, so equal inputs render byte-identical files.

use std::fmt::Write as _;

/// Shared palette so every figure assigns the same meaning to the same
/// color (also documented in the README).
pub mod palette {
    /// Chance line (the ROC diagonal).
    pub const DIAGONAL: &str = "#9aa0a6";
    /// Feasible-region interior.
    pub const REGION_FILL: &str = "#dbe8f8";
    /// Feasible-region border.
    pub const REGION_STROKE: &str = "#5b8ac5";
    /// Optimal curves (classical upper polyline, Helstrom sweep).
    pub const OPTIMAL: &str = "#1f6fb4";
    /// Boundary parts no measurement of the sweep reaches.
    pub const INACCESSIBLE: &str = "#d64541";
    /// Classical reference lines drawn next to quantum curves.
    pub const CLASSICAL_REF: &str = "#2ca02c";
    /// Fidelity-related overlays (touch points, fidelity polyline).
    pub const FIDELITY: &str = "#e3b505";
    /// Scatter colors cycled over measurement ranks.
    pub const RANKS: [&str; 5] = ["#d64541", "#2ca02c", "#7b4fa6", "#17a2b8", "#b06a00"];
}

const CANVAS: f64 = 640.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 46.0;
const MARGIN_BOTTOM: f64 = 54.0;

/// A single-panel chart with numeric axes.
pub struct Figure {
    title: String,
    x_label: String,
    y_label: String,
    x_range: (f64, f64),
    y_range: (f64, f64),
    x_ticks: Vec<(f64, String)>,
    y_ticks: Vec<(f64, String)>,
    body: String,
    legend: Vec<(String, bool, bool, String)>, // color, dashed, dot, label
}

impl Figure {
    /// Chart over the ROC unit square.
    pub fn unit_square(title: &str) -> Self {
        let ticks = |_: ()| {
            [0.0, 0.25, 0.5, 0.75, 1.0]
                .iter()
                .map(|&v| (v, format!("{v}")))
                .collect::<Vec<_>>()
        };
        Figure::with_ranges(
            title,
            "false-positive rate",
            "true-positive rate",
            (0.0, 1.0),
            (0.0, 1.0),
            ticks(()),
            ticks(()),
        )
    }

    /// Chart with arbitrary ranges and tick labels.
    pub fn with_ranges(
        title: &str,
        x_label: &str,
        y_label: &str,
        x_range: (f64, f64),
        y_range: (f64, f64),
        x_ticks: Vec<(f64, String)>,
        y_ticks: Vec<(f64, String)>,
    ) -> Self {
        assert!(x_range.1 > x_range.0 && y_range.1 > y_range.0);
        Figure {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            x_range,
            y_range,
            x_ticks,
            y_ticks,
            body: String::new(),
            legend: Vec::new(),
        }
    }

    fn x(&self, v: f64) -> f64 {
        let t = (v - self.x_range.0) / (self.x_range.1 - self.x_range.0);
        MARGIN_LEFT + t * (CANVAS - MARGIN_LEFT - MARGIN_RIGHT)
    }

    fn y(&self, v: f64) -> f64 {
        let t = (v - self.y_range.0) / (self.y_range.1 - self.y_range.0);
        CANVAS - MARGIN_BOTTOM - t * (CANVAS - MARGIN_TOP - MARGIN_BOTTOM)
    }

    fn path_data(&self, points: &[(f64, f64)]) -> String {
        let mut d = String::with_capacity(12 * points.len());
        for (i, &(px, py)) in points.iter().enumerate() {
            let _ = write!(
                d,
                "{}{:.4} {:.4}",
                if i == 0 { "M" } else { " L" },
                self.x(px),
                self.y(py)
            );
        }
        d
    }

    /// Open polyline through data-space points.
    pub fn polyline(&mut self, points: &[(f64, f64)], color: &str, width: f64, dashed: bool) {
        if points.len() < 2 {
            return;
        }
        let dash = if dashed { " stroke-dasharray=\"7 5\"" } else { "" };
        let _ = writeln!(
            self.body,
            "  <path d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\"{dash} \
             stroke-linejoin=\"round\"/>",
            self.path_data(points)
        );
    }

    /// Closed, filled polygon through data-space points.
    pub fn polygon(&mut self, points: &[(f64, f64)], fill: &str, stroke: &str) {
        if points.len() < 3 {
            return;
        }
        let _ = writeln!(
            self.body,
            "  <path d=\"{} Z\" fill=\"{fill}\" fill-opacity=\"0.55\" stroke=\"{stroke}\" \
             stroke-width=\"1.5\"/>",
            self.path_data(points)
        );
    }

    /// Scatter dots at data-space points.
    pub fn dots(&mut self, points: &[(f64, f64)], color: &str, radius: f64) {
        for &(px, py) in points {
            let _ = writeln!(
                self.body,
                "  <circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"{radius}\" fill=\"{color}\"/>",
                self.x(px),
                self.y(py)
            );
        }
    }

    /// Add a legend row rendered as a line sample.
    pub fn legend_line(&mut self, color: &str, dashed: bool, label: &str) {
        self.legend.push((color.into(), dashed, false, label.into()));
    }

    /// Add a legend row rendered as a dot sample.
    pub fn legend_dot(&mut self, color: &str, label: &str) {
        self.legend.push((color.into(), false, true, label.into()));
    }

    /// Render the complete standalone SVG document.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.body.len() + 4096);
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{CANVAS}\" height=\"{CANVAS}\" \
             viewBox=\"0 0 {CANVAS} {CANVAS}\" font-family=\"Helvetica, Arial, sans-serif\">"
        );
        let _ = writeln!(out, "  <rect width=\"{CANVAS}\" height=\"{CANVAS}\" fill=\"white\"/>");
        let _ = writeln!(
            out,
            "  <text x=\"{:.4}\" y=\"28\" text-anchor=\"middle\" font-size=\"17\" \
             fill=\"#202124\">{}</text>",
            (MARGIN_LEFT + CANVAS - MARGIN_RIGHT) / 2.0,
            xml_escape(&self.title)
        );

        // plot frame
        let (x0, x1) = (MARGIN_LEFT, CANVAS - MARGIN_RIGHT);
        let (y0, y1) = (CANVAS - MARGIN_BOTTOM, MARGIN_TOP);
        let _ = writeln!(
            out,
            "  <rect x=\"{x0}\" y=\"{y1}\" width=\"{:.4}\" height=\"{:.4}\" fill=\"none\" \
             stroke=\"#202124\" stroke-width=\"1\"/>",
            x1 - x0,
            y0 - y1
        );
        for (v, label) in &self.x_ticks {
            let px = self.x(*v);
            let _ = writeln!(
                out,
                "  <line x1=\"{px:.4}\" y1=\"{y0}\" x2=\"{px:.4}\" y2=\"{:.4}\" \
                 stroke=\"#202124\" stroke-width=\"1\"/>",
                y0 + 5.0
            );
            let _ = writeln!(
                out,
                "  <text x=\"{px:.4}\" y=\"{:.4}\" text-anchor=\"middle\" font-size=\"13\" \
                 fill=\"#202124\">{}</text>",
                y0 + 20.0,
                xml_escape(label)
            );
        }
        for (v, label) in &self.y_ticks {
            let py = self.y(*v);
            let _ = writeln!(
                out,
                "  <line x1=\"{:.4}\" y1=\"{py:.4}\" x2=\"{x0}\" y2=\"{py:.4}\" \
                 stroke=\"#202124\" stroke-width=\"1\"/>",
                x0 - 5.0
            );
            let _ = writeln!(
                out,
                "  <text x=\"{:.4}\" y=\"{:.4}\" text-anchor=\"end\" font-size=\"13\" \
                 fill=\"#202124\">{}</text>",
                x0 - 9.0,
                py + 4.5,
                xml_escape(label)
            );
        }
        let _ = writeln!(
            out,
            "  <text x=\"{:.4}\" y=\"{:.4}\" text-anchor=\"middle\" font-size=\"14\" \
             fill=\"#202124\">{}</text>",
            (x0 + x1) / 2.0,
            CANVAS - 14.0,
            xml_escape(&self.x_label)
        );
        let _ = writeln!(
            out,
            "  <text x=\"18\" y=\"{:.4}\" text-anchor=\"middle\" font-size=\"14\" \
             fill=\"#202124\" transform=\"rotate(-90 18 {:.4})\">{}</text>",
            (y0 + y1) / 2.0,
            (y0 + y1) / 2.0,
            xml_escape(&self.y_label)
        );

        out.push_str(&self.body);

        // legend, stacked in the plot's lower-right corner
        if !self.legend.is_empty() {
            let row_h = 20.0;
            let box_w = 218.0;
            let box_h = 12.0 + row_h * self.legend.len() as f64;
            let bx = x1 - box_w - 10.0;
            let by = y0 - box_h - 10.0;
            let _ = writeln!(
                out,
                "  <rect x=\"{bx:.4}\" y=\"{by:.4}\" width=\"{box_w}\" height=\"{box_h:.4}\" \
                 fill=\"white\" fill-opacity=\"0.92\" stroke=\"#9aa0a6\" stroke-width=\"1\"/>"
            );
            for (i, (color, dashed, dot, label)) in self.legend.iter().enumerate() {
                let cy = by + 16.0 + row_h * i as f64;
                if *dot {
                    let _ = writeln!(
                        out,
                        "  <circle cx=\"{:.4}\" cy=\"{cy:.4}\" r=\"4\" fill=\"{color}\"/>",
                        bx + 22.0
                    );
                } else {
                    let dash = if *dashed { " stroke-dasharray=\"7 5\"" } else { "" };
                    let _ = writeln!(
                        out,
                        "  <line x1=\"{:.4}\" y1=\"{cy:.4}\" x2=\"{:.4}\" y2=\"{cy:.4}\" \
                         stroke=\"{color}\" stroke-width=\"2.5\"{dash}/>",
                        bx + 10.0,
                        bx + 34.0
                    );
                }
                let _ = writeln!(
                    out,
                    "  <text x=\"{:.4}\" y=\"{:.4}\" font-size=\"13\" fill=\"#202124\">{}</text>",
                    bx + 42.0,
                    cy + 4.5,
                    xml_escape(label)
                );
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
