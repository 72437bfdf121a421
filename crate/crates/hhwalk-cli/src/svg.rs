//! Minimal SVG bar charts. The CSV next to each chart is the authoritative
//! artifact; the SVG is a convenience rendering, written by hand to keep
//! plotting out of the dependency tree.

use std::io::Write;

/// A named series of bar heights, one value per category.
pub struct Series<'a> {
    pub name: &'a str,
    pub color: &'a str,
    pub values: &'a [f64],
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;

/// Writes a grouped bar chart: one group per category label, one bar per
/// series inside each group.
pub fn write_bar_chart<W: Write>(
    title: &str,
    x_label: &str,
    y_label: &str,
    categories: &[String],
    series: &[Series<'_>],
    mut w: W,
) -> std::io::Result<()> {
    assert!(!categories.is_empty() && !series.is_empty());
    for s in series {
        assert_eq!(s.values.len(), categories.len(), "series length mismatch");
    }
    let max_value = series
        .iter()
        .flat_map(|s| s.values.iter().copied())
        .fold(0.0_f64, f64::max)
        .max(1e-300);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let group_w = plot_w / categories.len() as f64;
    let bar_w = group_w * 0.8 / series.len() as f64;

    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )?;
    writeln!(w, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
    writeln!(
        w,
        r#"<text x="{}" y="24" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    )?;

    // Axes.
    let x0 = MARGIN_LEFT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    writeln!(
        w,
        r#"<line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}" stroke="black"/>"#,
        WIDTH - MARGIN_RIGHT
    )?;
    writeln!(
        w,
        r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{MARGIN_TOP}" stroke="black"/>"#
    )?;

    // Y ticks at 0, max/2, max.
    for frac in [0.0, 0.5, 1.0] {
        let value = max_value * frac;
        let y = y0 - plot_h * frac;
        writeln!(
            w,
            r#"<line x1="{}" y1="{y}" x2="{x0}" y2="{y}" stroke="black"/>"#,
            x0 - 5.0
        )?;
        writeln!(
            w,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11" text-anchor="end">{value:.2e}</text>"#,
            x0 - 8.0,
            y + 4.0
        )?;
    }

    // Bars and category labels.
    for (ci, category) in categories.iter().enumerate() {
        let group_x = x0 + ci as f64 * group_w + group_w * 0.1;
        for (si, s) in series.iter().enumerate() {
            let h = plot_h * s.values[ci] / max_value;
            let x = group_x + si as f64 * bar_w;
            let y = y0 - h;
            writeln!(
                w,
                r#"<rect x="{x:.2}" y="{y:.2}" width="{bar_w:.2}" height="{h:.2}" fill="{}"/>"#,
                s.color
            )?;
        }
        writeln!(
            w,
            r#"<text x="{:.2}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
            group_x + group_w * 0.4,
            y0 + 18.0,
            escape(category)
        )?;
    }

    writeln!(
        w,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 16.0,
        escape(x_label)
    )?;
    writeln!(
        w,
        r#"<text x="18" y="{}" font-family="sans-serif" font-size="13" text-anchor="middle" transform="rotate(-90 18 {})">{}</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        escape(y_label)
    )?;

    // Legend.
    for (si, s) in series.iter().enumerate() {
        let x = WIDTH - MARGIN_RIGHT - 150.0;
        let y = MARGIN_TOP + 8.0 + si as f64 * 18.0;
        writeln!(
            w,
            r#"<rect x="{x}" y="{y}" width="12" height="12" fill="{}"/>"#,
            s.color
        )?;
        writeln!(
            w,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">{}</text>"#,
            x + 18.0,
            y + 10.0,
            escape(s.name)
        )?;
    }

    writeln!(w, "</svg>")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
