//! Static SVG line plot. The polyline's `points` are the literal lattice
//! points `n,N` in data coordinates; a group transform maps them to pixels.

use std::fmt::Write as _;

use crate::commands::tick_step;

pub struct Plot<'a> {
    pub k: u64,
    pub points: &'a [(i64, u64)],
    /// Pixels per unit on both axes.
    pub scale: f64,
}

const MARGIN: f64 = 40.0;

pub fn render(plot: &Plot) -> String {
    let (x0, x1) = match (plot.points.first(), plot.points.last()) {
        (Some(a), Some(b)) => (a.0, b.0),
        _ => (0, 0),
    };
    let y_max = plot.points.iter().map(|p| p.1).max().unwrap_or(0).max(1);
    let s = plot.scale;
    let width = (x1 - x0) as f64 * s + 2.0 * MARGIN;
    let height = y_max as f64 * s + 2.0 * MARGIN;
    let base_y = height - MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "  <title>N(n,{}) for n = {x0}..{x1}</title>", plot.k);
    let _ = writeln!(
        out,
        r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##
    );

    // axes and ticks in pixel space
    let _ = writeln!(
        out,
        r#"  <g stroke="black" stroke-width="1" font-family="sans-serif" font-size="10">"#
    );
    let _ = writeln!(
        out,
        r#"    <line x1="{MARGIN}" y1="{base_y}" x2="{}" y2="{base_y}"/>"#,
        width - MARGIN
    );
    let _ = writeln!(
        out,
        r#"    <line x1="{MARGIN}" y1="{base_y}" x2="{MARGIN}" y2="{MARGIN}"/>"#
    );
    let step = tick_step((x1 - x0).unsigned_abs()) as i64;
    let mut t = x0.div_euclid(step) * step;
    while t <= x1 {
        if t >= x0 {
            let px = MARGIN + (t - x0) as f64 * s;
            let _ = writeln!(
                out,
                r#"    <line x1="{px}" y1="{base_y}" x2="{px}" y2="{}"/>"#,
                base_y + 4.0
            );
            let _ = writeln!(
                out,
                r#"    <text x="{px}" y="{}" stroke="none" text-anchor="middle">{t}</text>"#,
                base_y + 16.0
            );
        }
        t += step;
    }
    let ystep = tick_step(y_max);
    for v in (0..=y_max).step_by(ystep as usize) {
        let py = base_y - v as f64 * s;
        let _ = writeln!(
            out,
            r#"    <line x1="{}" y1="{py}" x2="{MARGIN}" y2="{py}"/>"#,
            MARGIN - 4.0
        );
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}" stroke="none" text-anchor="end">{v}</text>"#,
            MARGIN - 6.0,
            py + 3.0
        );
    }
    let _ = writeln!(out, "  </g>");

    let pts: Vec<String> = plot
        .points
        .iter()
        .map(|(n, v)| format!("{n},{v}"))
        .collect();
    let _ = writeln!(
        out,
        r#"  <g transform="translate({} {base_y}) scale({s} {})">"#,
        MARGIN - x0 as f64 * s,
        -s
    );
    let _ = writeln!(
        out,
        r##"    <polyline fill="none" stroke="#1f4e9a" stroke-width="1.5" vector-effect="non-scaling-stroke" points="{}"/>"##,
        pts.join(" ")
    );
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_data_coordinates() {
        let pts = [(0, 0), (1, 1), (2, 0)];
        let svg = render(&Plot {
            k: 1,
            points: &pts,
            scale: 10.0,
        });
        assert!(svg.contains(r#"points="0,0 1,1 2,0""#));
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
