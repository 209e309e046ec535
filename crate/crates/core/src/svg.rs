//! Static SVG rendering of a barcode: one panel per degree, bars drawn
//! horizontally over a shared parameter axis.

use std::fmt::Write as _;

use crate::persistence::Barcode;

const WIDTH: f64 = 800.0;
const MARGIN_LEFT: f64 = 50.0;
const MARGIN_RIGHT: f64 = 30.0;
const BAR_PITCH: f64 = 4.0;
const PANEL_GAP: f64 = 30.0;
const AXIS_HEIGHT: f64 = 30.0;
const TICKS: usize = 5;

/// Infinite bars run to the right edge and end in an arrowhead. The axis
/// spans `[0, 1.05 * largest finite value]`.
pub fn render_barcode(barcode: &Barcode) -> String {
    let largest = barcode.critical_values().last().copied().unwrap_or(0.0);
    let axis_max = if largest > 0.0 { largest * 1.05 } else { 1.0 };
    let plot_width = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let x = |r: f64| MARGIN_LEFT + plot_width * (r.min(axis_max) / axis_max);

    let panels: Vec<f64> = (0..barcode.degree_count())
        .map(|d| (barcode.degree(d).len().max(1) as f64) * BAR_PITCH + PANEL_GAP)
        .collect();
    let height = panels.iter().sum::<f64>() + AXIS_HEIGHT + 10.0;

    let mut s = String::new();
    let w = &mut s;
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(
        w,
        r#"<defs><marker id="arrow" markerWidth="6" markerHeight="6" refX="5" refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="black"/></marker></defs>"#
    )
    .unwrap();
    let mut top = 10.0;
    for (d, &panel) in panels.iter().enumerate() {
        writeln!(w, r#"<text x="5" y="{:.1}">H{d}</text>"#, top + 12.0).unwrap();
        for (i, bar) in barcode.degree(d).iter().enumerate() {
            let y = top + 20.0 + i as f64 * BAR_PITCH;
            let marker = if bar.is_infinite() {
                r#" marker-end="url(#arrow)""#
            } else {
                ""
            };
            writeln!(
                w,
                r#"<line x1="{:.2}" y1="{y:.1}" x2="{:.2}" y2="{y:.1}" stroke="black" stroke-width="2"{marker}/>"#,
                x(bar.birth),
                x(bar.death)
            )
            .unwrap();
        }
        top += panel;
        writeln!(
            w,
            r##"<line x1="{MARGIN_LEFT}" y1="{top:.1}" x2="{:.1}" y2="{top:.1}" stroke="#bbb"/>"##,
            WIDTH - MARGIN_RIGHT
        )
        .unwrap();
    }
    let axis_y = top + 5.0;
    writeln!(
        w,
        r#"<line x1="{MARGIN_LEFT}" y1="{axis_y:.1}" x2="{:.1}" y2="{axis_y:.1}" stroke="black"/>"#,
        WIDTH - MARGIN_RIGHT
    )
    .unwrap();
    for t in 0..=TICKS {
        let r = axis_max * t as f64 / TICKS as f64;
        writeln!(
            w,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{r:.3}</text>"#,
            x(r),
            axis_y + 18.0
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
