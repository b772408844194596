//! Line charts of a [`SampleTable`] drawn onto a [`Canvas`].

use alloc::string::String;

use crate::canvas::{Canvas, Range};
use crate::color::NamedColor;
use crate::error::range;
use crate::geometry::Point;
use crate::pic;
use crate::table::SampleTable;
use crate::Result;

/// Series colors, assigned to methods in order of first appearance.
pub const PALETTE: [NamedColor; 8] = [
    NamedColor::Blue,
    NamedColor::Red,
    NamedColor::Green,
    NamedColor::Orange,
    NamedColor::Magenta,
    NamedColor::Cyan,
    NamedColor::Gray,
    NamedColor::Yellow,
];

const TICKS: usize = 5;
const AXIS_PEN: f64 = 0.002;
const SERIES_PEN: f64 = 0.004;

/// Plots every method of `table` as a polyline.
///
/// The data window is `[min x, max x]` by `[min(0, min value), 1.05 * max
/// value]`, with margins for the axes (left and bottom, five ticks each)
/// and for a legend across the top that spells each method name in banner
/// glyphs stamped as points.
pub fn plot_series(table: &SampleTable, pixel_w: usize, pixel_h: usize) -> Result<Canvas> {
    if table.is_empty() {
        return Err(range("sample table", "nothing to plot"));
    }
    let rows = table.rows();
    let mut x_lo = rows.iter().map(|r| r.x).fold(f64::INFINITY, f64::min);
    let mut x_hi = rows.iter().map(|r| r.x).fold(f64::NEG_INFINITY, f64::max);
    if x_hi <= x_lo {
        x_lo -= 0.5;
        x_hi += 0.5;
    }
    let y_lo = rows.iter().map(|r| r.value).fold(0.0, f64::min);
    let mut y_hi = 1.05 * rows.iter().map(|r| r.value).fold(f64::NEG_INFINITY, f64::max);
    if y_hi <= y_lo {
        y_hi = y_lo + 1.0;
    }
    let (sx, sy) = (x_hi - x_lo, y_hi - y_lo);
    let methods = table.methods();
    let legend_share = 0.06 * methods.len().min(6) as f64 + 0.04;
    let mut cv = Canvas::new(
        pixel_w,
        pixel_h,
        Range::new(x_lo - 0.12 * sx, x_hi + 0.05 * sx)?,
        Range::new(y_lo - 0.12 * sy, y_hi + legend_share * sy)?,
    )?;

    cv.set_pen_color(NamedColor::Black);
    cv.set_pen_radius(AXIS_PEN)?;
    cv.line(x_lo, y_lo, x_hi, y_lo)?;
    cv.line(x_lo, y_lo, x_lo, y_hi)?;
    for i in 0..=TICKS {
        let f = i as f64 / TICKS as f64;
        let (tx, ty) = (x_lo + f * sx, y_lo + f * sy);
        cv.line(tx, y_lo, tx, y_lo - 0.025 * sy)?;
        cv.line(x_lo, ty, x_lo - 0.025 * sx, ty)?;
    }

    cv.set_pen_radius(SERIES_PEN)?;
    for (i, method) in methods.iter().enumerate() {
        cv.set_pen_color(PALETTE[i % PALETTE.len()]);
        let series = table.series(method);
        if let [(x, y)] = series[..] {
            cv.point(x, y)?;
        }
        for w in series.windows(2) {
            cv.line(w[0].0, w[0].1, w[1].0, w[1].1)?;
        }
    }

    draw_legend(&mut cv, &methods)?;
    Ok(cv)
}

fn legend_label(method: &str) -> String {
    method
        .chars()
        .take(24)
        .map(|c| {
            let c = c.to_ascii_uppercase();
            if c.is_ascii_uppercase() || c.is_ascii_digit() { c } else { ' ' }
        })
        .collect()
}

fn draw_legend(cv: &mut Canvas, methods: &[&str]) -> Result<()> {
    let cell = if cv.width().min(cv.height()) >= 300 { 2 } else { 1 };
    cv.set_pen_radius(0.0)?;
    let left = 0.14 * cv.width() as f64;
    for (i, method) in methods.iter().enumerate() {
        cv.set_pen_color(PALETTE[i % PALETTE.len()]);
        let glyphs = pic::scale(&pic::banner(&legend_label(method))?, cell, cell)?;
        let top = 4.0 + i as f64 * (glyphs.height() + 4) as f64;
        // swatch
        let (sx0, sy) = cv.from_pixel(left, top + glyphs.height() as f64 / 2.0);
        let (sx1, _) = cv.from_pixel(left + 12.0, 0.0);
        if let (Ok(a), Ok(b)) = (Point::new(sx0, sy), Point::new(sx1, sy)) {
            cv.draw_line(a, b);
        }
        for (r, row) in glyphs.rows().enumerate() {
            for (c, &ch) in row.iter().enumerate() {
                if ch == ' ' {
                    continue;
                }
                let (x, y) = cv.from_pixel(left + 18.0 + c as f64, top + r as f64);
                if let Ok(p) = Point::new(x, y) {
                    cv.draw_point(p);
                }
            }
        }
    }
    Ok(())
}
