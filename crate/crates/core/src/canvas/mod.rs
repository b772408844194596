//! A raster drawing surface in the style of a teaching graphics library.
//!
//! User coordinates map affinely onto pixel centres: `(x_min, y_min)` is the
//! centre of the bottom-left pixel and `(x_max, y_max)` the centre of the
//! top-right one. Strokes are drawn with a round pen whose radius is a
//! fraction of the smaller canvas dimension.
//!
//! Segments are rasterized by walking the segment in parameter steps of at
//! most one pixel (`steps = ceil(max(|dx|, |dy|))`, positions `i / steps`
//! for `i = 0..=steps`) and stamping a pen disc at each position. A stamp
//! paints every pixel whose centre lies within the stroke radius, and always
//! the pixel nearest the stamp centre.
//!
//! Every `draw_line` / `draw_point` call adds one to the primitive count;
//! circle outlines and fills are built from those and count accordingly.

mod export;
mod moving;

pub use moving::{moving_circle_frames, Frame, MovingCircle, Sampler, MAX_PLACEMENT_ATTEMPTS};

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::color::{NamedColor, Rgb};
use crate::error::range;
use crate::geometry::{Circle, Point};
use crate::Result;

pub const DEFAULT_PEN_RADIUS: f64 = 0.002;
/// Chords used by [`Canvas::draw_circle_outline`].
pub const DEFAULT_OUTLINE_CHORDS: usize = 360;
/// Diameters drawn by [`Canvas::fill_circle_radial`].
pub const RADIAL_LINES: u64 = 180;

/// A closed user-coordinate interval `[min, max]` with `min < max`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Range {
    pub min: f64,
    pub max: f64,
}

impl Range {
    pub fn new(min: f64, max: f64) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && max > min) {
            return Err(range("canvas scale", alloc::format!("[{min}, {max}] is degenerate")));
        }
        Ok(Self { min, max })
    }

    fn span(&self) -> f64 {
        self.max - self.min
    }
}

/// One recorded drawing call, in pixel coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Primitive {
    Line { from: (f64, f64), to: (f64, f64), color: NamedColor, stroke_radius: f64 },
    Point { at: (f64, f64), color: NamedColor, stroke_radius: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Canvas {
    width: usize,
    height: usize,
    x_scale: Range,
    y_scale: Range,
    pen_radius: f64,
    pen_color: NamedColor,
    outline_chords: usize,
    pixels: Vec<Rgb>,
    primitive_count: u64,
    log: Option<Vec<Primitive>>,
}

impl Canvas {
    /// A white canvas with a black pen of radius [`DEFAULT_PEN_RADIUS`].
    pub fn new(width: usize, height: usize, x_scale: Range, y_scale: Range) -> Result<Self> {
        if width < 1 || height < 1 {
            return Err(range("canvas size", alloc::format!("{width}x{height}")));
        }
        Ok(Self {
            width,
            height,
            x_scale,
            y_scale,
            pen_radius: DEFAULT_PEN_RADIUS,
            pen_color: NamedColor::Black,
            outline_chords: DEFAULT_OUTLINE_CHORDS,
            pixels: alloc::vec![NamedColor::White.rgb(); width * height],
            primitive_count: 0,
            log: Some(Vec::new()),
        })
    }

    /// `width` x `height` pixels over user coordinates `0..100` on both axes.
    pub fn with_default_scale(width: usize, height: usize) -> Result<Self> {
        let unit = Range::new(0.0, 100.0)?;
        Self::new(width, height, unit, unit)
    }

    /// Stops (or resumes) keeping the primitive log used for SVG export.
    /// Dropping it saves memory for very large drawings.
    pub fn set_recording(&mut self, on: bool) {
        match (on, self.log.is_some()) {
            (true, false) => self.log = Some(Vec::new()),
            (false, true) => self.log = None,
            _ => {}
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn x_scale(&self) -> Range {
        self.x_scale
    }

    pub fn y_scale(&self) -> Range {
        self.y_scale
    }

    pub fn set_x_scale(&mut self, r: Range) {
        self.x_scale = r;
    }

    pub fn set_y_scale(&mut self, r: Range) {
        self.y_scale = r;
    }

    pub fn pen_radius(&self) -> f64 {
        self.pen_radius
    }

    pub fn set_pen_radius(&mut self, radius: f64) -> Result<()> {
        if !(radius.is_finite() && radius >= 0.0) {
            return Err(range("pen radius", alloc::format!("{radius}")));
        }
        self.pen_radius = radius;
        Ok(())
    }

    pub fn pen_color(&self) -> NamedColor {
        self.pen_color
    }

    pub fn set_pen_color(&mut self, color: NamedColor) {
        self.pen_color = color;
    }

    pub fn outline_chords(&self) -> usize {
        self.outline_chords
    }

    pub fn set_outline_chords(&mut self, n: usize) -> Result<()> {
        if n < 3 {
            return Err(range("outline chords", alloc::format!("{n} < 3")));
        }
        self.outline_chords = n;
        Ok(())
    }

    pub fn primitive_count(&self) -> u64 {
        self.primitive_count
    }

    pub fn reset_primitive_count(&mut self) {
        self.primitive_count = 0;
    }

    pub fn primitives(&self) -> &[Primitive] {
        self.log.as_deref().unwrap_or(&[])
    }

    /// Pixel at column `col`, row `row` (row 0 is the top).
    pub fn pixel(&self, col: usize, row: usize) -> Rgb {
        self.pixels[row * self.width + col]
    }

    pub fn pixels(&self) -> &[Rgb] {
        &self.pixels
    }

    /// Pen stroke radius in pixels.
    pub fn stroke_radius(&self) -> f64 {
        self.pen_radius * self.width.min(self.height) as f64
    }

    /// Continuous pixel coordinates (column, row from top) of a user point.
    pub fn to_pixel(&self, x: f64, y: f64) -> (f64, f64) {
        let col = (x - self.x_scale.min) / self.x_scale.span() * (self.width - 1) as f64;
        let row = (self.y_scale.max - y) / self.y_scale.span() * (self.height - 1) as f64;
        (col, row)
    }

    /// Inverse of [`to_pixel`](Self::to_pixel). Degenerate (one-pixel)
    /// axes map everything to the range minimum.
    pub fn from_pixel(&self, col: f64, row: f64) -> (f64, f64) {
        let fx = if self.width > 1 { col / (self.width - 1) as f64 } else { 0.0 };
        let fy = if self.height > 1 { row / (self.height - 1) as f64 } else { 1.0 };
        (self.x_scale.min + fx * self.x_scale.span(), self.y_scale.max - fy * self.y_scale.span())
    }

    /// Paints every pixel with `color` and forgets recorded primitives.
    /// The primitive count is left alone.
    pub fn clear(&mut self, color: NamedColor) {
        self.pixels.fill(color.rgb());
        if let Some(log) = self.log.as_mut() {
            log.clear();
        }
    }

    pub fn draw_point(&mut self, p: Point) {
        self.primitive_count += 1;
        let at = self.to_pixel(p.x(), p.y());
        let stroke_radius = self.stroke_radius();
        let color = self.pen_color;
        if let Some(log) = self.log.as_mut() {
            log.push(Primitive::Point { at, color, stroke_radius });
        }
        self.stamp(at.0, at.1, stroke_radius, color.rgb());
    }

    /// Raw-coordinate variant of [`draw_point`](Self::draw_point).
    pub fn point(&mut self, x: f64, y: f64) -> Result<()> {
        self.draw_point(Point::new(x, y)?);
        Ok(())
    }

    pub fn draw_line(&mut self, p: Point, q: Point) {
        self.primitive_count += 1;
        let from = self.to_pixel(p.x(), p.y());
        let to = self.to_pixel(q.x(), q.y());
        let stroke_radius = self.stroke_radius();
        let color = self.pen_color;
        if let Some(log) = self.log.as_mut() {
            log.push(Primitive::Line { from, to, color, stroke_radius });
        }
        self.walk(from, to, stroke_radius, color.rgb());
    }

    /// Raw-coordinate variant of [`draw_line`](Self::draw_line).
    pub fn line(&mut self, x0: f64, y0: f64, x1: f64, y1: f64) -> Result<()> {
        self.draw_line(Point::new(x0, y0)?, Point::new(x1, y1)?);
        Ok(())
    }

    /// Strokes the periphery of `c` in its own color as a closed polyline
    /// of [`outline_chords`](Self::outline_chords) chords. A circle smaller
    /// than one pixel becomes a single point. Returns the primitives drawn.
    pub fn draw_circle_outline(&mut self, c: &Circle) -> u64 {
        self.pen_color = c.color();
        let (rx, ry) = self.pixel_radii(c.radius());
        if rx.max(ry) < 1.0 {
            self.draw_point(c.center());
            return 1;
        }
        self.stroke_polygon(c.center(), c.radius(), self.outline_chords)
    }

    /// Fills `c` by drawing the diameters at 0, 1, ..., 179 degrees.
    /// Always draws exactly [`RADIAL_LINES`] lines.
    pub fn fill_circle_radial(&mut self, c: &Circle) -> u64 {
        self.pen_color = c.color();
        let center = c.center();
        let r = c.radius();
        for a in 0..RADIAL_LINES {
            let theta = a as f64 * PI / 180.0;
            let (dx, dy) = (r * libm::cos(theta), r * libm::sin(theta));
            let p = Point::new(center.x() + dx, center.y() + dy);
            let q = Point::new(center.x() - dx, center.y() - dy);
            if let (Ok(p), Ok(q)) = (p, q) {
                self.draw_line(p, q);
            } else {
                self.primitive_count += 1;
            }
        }
        RADIAL_LINES
    }

    /// Fills `c` with `rings` nested outlines at radii `R*k/rings`, each a
    /// closed polyline of `chords` chords. Draws `rings * chords` lines.
    pub fn fill_circle_concentric(&mut self, c: &Circle, rings: usize, chords: usize) -> Result<u64> {
        if rings < 1 {
            return Err(range("rings", alloc::format!("{rings} < 1")));
        }
        if chords < 3 {
            return Err(range("chords per ring", alloc::format!("{chords} < 3")));
        }
        self.pen_color = c.color();
        let mut drawn = 0;
        for k in 1..=rings {
            let radius = c.radius() * k as f64 / rings as f64;
            drawn += self.stroke_polygon(c.center(), radius, chords);
        }
        Ok(drawn)
    }

    fn pixel_radii(&self, r: f64) -> (f64, f64) {
        (
            r / self.x_scale.span() * (self.width - 1) as f64,
            r / self.y_scale.span() * (self.height - 1) as f64,
        )
    }

    fn stroke_polygon(&mut self, center: Point, radius: f64, n: usize) -> u64 {
        let vertex = |k: usize| {
            let theta = 2.0 * PI * (k % n) as f64 / n as f64;
            Point::new(
                center.x() + radius * libm::cos(theta),
                center.y() + radius * libm::sin(theta),
            )
            .ok()
        };
        let mut prev = vertex(0);
        for k in 1..=n {
            let next = vertex(k);
            match (prev, next) {
                (Some(a), Some(b)) => self.draw_line(a, b),
                _ => self.primitive_count += 1,
            }
            prev = next;
        }
        n as u64
    }

    /// Unit-step parametric walk from `a` to `b` with a pen stamp at each
    /// step. Only the steps whose stamps can touch the canvas are visited,
    /// so the painted pixels equal those of the full walk.
    fn walk(&mut self, a: (f64, f64), b: (f64, f64), radius: f64, rgb: Rgb) {
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let steps = libm::ceil(libm::fmax(libm::fabs(dx), libm::fabs(dy)));
        if !(steps.is_finite()) {
            return;
        }
        if steps == 0.0 {
            self.stamp(a.0, a.1, radius, rgb);
            return;
        }
        let margin = radius + 1.0;
        let Some((t0, t1)) = clip_segment(
            a,
            (dx, dy),
            (-margin, -margin),
            (self.width as f64 - 1.0 + margin, self.height as f64 - 1.0 + margin),
        ) else {
            return;
        };
        let first = libm::floor(t0 * steps).max(0.0) as u64;
        let last = (libm::ceil(t1 * steps) as u64).min(steps as u64);
        let n = steps as u64;
        for i in first..=last {
            let t = i as f64 / steps;
            let (x, y) = if i == n { b } else { (a.0 + dx * t, a.1 + dy * t) };
            self.stamp(x, y, radius, rgb);
        }
    }

    fn stamp(&mut self, cx: f64, cy: f64, radius: f64, rgb: Rgb) {
        let (w, h) = (self.width as f64, self.height as f64);
        if cx < -radius - 1.0 || cy < -radius - 1.0 || cx > w + radius || cy > h + radius {
            return;
        }
        let nx = libm::round(cx);
        let ny = libm::round(cy);
        if nx >= 0.0 && ny >= 0.0 && nx < w && ny < h {
            self.pixels[ny as usize * self.width + nx as usize] = rgb;
        }
        let r2 = radius * radius;
        let row0 = libm::ceil(cy - radius).max(0.0) as usize;
        let row1 = libm::floor(cy + radius).min(h - 1.0);
        let col0 = libm::ceil(cx - radius).max(0.0) as usize;
        let col1 = libm::floor(cx + radius).min(w - 1.0);
        if row1 < 0.0 || col1 < 0.0 {
            return;
        }
        for row in row0..=row1 as usize {
            let ddy = row as f64 - cy;
            for col in col0..=col1 as usize {
                let ddx = col as f64 - cx;
                if ddx * ddx + ddy * ddy <= r2 {
                    self.pixels[row * self.width + col] = rgb;
                }
            }
        }
    }
}

/// Liang-Barsky: parameter interval of `origin + t * dir`, `t` in `[0, 1]`,
/// inside the box `[lo, hi]`.
fn clip_segment(origin: (f64, f64), dir: (f64, f64), lo: (f64, f64), hi: (f64, f64)) -> Option<(f64, f64)> {
    let mut t0: f64 = 0.0;
    let mut t1: f64 = 1.0;
    for (p, q) in [
        (-dir.0, origin.0 - lo.0),
        (dir.0, hi.0 - origin.0),
        (-dir.1, origin.1 - lo.1),
        (dir.1, hi.1 - origin.1),
    ] {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
        } else {
            let t = q / p;
            if p < 0.0 {
                t0 = t0.max(t);
            } else {
                t1 = t1.min(t);
            }
        }
    }
    (t0 <= t1).then_some((t0, t1))
}

#[cfg(test)]
mod tests;
