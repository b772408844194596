//! The dragon curve built from four scaled, rotated and shifted copies of
//! a segment.
//!
//! Each level replaces the segment `(p1, p2)` by the four segments
//! `(T(p1), T(p2))` for
//!
//! | # | transform (applied left to right)              |
//! |---|------------------------------------------------|
//! | 1 | scale(0.5, 0.5), rotate(90)                    |
//! | 2 | scale(0.5, 0.5), rotate(180), shift(0.5, 0.5)  |
//! | 3 | scale(0.5, 0.5), rotate(-90), shift(0.5, 0.5)  |
//! | 4 | scale(0.5, 0.5), rotate(180), shift(1.0, 0.0)  |
//!
//! in that order, so depth `n` has `4^n` segments, each half as long as
//! its parent.

use alloc::vec::Vec;

use crate::canvas::{Canvas, Range};
use crate::color::NamedColor;
use crate::geometry::Point;
use crate::{Error, Result};

/// Deepest curve [`dragon_segments`] will materialize.
pub const MAX_DEPTH: u32 = 15;
/// Deepest curve whose segment and point counts fit in a `u64`.
pub const MAX_STREAM_DEPTH: u32 = 30;

/// Intermediate points created per expanded segment: two endpoints, each
/// through 2 + 3 + 3 + 3 chained operations.
pub const POINTS_PER_EXPANSION: u64 = 2 * (2 + 3 + 3 + 3);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DragonSpec {
    pub start: Point,
    pub finish: Point,
    pub depth: u32,
    pub color: NamedColor,
}

impl DragonSpec {
    /// The unit segment from `(0, 0)` to `(1, 0)`.
    pub fn unit(depth: u32, color: NamedColor) -> Self {
        Self { start: Point::ORIGIN, finish: Point::UNIT_X, depth, color }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn length(&self) -> f64 {
        self.a.distance_to(&self.b)
    }
}

pub type Transform = fn(&Point) -> Result<Point>;

pub const TRANSFORMS: [Transform; 4] = [
    |p| p.scale(0.5, 0.5)?.rotate(90.0),
    |p| p.scale(0.5, 0.5)?.rotate(180.0)?.shift(0.5, 0.5),
    |p| p.scale(0.5, 0.5)?.rotate(-90.0)?.shift(0.5, 0.5),
    |p| p.scale(0.5, 0.5)?.rotate(180.0)?.shift(1.0, 0.0),
];

/// `4^depth`, or a capacity error past [`MAX_STREAM_DEPTH`].
pub fn segment_count(depth: u32) -> Result<u64> {
    if depth > MAX_STREAM_DEPTH {
        return Err(Error::Capacity { depth, max: MAX_STREAM_DEPTH });
    }
    Ok(1u64 << (2 * depth))
}

/// Number of intermediate points the chained transforms create while
/// expanding a depth-`depth` curve: `22 * (4^depth - 1) / 3`.
pub fn dragon_point_count(depth: u32) -> Result<u64> {
    let expanded = (segment_count(depth)? - 1) / 3;
    expanded
        .checked_mul(POINTS_PER_EXPANSION)
        .ok_or(Error::Capacity { depth, max: MAX_STREAM_DEPTH })
}

/// Calls `f` for every segment in drawing order without materializing them.
pub fn for_each_segment<F: FnMut(Segment)>(spec: &DragonSpec, mut f: F) -> Result<()> {
    segment_count(spec.depth)?;
    expand(spec.depth, spec.start, spec.finish, &mut f)
}

fn expand<F: FnMut(Segment)>(n: u32, p1: Point, p2: Point, f: &mut F) -> Result<()> {
    if n == 0 {
        f(Segment { a: p1, b: p2 });
        return Ok(());
    }
    for t in TRANSFORMS {
        expand(n - 1, t(&p1)?, t(&p2)?, f)?;
    }
    Ok(())
}

/// All `4^depth` segments in drawing order.
pub fn dragon_segments(spec: &DragonSpec) -> Result<Vec<Segment>> {
    if spec.depth > MAX_DEPTH {
        return Err(Error::Capacity { depth: spec.depth, max: MAX_DEPTH });
    }
    let mut out = Vec::with_capacity(segment_count(spec.depth)? as usize);
    for_each_segment(spec, |s| out.push(s))?;
    Ok(out)
}

/// Draws every segment in `spec.color`; returns the number of lines drawn.
pub fn draw_dragon(cv: &mut Canvas, spec: &DragonSpec) -> Result<u64> {
    if spec.depth > MAX_DEPTH {
        return Err(Error::Capacity { depth: spec.depth, max: MAX_DEPTH });
    }
    cv.set_pen_color(spec.color);
    let mut drawn = 0;
    for_each_segment(spec, |s| {
        cv.draw_line(s.a, s.b);
        drawn += 1;
    })?;
    Ok(drawn)
}

/// User window that holds the unit-segment curve at any depth.
pub fn default_window() -> (Range, Range) {
    (Range { min: -0.5, max: 1.5 }, Range { min: -0.5, max: 1.0 })
}

/// Axis-aligned bounds `(min_x, min_y, max_x, max_y)` of all endpoints.
pub fn bounding_box(segments: &[Segment]) -> Option<(f64, f64, f64, f64)> {
    let mut pts = segments.iter().flat_map(|s| [s.a, s.b]);
    let first = pts.next()?;
    Some(pts.fold((first.x(), first.y(), first.x(), first.y()), |(x0, y0, x1, y1), p| {
        (x0.min(p.x()), y0.min(p.y()), x1.max(p.x()), y1.max(p.y()))
    }))
}
