//! Immutable points and circles.
//!
//! Comparisons use `<=` on plain `f64` with no epsilon, so boundary cases
//! (a point exactly on the rim, circles exactly touching) count as inside
//! or intersecting.

use core::f64::consts::PI;

use crate::color::NamedColor;
use crate::error::range;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    x: f64,
    y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };
    pub const UNIT_X: Point = Point { x: 1.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::Numeric("point coordinates"))
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// `(a * x, b * y)`.
    pub fn scale(&self, a: f64, b: f64) -> Result<Point> {
        Point::new(a * self.x, b * self.y)
    }

    /// `(x + a, y + b)`.
    pub fn shift(&self, a: f64, b: f64) -> Result<Point> {
        Point::new(a + self.x, b + self.y)
    }

    /// Counter-clockwise rotation about the origin by `angle` degrees.
    pub fn rotate(&self, angle: f64) -> Result<Point> {
        let theta = angle * PI / 180.0;
        let (sin, cos) = (libm::sin(theta), libm::cos(theta));
        Point::new(self.x * cos - self.y * sin, self.x * sin + self.y * cos)
    }

    pub fn distance_to(&self, p: &Point) -> f64 {
        let dx = self.x - p.x;
        let dy = self.y - p.y;
        libm::sqrt(dx * dx + dy * dy)
    }
}

impl core::fmt::Display for Point {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle {
    radius: f64,
    center: Point,
    color: NamedColor,
}

impl Circle {
    pub fn new(radius: f64, center: Point, color: NamedColor) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(range("circle radius", alloc::format!("{radius} is not a positive finite number")));
        }
        Ok(Self { radius, center, color })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn color(&self) -> NamedColor {
        self.color
    }

    /// Boundary inclusive.
    pub fn contains_point(&self, p: &Point) -> bool {
        p.distance_to(&self.center) <= self.radius
    }

    /// True when `c` lies entirely inside `self`, touching allowed.
    pub fn contains_circle(&self, c: &Circle) -> bool {
        self.center.distance_to(&c.center) + c.radius <= self.radius
    }

    pub fn intersects(&self, c: &Circle) -> bool {
        self.center.distance_to(&c.center) <= self.radius + c.radius
    }

    pub fn disjoint(&self, c: &Circle) -> bool {
        !self.intersects(c)
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    pub fn periphery(&self) -> f64 {
        PI * 2.0 * self.radius
    }

    /// `(area, periphery)`.
    pub fn measures(&self) -> (f64, f64) {
        (self.area(), self.periphery())
    }

    /// The same circle centred at `p`.
    pub fn moved_to(&self, p: Point) -> Circle {
        Circle { center: p, ..*self }
    }
}
