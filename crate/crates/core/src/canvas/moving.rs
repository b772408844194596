//! Frames of a small circle wandering at random inside a fixed one.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::str::FromStr;

use super::Canvas;
use crate::color::NamedColor;
use crate::error::range;
use crate::geometry::{Circle, Point};
use crate::rng::Xorshift64Star;
use crate::{Error, Result};

/// Rejection-sampling budget per frame.
pub const MAX_PLACEMENT_ATTEMPTS: u64 = 10_000_000;

/// How candidate centres for the moving circle are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampler {
    /// Angle uniform in `[0, 360)` degrees, distance uniform in `[0, R)`.
    Polar,
    /// Each coordinate uniform in `[c - R, c + R)`.
    Rectangular,
}

impl FromStr for Sampler {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "polar" => Ok(Sampler::Polar),
            "rectangular" => Ok(Sampler::Rectangular),
            other => Err(range("sampler", alloc::format!("unknown sampler {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MovingCircle {
    pub x: f64,
    pub y: f64,
    pub outer_radius: f64,
    pub inner_radius: f64,
    pub sampler: Sampler,
    pub frames: usize,
    pub seed: u64,
    /// Frame size in pixels (square); user coordinates are `0..100`.
    pub pixels: usize,
    pub pen_radius: f64,
}

impl MovingCircle {
    /// 512x512 frames with pen radius 0.01.
    pub fn new(x: f64, y: f64, outer_radius: f64, inner_radius: f64, sampler: Sampler) -> Self {
        Self {
            x,
            y,
            outer_radius,
            inner_radius,
            sampler,
            frames: 1,
            seed: 0,
            pixels: 512,
            pen_radius: 0.01,
        }
    }
}

/// One accepted placement and its rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    pub fixed: Circle,
    pub moving: Circle,
    /// Candidates drawn before (and including) the accepted one.
    pub attempts: u64,
    pub canvas: Canvas,
}

/// Renders `params.frames` frames. Frame `i` draws its candidates from
/// `Xorshift64Star::stream(seed, i)`, so frames are independent of each
/// other and reproducible.
pub fn moving_circle_frames(params: &MovingCircle) -> Result<Vec<Frame>> {
    let fixed = Circle::new(params.outer_radius, Point::new(params.x, params.y)?, NamedColor::Black)?;
    // validates the inner radius too
    Circle::new(params.inner_radius, fixed.center(), NamedColor::Red)?;
    if params.inner_radius >= params.outer_radius {
        return Err(Error::ImpossiblePlacement {
            outer: params.outer_radius,
            inner: params.inner_radius,
        });
    }
    (0..params.frames)
        .map(|i| {
            let mut rng = Xorshift64Star::stream(params.seed, i as u64);
            let (moving, attempts) = place(params, &fixed, &mut rng)?;
            let mut canvas = Canvas::with_default_scale(params.pixels, params.pixels)?;
            canvas.set_pen_radius(params.pen_radius)?;
            canvas.clear(NamedColor::White);
            canvas.draw_circle_outline(&fixed);
            canvas.draw_circle_outline(&moving);
            Ok(Frame { fixed, moving, attempts, canvas })
        })
        .collect()
}

fn place(params: &MovingCircle, fixed: &Circle, rng: &mut Xorshift64Star) -> Result<(Circle, u64)> {
    let (x, y, big_r, r) = (params.x, params.y, params.outer_radius, params.inner_radius);
    for attempt in 1..=MAX_PLACEMENT_ATTEMPTS {
        let candidate = match params.sampler {
            Sampler::Polar => {
                let angle = rng.next_f64() * 360.0;
                let n = rng.next_f64() * big_r;
                let rad = angle / 180.0 * PI;
                let x1 = n * libm::cos(rad) + x;
                let y1 = n * libm::sin(rad) + y;
                let d = libm::sqrt((x - x1) * (x - x1) + (y - y1) * (y - y1));
                if d + r <= big_r {
                    Some((x1, y1))
                } else {
                    None
                }
            }
            Sampler::Rectangular => {
                let x1 = rng.next_f64() * 2.0 * big_r + x - big_r;
                let y1 = rng.next_f64() * 2.0 * big_r + y - big_r;
                let c2 = Circle::new(r, Point::new(x1, y1)?, NamedColor::Red)?;
                fixed.contains_circle(&c2).then_some((x1, y1))
            }
        };
        if let Some((x1, y1)) = candidate {
            return Ok((Circle::new(r, Point::new(x1, y1)?, NamedColor::Red)?, attempt));
        }
    }
    Err(Error::PlacementExhausted { attempts: MAX_PLACEMENT_ATTEMPTS })
}
