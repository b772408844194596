//! Visual programming primitives that need nothing beyond `alloc`.
//!
//! * [`pic`]: rectangular character pictures and their combinators,
//!   pyramids, banners and month calendars.
//! * [`text`]: word extraction, line filling and multi-column tabulation.
//! * [`geometry`]: immutable points and circles.
//! * [`canvas`]: a raster surface with user coordinates, a thick pen,
//!   primitive counting, circle fills and PPM/SVG export.
//! * [`fractal`]: the four-transform dragon curve.
//! * [`fib`], [`sort`], [`table`], [`plot`]: the clock-free half of the
//!   complexity benchmarks. Timing lives in the `pictura` crate.

#![no_std]

extern crate alloc;

pub mod calendar;
pub mod canvas;
pub mod color;
mod error;
pub mod fib;
mod font;
pub mod fractal;
pub mod geometry;
pub mod pic;
pub mod plot;
pub mod rng;
pub mod sort;
pub mod table;
pub mod text;

pub use error::{Error, Result};
