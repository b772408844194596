//! The three benchmark families: Fibonacci strategies, circle fills and
//! sorting.

use std::hint::black_box;

use pictura_core::canvas::Canvas;
use pictura_core::color::NamedColor;
use pictura_core::fib::{fibonacci, FibStrategy};
use pictura_core::geometry::{Circle, Point};
use pictura_core::sort::{checked_sort, random_input, SortAlgorithm};
use pictura_core::table::{SampleTable, Unit};

use crate::measure::{measure_into, median_seconds};
use crate::{Error, Result};

/// Canvas edge, in pixels, for the fill benchmark.
pub const FILL_PIXELS: usize = 512;
/// Pen radius for the fill benchmark.
pub const FILL_PEN_RADIUS: f64 = 0.01;
/// Concentric fill density used by the benchmark: rings x chords per ring.
pub const FILL_RINGS: usize = 160;
pub const FILL_CHORDS: usize = 180;

pub const DEFAULT_FIB_NS: [f64; 6] = [5.0, 10.0, 15.0, 20.0, 25.0, 30.0];
pub const DEFAULT_FILL_RADII: [f64; 5] = [10.0, 20.0, 30.0, 40.0, 50.0];
pub const DEFAULT_SORT_SIZES: [f64; 5] = [1000.0, 2000.0, 5000.0, 10000.0, 20000.0];

fn as_index(x: f64, what: &'static str) -> pictura_core::Result<u64> {
    if x >= 0.0 && x.fract() == 0.0 && x <= u32::MAX as f64 {
        Ok(x as u64)
    } else {
        Err(pictura_core::Error::Range { what, detail: format!("{x} is not a non-negative integer") })
    }
}

/// Median seconds per strategy for every `n` in `ns`.
pub fn bench_fib(ns: &[f64], reps: usize) -> Result<SampleTable> {
    let mut table = SampleTable::new();
    for strategy in FibStrategy::ALL {
        measure_into(&mut table, strategy.label(), ns, reps, |x| {
            fibonacci(as_index(x, "fibonacci index")? as u32, black_box(strategy))
        })?;
    }
    Ok(table)
}

/// Operation counts (calls or loop iterations) per strategy; exact and
/// machine independent.
pub fn fib_op_counts(ns: &[f64]) -> Result<SampleTable> {
    let mut table = SampleTable::new();
    for strategy in FibStrategy::ALL {
        for &x in ns {
            let r = fibonacci(as_index(x, "fibonacci index")? as u32, strategy)
                .map_err(|source| Error::Runner { x, source })?;
            table.push(x, strategy.label(), r.op_count as f64, Unit::Count)?;
        }
    }
    Ok(table)
}

/// The benchmark canvas: 512x512 over `0..100`, pen radius 0.01, no
/// primitive log.
pub fn fill_canvas() -> pictura_core::Result<Canvas> {
    let mut cv = Canvas::with_default_scale(FILL_PIXELS, FILL_PIXELS)?;
    cv.set_pen_radius(FILL_PEN_RADIUS)?;
    cv.set_recording(false);
    Ok(cv)
}

fn centred(radius: f64) -> pictura_core::Result<Circle> {
    Circle::new(radius, Point::new(50.0, 50.0)?, NamedColor::Black)
}

/// Median seconds of the radial fill and the 160 x 180 concentric fill for
/// every radius in `radii` (user units on a `0..100` canvas).
pub fn bench_fill(radii: &[f64], reps: usize) -> Result<SampleTable> {
    let mut table = SampleTable::new();
    let mut cv = fill_canvas()?;
    measure_into(&mut table, "radial", radii, reps, |r| {
        let c = centred(r)?;
        Ok(cv.fill_circle_radial(&c))
    })?;
    let label = format!("concentric {FILL_RINGS}x{FILL_CHORDS}");
    measure_into(&mut table, &label, radii, reps, |r| {
        let c = centred(r)?;
        cv.fill_circle_concentric(&c, FILL_RINGS, FILL_CHORDS)
    })?;
    Ok(table)
}

/// Median seconds of each algorithm on the same seeded input per size.
/// Both outputs are checked against a reference sort before any timing;
/// a mismatch aborts with a correctness error.
pub fn bench_sorts(sizes: &[f64], seed: u64, reps: usize) -> Result<SampleTable> {
    let inputs = sizes
        .iter()
        .map(|&x| Ok(random_input(as_index(x, "input size")? as usize, seed)))
        .collect::<pictura_core::Result<Vec<_>>>()?;
    for input in &inputs {
        for alg in SortAlgorithm::ALL {
            checked_sort(alg, input)?;
        }
    }
    let mut table = SampleTable::new();
    for alg in SortAlgorithm::ALL {
        for (&x, input) in sizes.iter().zip(&inputs) {
            let secs = median_seconds(reps, || {
                let mut v = input.clone();
                alg.sort(black_box(&mut v));
                Ok(v)
            })
            .map_err(|source| Error::Runner { x, source })?;
            table.push(x, alg.label(), secs, Unit::Seconds)?;
        }
    }
    Ok(table)
}
