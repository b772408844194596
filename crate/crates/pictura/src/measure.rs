//! Median-of-k wall-clock timing.

use std::hint::black_box;
use std::time::Instant;

use pictura_core::table::{SampleTable, Unit};

use crate::{Error, Result};

pub const DEFAULT_REPS: usize = 5;

/// Median of `values`; the mean of the two middle values for even lengths.
/// `None` when empty or when any value is NaN.
pub fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() || values.iter().any(|v| v.is_nan()) {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    Some(if v.len() % 2 == 1 { v[mid] } else { (v[mid - 1] + v[mid]) / 2.0 })
}

/// Runs `f` once untimed, then `reps` timed times on the monotonic clock,
/// and returns the median duration in seconds.
pub fn median_seconds<T, F>(reps: usize, mut f: F) -> pictura_core::Result<f64>
where
    F: FnMut() -> pictura_core::Result<T>,
{
    if reps < 1 {
        return Err(pictura_core::Error::Range {
            what: "repetitions",
            detail: "must be at least 1".into(),
        });
    }
    black_box(f()?);
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        black_box(f()?);
        times.push(start.elapsed().as_secs_f64());
    }
    Ok(median(&times).unwrap_or(0.0))
}

/// Times `runner(x)` for every `x` in `xs` and appends one row per `x`
/// labelled `method` to `table`.
pub fn measure_into<T, F>(table: &mut SampleTable, method: &str, xs: &[f64], reps: usize, mut runner: F) -> Result<()>
where
    F: FnMut(f64) -> pictura_core::Result<T>,
{
    for &x in xs {
        let secs = median_seconds(reps, || runner(x)).map_err(|source| Error::Runner { x, source })?;
        table.push(x, method, secs, Unit::Seconds)?;
    }
    Ok(())
}

/// [`measure_into`] on a fresh table.
pub fn measure<T, F>(method: &str, xs: &[f64], reps: usize, runner: F) -> Result<SampleTable>
where
    F: FnMut(f64) -> pictura_core::Result<T>,
{
    let mut table = SampleTable::new();
    measure_into(&mut table, method, xs, reps, runner)?;
    Ok(table)
}
