//! Moving-circle frame sequences on disk: numbered PPM files plus a JSON
//! manifest.

use std::fs;
use std::path::Path;

use pictura_core::canvas::{moving_circle_frames, Frame, MovingCircle, Sampler};
use serde::{Deserialize, Serialize};

use crate::output::write_bytes;
use crate::{Error, Result};

/// Display interval between frames, in microseconds. Recorded in the
/// manifest; nothing sleeps.
pub const FRAME_INTERVAL_US: u64 = 200;
pub const MANIFEST_NAME: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub frames: Vec<String>,
    pub interval_us: u64,
    pub width: usize,
    pub height: usize,
    pub seed: u64,
    pub sampler: String,
}

pub fn frame_name(index: usize) -> String {
    format!("frame_{index:04}.ppm")
}

fn sampler_name(s: Sampler) -> &'static str {
    match s {
        Sampler::Polar => "polar",
        Sampler::Rectangular => "rectangular",
    }
}

/// Renders the frames of `params` and writes them, and the manifest, into
/// `dir` (created if missing). Returns the frames and the manifest.
pub fn write_frames(dir: &Path, params: &MovingCircle) -> Result<(Vec<Frame>, Manifest)> {
    let frames = moving_circle_frames(params)?;
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut names = Vec::with_capacity(frames.len());
    for (i, frame) in frames.iter().enumerate() {
        let name = frame_name(i);
        write_bytes(&dir.join(&name), &frame.canvas.to_ppm())?;
        names.push(name);
    }
    let manifest = Manifest {
        frames: names,
        interval_us: FRAME_INTERVAL_US,
        width: params.pixels,
        height: params.pixels,
        seed: params.seed,
        sampler: sampler_name(params.sampler).into(),
    };
    let mut json = serde_json::to_string_pretty(&manifest)?;
    json.push('\n');
    write_bytes(&dir.join(MANIFEST_NAME), json.as_bytes())?;
    Ok((frames, manifest))
}
