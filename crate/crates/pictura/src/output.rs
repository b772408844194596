//! Writing canvases to PPM or SVG files chosen by extension.

use std::fs;
use std::path::Path;

use pictura_core::canvas::Canvas;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageFormat {
    Ppm,
    Svg,
}

impl ImageFormat {
    /// `.ppm` or `.svg`, case-insensitive; anything else is a usage error.
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("ppm") => Ok(ImageFormat::Ppm),
            Some("svg") => Ok(ImageFormat::Svg),
            _ => Err(Error::usage(format!("{}: output must end in .ppm or .svg", path.display()))),
        }
    }
}

pub fn encode(cv: &Canvas, format: ImageFormat) -> Vec<u8> {
    match format {
        ImageFormat::Ppm => cv.to_ppm(),
        ImageFormat::Svg => cv.to_svg().into_bytes(),
    }
}

pub fn write_bytes(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

pub fn write_canvas(path: &Path, cv: &Canvas) -> Result<()> {
    write_bytes(path, &encode(cv, ImageFormat::from_path(path)?))
}
