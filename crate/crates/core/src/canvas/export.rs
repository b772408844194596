use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{Canvas, Primitive};
use crate::color::{NamedColor, Rgb};

pub const SVG_HEADER: &str = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";

fn svg_color(c: NamedColor) -> String {
    let Rgb(r, g, b) = c.rgb();
    format!("rgb({r},{g},{b})")
}

impl Canvas {
    /// Binary PPM: `P6\n{w} {h}\n255\n` then RGB triples, top row first.
    pub fn to_ppm(&self) -> Vec<u8> {
        let header = format!("P6\n{} {}\n255\n", self.width, self.height);
        let mut out = Vec::with_capacity(header.len() + 3 * self.pixels.len());
        out.extend_from_slice(header.as_bytes());
        for &Rgb(r, g, b) in &self.pixels {
            out.extend_from_slice(&[r, g, b]);
        }
        out
    }

    /// SVG 1.1 made of `line` and `circle` elements, one per recorded
    /// primitive, in pixel coordinates on white paper. Lines use a stroke
    /// width of twice the pen's pixel radius; points become filled circles.
    pub fn to_svg(&self) -> String {
        let mut s = String::from(SVG_HEADER);
        let (w, h) = (self.width, self.height);
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
        );
        for p in self.primitives() {
            let _ = match *p {
                Primitive::Line { from, to, color, stroke_radius } => writeln!(
                    s,
                    "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"{}\" stroke-width=\"{:.3}\" stroke-linecap=\"round\"/>",
                    from.0,
                    from.1,
                    to.0,
                    to.1,
                    svg_color(color),
                    2.0 * stroke_radius
                ),
                Primitive::Point { at, color, stroke_radius } => writeln!(
                    s,
                    "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"{:.3}\" fill=\"{}\"/>",
                    at.0,
                    at.1,
                    stroke_radius.max(0.5),
                    svg_color(color)
                ),
            };
        }
        s.push_str("</svg>\n");
        s
    }
}
