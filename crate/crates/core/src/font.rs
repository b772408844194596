//! The fixed 5x7 banner font, stored as a text asset.

const FONT: &str = include_str!("font5x7.txt");

pub(crate) const GLYPH_WIDTH: usize = 5;
pub(crate) const GLYPH_HEIGHT: usize = 7;
pub(crate) const INK: char = '#';

/// Rows of the glyph for `c`, with ink as `#` and paper as `.`.
pub(crate) fn glyph(c: char) -> Option<[&'static str; GLYPH_HEIGHT]> {
    let mut lines = FONT.lines();
    while let Some(line) = lines.next() {
        let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) else {
            continue;
        };
        let mut chars = name.chars();
        if chars.next() != Some(c) || chars.next().is_some() {
            continue;
        }
        let mut rows = [""; GLYPH_HEIGHT];
        for row in rows.iter_mut() {
            *row = lines.next()?;
        }
        return Some(rows);
    }
    None
}
