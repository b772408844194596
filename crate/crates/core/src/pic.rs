//! Discrete pictures: rectangular grids of characters with an algebra of
//! combinators.
//!
//! Every row of a [`DiscretePic`] has exactly `width` cells, trailing spaces
//! included, so joining, framing, scaling and reversing are total on
//! matching dimensions. Line breaks only appear in [`DiscretePic::render_text`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{dimension, range};
use crate::font::{self, GLYPH_HEIGHT, GLYPH_WIDTH, INK};
use crate::{Error, Result};

/// Rectangular character picture. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DiscretePic {
    height: usize,
    width: usize,
    // row-major, `height * width` cells
    cells: Vec<char>,
}

fn check_cell(c: char) -> Result<char> {
    if c.is_control() {
        let mut s = String::new();
        s.push(c);
        return Err(Error::InvalidCell(s));
    }
    Ok(c)
}

impl DiscretePic {
    /// The 0x0 picture.
    pub fn empty() -> Self {
        Self::default()
    }

    /// A `height` x `width` picture filled with `fill`.
    pub fn filled(height: usize, width: usize, fill: char) -> Result<Self> {
        let fill = check_cell(fill)?;
        Ok(Self { height, width, cells: alloc::vec![fill; height * width] })
    }

    /// Builds a picture from rows that must all have the same character count.
    pub fn from_rows<I, S>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut cells = Vec::new();
        let mut width = None;
        let mut height = 0;
        for row in rows {
            let row = row.as_ref();
            let before = cells.len();
            for c in row.chars() {
                cells.push(check_cell(c)?);
            }
            let w = cells.len() - before;
            match width {
                None => width = Some(w),
                Some(expected) if expected != w => {
                    return Err(dimension(
                        "from_rows",
                        alloc::format!("row {height} has width {w}, expected {expected}"),
                    ));
                }
                Some(_) => {}
            }
            height += 1;
        }
        Ok(Self { height, width: width.unwrap_or(0), cells })
    }

    /// Inverse of [`render_text`](Self::render_text): every row must be
    /// terminated by a single LF and all rows must have equal width.
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let Some(body) = text.strip_suffix('\n') else {
            return Err(Error::Parse {
                line: text.split('\n').count(),
                detail: "last row is not terminated by a line break".into(),
            });
        };
        Self::from_rows(body.split('\n'))
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// `(height, width)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<char> {
        (row < self.height && col < self.width).then(|| self.cells[row * self.width + col])
    }

    /// Cells of one row.
    pub fn row(&self, row: usize) -> &[char] {
        &self.cells[row * self.width..(row + 1) * self.width]
    }

    pub fn rows(&self) -> impl DoubleEndedIterator<Item = &[char]> + ExactSizeIterator + '_ {
        (0..self.height).map(move |r| self.row(r))
    }

    /// Number of cells equal to `c`.
    pub fn count(&self, c: char) -> usize {
        self.cells.iter().filter(|&&x| x == c).count()
    }

    /// Rows joined with LF, one after every row including the last.
    pub fn render_text(&self) -> String {
        let mut s = String::with_capacity(self.height * (self.width + 1));
        for row in self.rows() {
            s.extend(row.iter());
            s.push('\n');
        }
        s
    }

    /// Like [`render_text`](Self::render_text) but with trailing spaces
    /// removed from every row.
    pub fn render_trimmed(&self) -> String {
        let mut s = String::new();
        for row in self.rows() {
            let end = row.iter().rposition(|&c| c != ' ').map_or(0, |i| i + 1);
            s.extend(row[..end].iter());
            s.push('\n');
        }
        s
    }

    /// Grows the picture to `height` x `width`, adding `fill` on the right
    /// and at the bottom.
    pub fn pad_to(&self, height: usize, width: usize, fill: char) -> Result<Self> {
        if height < self.height || width < self.width {
            return Err(dimension(
                "pad_to",
                alloc::format!(
                    "cannot pad {}x{} down to {height}x{width}",
                    self.height,
                    self.width
                ),
            ));
        }
        let mut out = Self::filled(height, width, fill)?;
        for r in 0..self.height {
            out.cells[r * width..r * width + self.width].copy_from_slice(self.row(r));
        }
        Ok(out)
    }
}

impl fmt::Display for DiscretePic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

impl fmt::Debug for DiscretePic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DiscretePic {}x{}", self.height, self.width)?;
        for row in self.rows() {
            f.write_str("|")?;
            for c in row {
                write!(f, "{c}")?;
            }
            f.write_str("|\n")?;
        }
        Ok(())
    }
}

/// A single row of `len` copies of `c`. `len == 0` gives the 1x0 picture.
pub fn uniform_line(len: usize, c: char) -> Result<DiscretePic> {
    DiscretePic::filled(1, len, c)
}

/// Row `r` (1-based) of a height-`h` pyramid: `h-r` spaces, `2r-1` copies of
/// `c`, `h-r` spaces.
pub fn pyramid_row(h: usize, r: usize, c: char) -> Result<DiscretePic> {
    if r < 1 || r > h {
        return Err(range("pyramid row", alloc::format!("row {r} not in 1..={h}")));
    }
    let side = uniform_line(h - r, ' ')?;
    let body = uniform_line(2 * r - 1, c)?;
    hjoin(&hjoin(&side, &body)?, &side)
}

pub fn pyramid(h: usize, c: char) -> Result<DiscretePic> {
    if h < 1 {
        return Err(range("pyramid height", alloc::format!("{h} < 1")));
    }
    let mut pic = pyramid_row(h, 1, c)?;
    for r in 2..=h {
        pic = vjoin(&pic, &pyramid_row(h, r, c)?)?;
    }
    Ok(pic)
}

/// Places `b` to the right of `a`. Heights must match.
pub fn hjoin(a: &DiscretePic, b: &DiscretePic) -> Result<DiscretePic> {
    if a.height != b.height {
        return Err(dimension(
            "hjoin",
            alloc::format!("heights {} and {} differ", a.height, b.height),
        ));
    }
    let width = a.width + b.width;
    let mut cells = Vec::with_capacity(a.height * width);
    for r in 0..a.height {
        cells.extend_from_slice(a.row(r));
        cells.extend_from_slice(b.row(r));
    }
    Ok(DiscretePic { height: a.height, width, cells })
}

/// Places `b` below `a`. Widths must match.
pub fn vjoin(a: &DiscretePic, b: &DiscretePic) -> Result<DiscretePic> {
    if a.width != b.width {
        return Err(dimension(
            "vjoin",
            alloc::format!("widths {} and {} differ", a.width, b.width),
        ));
    }
    let mut cells = Vec::with_capacity(a.cells.len() + b.cells.len());
    cells.extend_from_slice(&a.cells);
    cells.extend_from_slice(&b.cells);
    Ok(DiscretePic { height: a.height + b.height, width: a.width, cells })
}

/// Surrounds `p` with a one-cell border of `border`.
pub fn frame(p: &DiscretePic, border: char) -> Result<DiscretePic> {
    let (h, w) = (p.height + 2, p.width + 2);
    let mut out = DiscretePic::filled(h, w, border)?;
    for r in 0..p.height {
        let start = (r + 1) * w + 1;
        out.cells[start..start + p.width].copy_from_slice(p.row(r));
    }
    Ok(out)
}

/// Repeats every cell `kx` times across and every row `ky` times down.
pub fn scale(p: &DiscretePic, kx: usize, ky: usize) -> Result<DiscretePic> {
    if kx < 1 || ky < 1 {
        return Err(range("scale factor", alloc::format!("({kx}, {ky}) must both be >= 1")));
    }
    let width = p.width * kx;
    let mut cells = Vec::with_capacity(p.height * ky * width);
    for row in p.rows() {
        let start = cells.len();
        for &c in row {
            cells.extend(core::iter::repeat_n(c, kx));
        }
        for _ in 1..ky {
            cells.extend_from_within(start..start + width);
        }
    }
    Ok(DiscretePic { height: p.height * ky, width, cells })
}

/// Paints `top` onto `base` with its top-left corner at (`at_row`, `at_col`).
/// Cells of `top` equal to `transparent`, and cells falling outside `base`,
/// are skipped.
pub fn overlay(
    base: &DiscretePic,
    top: &DiscretePic,
    at_row: isize,
    at_col: isize,
    transparent: char,
) -> DiscretePic {
    let mut out = base.clone();
    for (tr, row) in top.rows().enumerate() {
        let Some(r) = offset(at_row, tr, base.height) else { continue };
        for (tc, &c) in row.iter().enumerate() {
            if c == transparent {
                continue;
            }
            if let Some(col) = offset(at_col, tc, base.width) {
                out.cells[r * base.width + col] = c;
            }
        }
    }
    out
}

fn offset(origin: isize, delta: usize, limit: usize) -> Option<usize> {
    let delta = isize::try_from(delta).ok()?;
    let pos = origin.checked_add(delta)?;
    usize::try_from(pos).ok().filter(|&p| p < limit)
}

/// The part of `p` inside the `h` x `w` rectangle at (`row`, `col`).
/// An empty intersection is an error.
pub fn clip(p: &DiscretePic, row: usize, col: usize, h: usize, w: usize) -> Result<DiscretePic> {
    let r_end = row.saturating_add(h).min(p.height);
    let c_end = col.saturating_add(w).min(p.width);
    if row >= r_end || col >= c_end {
        return Err(dimension(
            "clip",
            alloc::format!(
                "rectangle {h}x{w} at ({row}, {col}) misses the {}x{} picture",
                p.height,
                p.width
            ),
        ));
    }
    let width = c_end - col;
    let mut cells = Vec::with_capacity((r_end - row) * width);
    for r in row..r_end {
        cells.extend_from_slice(&p.row(r)[col..c_end]);
    }
    Ok(DiscretePic { height: r_end - row, width, cells })
}

/// Reverses the row order and every row: the string reversal of the whole
/// picture, with line breaks kept at row ends.
pub fn rotate180(p: &DiscretePic) -> DiscretePic {
    let mut cells = p.cells.clone();
    cells.reverse();
    DiscretePic { height: p.height, width: p.width, cells }
}

/// Text set in the built-in 5x7 font, glyphs separated by one blank column.
/// Supports `A`-`Z`, `0`-`9` and space.
pub fn banner(s: &str) -> Result<DiscretePic> {
    let mut pic = DiscretePic::filled(GLYPH_HEIGHT, 0, ' ')?;
    let gap = DiscretePic::filled(GLYPH_HEIGHT, 1, ' ')?;
    for (i, c) in s.chars().enumerate() {
        let g = glyph_pic(c)?;
        if i > 0 {
            pic = hjoin(&pic, &gap)?;
        }
        pic = hjoin(&pic, &g)?;
    }
    Ok(pic)
}

fn glyph_pic(c: char) -> Result<DiscretePic> {
    let rows = font::glyph(c).ok_or(Error::UnsupportedChar(c))?;
    let mut cells = Vec::with_capacity(GLYPH_HEIGHT * GLYPH_WIDTH);
    for row in rows {
        cells.extend(row.chars().map(|ch| if ch == INK { INK } else { ' ' }));
    }
    Ok(DiscretePic { height: GLYPH_HEIGHT, width: GLYPH_WIDTH, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pic(rows: &[&str]) -> DiscretePic {
        DiscretePic::from_rows(rows).unwrap()
    }

    #[test]
    fn uniform_lines() {
        assert_eq!(uniform_line(4, 'x').unwrap().render_text(), "xxxx\n");
        let empty = uniform_line(0, 'q').unwrap();
        assert_eq!(empty.dims(), (1, 0));
        assert_eq!(empty.render_text(), "\n");
        assert_eq!(uniform_line(3, ' ').unwrap(), pic(&["   "]));
    }

    #[test]
    fn pyramid_rows() {
        assert_eq!(pyramid_row(5, 3, 'x').unwrap(), pic(&["  xxxxx  "]));
        assert_eq!(pyramid_row(1, 1, 'o').unwrap(), pic(&["o"]));
        assert_eq!(pyramid_row(5, 5, 'x').unwrap(), pic(&["xxxxxxxxx"]));
        assert!(matches!(pyramid_row(5, 0, 'x'), Err(Error::Range { .. })));
        assert!(matches!(pyramid_row(5, 6, 'x'), Err(Error::Range { .. })));
    }

    #[test]
    fn pyramids() {
        let p = pyramid(5, 'x').unwrap();
        assert_eq!(
            p,
            pic(&["    x    ", "   xxx   ", "  xxxxx  ", " xxxxxxx ", "xxxxxxxxx"])
        );
        assert_eq!(pyramid(1, 'p').unwrap(), pic(&["p"]));
        let p3 = pyramid(3, 'o').unwrap();
        let counts: Vec<usize> =
            p3.rows().map(|r| r.iter().filter(|&&c| c == 'o').count()).collect();
        assert_eq!(counts, vec![1, 3, 5]);
        assert!(matches!(pyramid(0, 'x'), Err(Error::Range { .. })));
        assert_eq!(pyramid(2, 'x').unwrap().render_text(), " x \nxxx\n");
    }

    #[test]
    fn joins() {
        assert_eq!(hjoin(&pic(&["x"]), &pic(&["y"])).unwrap(), pic(&["xy"]));
        assert_eq!(vjoin(&pic(&["x"]), &pic(&["y"])).unwrap(), pic(&["x", "y"]));

        let p = pyramid(3, 'x').unwrap();
        let no_cols = DiscretePic::filled(3, 0, ' ').unwrap();
        assert_eq!(hjoin(&p, &no_cols).unwrap(), p);
        let no_rows = DiscretePic::filled(0, 5, ' ').unwrap();
        assert_eq!(vjoin(&p, &no_rows).unwrap(), p);

        let side = hjoin(&p, &pyramid(3, 'o').unwrap()).unwrap();
        assert_eq!(side, pic(&["  x    o  ", " xxx  ooo ", "xxxxxooooo"]));

        let stack = vjoin(&p, &rotate180(&p)).unwrap();
        assert_eq!(
            stack,
            pic(&["  x  ", " xxx ", "xxxxx", "xxxxx", " xxx ", "  x  "])
        );

        assert!(matches!(hjoin(&p, &pic(&["x"])), Err(Error::Dimension { .. })));
        assert!(matches!(vjoin(&p, &pic(&["x"])), Err(Error::Dimension { .. })));
    }

    #[test]
    fn frames() {
        assert_eq!(frame(&pic(&["x"]), '*').unwrap(), pic(&["***", "*x*", "***"]));
        assert_eq!(frame(&DiscretePic::empty(), '#').unwrap(), pic(&["##", "##"]));
        assert_eq!(
            frame(&pyramid(2, 'o').unwrap(), '+').unwrap(),
            pic(&["+++++", "+ o +", "+ooo+", "+++++"])
        );
    }

    #[test]
    fn scaling() {
        assert_eq!(scale(&pic(&["x"]), 2, 2).unwrap(), pic(&["xx", "xx"]));
        let p = pyramid(3, 'x').unwrap();
        assert_eq!(scale(&p, 1, 1).unwrap(), p);
        assert_eq!(scale(&pic(&["ab"]), 3, 1).unwrap(), pic(&["aaabbb"]));
        assert_eq!(scale(&pic(&["ab", "cd"]), 2, 2).unwrap(), pic(&["aabb", "aabb", "ccdd", "ccdd"]));
        assert!(matches!(scale(&p, 0, 1), Err(Error::Range { .. })));
        assert!(matches!(scale(&p, 1, 0), Err(Error::Range { .. })));
    }

    #[test]
    fn overlays() {
        let base = DiscretePic::filled(3, 3, '.').unwrap();
        assert_eq!(overlay(&base, &pic(&["x"]), 1, 1, ' '), pic(&["...", ".x.", "..."]));
        let blank = DiscretePic::filled(2, 2, ' ').unwrap();
        assert_eq!(overlay(&base, &blank, -1, 2, ' '), base);
        assert_eq!(overlay(&base, &pic(&["ab "]), 0, 2, ' '), pic(&["..a", "...", "..."]));
        assert_eq!(overlay(&base, &pic(&["ab"]), -1, 0, ' '), base);
        assert_eq!(overlay(&base, &pic(&["ab"]), 2, -1, ' '), pic(&["...", "...", "b.."]));
        assert_eq!(overlay(&base, &pic(&["ab"]), isize::MAX, isize::MIN, ' '), base);
    }

    #[test]
    fn clipping() {
        let p = pyramid(3, 'x').unwrap();
        assert_eq!(clip(&p, 0, 0, 3, 5).unwrap(), p);
        assert_eq!(clip(&p, 2, 0, 1, 5).unwrap(), pic(&["xxxxx"]));
        assert_eq!(clip(&p, 1, 3, 10, 10).unwrap(), pic(&["x ", "xx"]));
        assert!(matches!(clip(&p, 3, 0, 1, 1), Err(Error::Dimension { .. })));
        assert!(matches!(clip(&p, 0, 5, 1, 1), Err(Error::Dimension { .. })));
        assert!(matches!(clip(&p, 0, 0, 0, 3), Err(Error::Dimension { .. })));
    }

    #[test]
    fn rotation() {
        assert_eq!(rotate180(&pic(&["ab"])), pic(&["ba"]));
        assert_eq!(rotate180(&pic(&["ab", "cd"])), pic(&["dc", "ba"]));
        let p = pyramid(4, 'x').unwrap();
        let flipped = DiscretePic::from_rows(
            p.rows().rev().map(|r| r.iter().collect::<String>()),
        )
        .unwrap();
        assert_eq!(rotate180(&p), flipped);
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(DiscretePic::empty().render_text(), "");
        let p = pyramid(3, 'x').unwrap();
        assert_eq!(DiscretePic::parse(&p.render_text()).unwrap(), p);
        assert_eq!(DiscretePic::parse("").unwrap(), DiscretePic::empty());
        assert!(DiscretePic::parse("ab").is_err());
        assert!(DiscretePic::parse("ab\nc\n").is_err());
        assert_eq!(p.render_trimmed(), "  x\n xxx\nxxxxx\n");
    }

    #[test]
    fn control_characters_are_rejected() {
        assert!(matches!(uniform_line(2, '\n'), Err(Error::InvalidCell(_))));
        assert!(matches!(DiscretePic::from_rows(["a\tb"]), Err(Error::InvalidCell(_))));
    }

    #[test]
    fn padding() {
        let p = pic(&["ab"]);
        assert_eq!(p.pad_to(2, 3, '.').unwrap(), pic(&["ab.", "..."]));
        assert!(p.pad_to(1, 1, '.').is_err());
    }

    #[test]
    fn banners() {
        let empty = banner("").unwrap();
        assert_eq!(empty.dims(), (7, 0));
        let a = banner("A").unwrap();
        assert_eq!(
            a,
            pic(&[" ### ", "#   #", "#   #", "#####", "#   #", "#   #", "#   #"])
        );
        let ab = banner("AB").unwrap();
        assert_eq!(ab.width(), a.width() + 1 + banner("B").unwrap().width());
        assert_eq!(banner("A 1").unwrap().width(), 17);
        assert_eq!(banner("Ab"), Err(Error::UnsupportedChar('b')));
        assert_eq!(banner("A-"), Err(Error::UnsupportedChar('-')));
    }
}
