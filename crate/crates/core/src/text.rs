//! Word extraction, greedy line filling and multi-column tabulation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::range;
use crate::{Error, Result};

pub const DEFAULT_GAP: usize = 2;

/// A piece of text. Operations return new blocks; the content is never
/// modified in place.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TextBlock {
    content: String,
}

impl TextBlock {
    pub fn new(content: impl Into<String>) -> Self {
        Self { content: content.into() }
    }

    pub fn content(&self) -> &str {
        &self.content
    }

    pub fn into_content(self) -> String {
        self.content
    }

    /// Maximal runs of characters other than space, tab and line feed.
    pub fn words(&self) -> Vec<&str> {
        split_words(&self.content)
    }
}

impl From<&str> for TextBlock {
    fn from(s: &str) -> Self {
        Self::new(s)
    }
}

impl core::fmt::Display for TextBlock {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.content)
    }
}

/// Column geometry for [`tabulate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TabulationParams {
    /// Characters per committed line.
    pub width: usize,
    /// Lines per column.
    pub height: usize,
    /// Spaces appended after each column's line.
    pub gap: usize,
}

impl TabulationParams {
    pub fn new(width: usize, height: usize) -> Result<Self> {
        Self::with_gap(width, height, DEFAULT_GAP)
    }

    pub fn with_gap(width: usize, height: usize, gap: usize) -> Result<Self> {
        if width < 1 {
            return Err(range("column width", "must be at least 1"));
        }
        if height < 1 {
            return Err(range("column height", "must be at least 1"));
        }
        Ok(Self { width, height, gap })
    }
}

/// What to do with a single word that is wider than a column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Overflow {
    /// Fail with [`Error::Overflow`].
    #[default]
    Reject,
    /// Put the word on its own over-wide line, as the classic student
    /// program does.
    Permit,
}

fn is_space(c: char) -> bool {
    c == ' ' || c == '\n' || c == '\t'
}

pub fn split_words(text: &str) -> Vec<&str> {
    text.split(is_space).filter(|w| !w.is_empty()).collect()
}

fn char_len(s: &str) -> usize {
    s.chars().count()
}

/// Pads `line` with trailing spaces up to `width` characters. Longer lines
/// are returned unchanged.
pub fn fill_line(line: &str, width: usize) -> String {
    let len = char_len(line);
    let mut s = String::with_capacity(line.len() + width.saturating_sub(len));
    s.push_str(line);
    s.extend(core::iter::repeat_n(' ', width.saturating_sub(len)));
    s
}

/// Greedy first-fit lines of at most `width` characters.
pub fn committed_lines(words: &[&str], width: usize, overflow: Overflow) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    let mut line: Option<String> = None;
    let mut line_len = 0;
    for &word in words {
        let word_len = char_len(word);
        if word_len > width && overflow == Overflow::Reject {
            return Err(Error::Overflow { word: word.into(), width });
        }
        match line.as_mut() {
            Some(l) if line_len + 1 + word_len <= width => {
                l.push(' ');
                l.push_str(word);
                line_len += 1 + word_len;
            }
            _ => {
                if let Some(done) = line.replace(String::from(word)) {
                    lines.push(done);
                }
                line_len = word_len;
            }
        }
    }
    lines.extend(line);
    Ok(lines)
}

/// Lays the words of `block` out in columns of `params.height` lines.
///
/// Committed line `i` goes to output row `i % height`, padded to
/// `width + gap`, so columns fill top to bottom and then left to right.
/// Every non-empty row is followed by a line feed.
pub fn tabulate(block: &TextBlock, params: TabulationParams, overflow: Overflow) -> Result<String> {
    if params.width < 1 || params.height < 1 {
        return Err(range("tabulation parameters", format!("{params:?}")));
    }
    let lines = committed_lines(&block.words(), params.width, overflow)?;
    let mut rows = alloc::vec![String::new(); params.height];
    for (i, line) in lines.iter().enumerate() {
        rows[i % params.height].push_str(&fill_line(line, params.width + params.gap));
    }
    let mut out = String::new();
    for row in rows.iter().filter(|r| !r.is_empty()) {
        out.push_str(row);
        out.push('\n');
    }
    Ok(out)
}

/// Removes trailing spaces and tabs from every line.
pub fn strip_trailing(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for piece in text.split_inclusive('\n') {
        let (body, nl) = match piece.strip_suffix('\n') {
            Some(b) => (b, true),
            None => (piece, false),
        };
        out.push_str(body.trim_end_matches([' ', '\t']));
        if nl {
            out.push('\n');
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// ASCII `a`-`z` to `A`-`Z`; everything else untouched.
    Uppercase,
    /// Each line centred in the given width; odd padding goes right.
    Center(usize),
    /// Each line pushed right within the given width.
    RightJustify(usize),
}

pub fn restyle(block: &TextBlock, style: Style) -> Result<TextBlock> {
    let width = match style {
        Style::Uppercase => return Ok(TextBlock::new(block.content.to_ascii_uppercase())),
        Style::Center(w) | Style::RightJustify(w) => w,
    };
    let mut out = String::with_capacity(block.content.len());
    for piece in block.content.split_inclusive('\n') {
        let (line, nl) = match piece.strip_suffix('\n') {
            Some(l) => (l, true),
            None => (piece, false),
        };
        let len = char_len(line);
        if len > width {
            return Err(range("restyle width", format!("line of {len} characters exceeds {width}")));
        }
        let spare = width - len;
        let (left, right) = match style {
            Style::Center(_) => (spare / 2, spare - spare / 2),
            _ => (spare, 0),
        };
        out.extend(core::iter::repeat_n(' ', left));
        out.push_str(line);
        out.extend(core::iter::repeat_n(' ', right));
        if nl {
            out.push('\n');
        }
    }
    Ok(TextBlock::new(out))
}
