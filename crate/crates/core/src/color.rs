//! Named pen colors.

use core::fmt;
use core::str::FromStr;

use crate::error::range;
use crate::Error;

/// An 8-bit RGB triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rgb(pub u8, pub u8, pub u8);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedColor {
    Black,
    White,
    Red,
    Green,
    Blue,
    Yellow,
    Orange,
    Magenta,
    Cyan,
    Gray,
}

impl NamedColor {
    pub const ALL: [NamedColor; 10] = [
        NamedColor::Black,
        NamedColor::White,
        NamedColor::Red,
        NamedColor::Green,
        NamedColor::Blue,
        NamedColor::Yellow,
        NamedColor::Orange,
        NamedColor::Magenta,
        NamedColor::Cyan,
        NamedColor::Gray,
    ];

    pub const fn rgb(self) -> Rgb {
        match self {
            NamedColor::Black => Rgb(0, 0, 0),
            NamedColor::White => Rgb(255, 255, 255),
            NamedColor::Red => Rgb(255, 0, 0),
            NamedColor::Green => Rgb(0, 255, 0),
            NamedColor::Blue => Rgb(0, 0, 255),
            NamedColor::Yellow => Rgb(255, 255, 0),
            NamedColor::Orange => Rgb(255, 200, 0),
            NamedColor::Magenta => Rgb(255, 0, 255),
            NamedColor::Cyan => Rgb(0, 255, 255),
            NamedColor::Gray => Rgb(128, 128, 128),
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            NamedColor::Black => "BLACK",
            NamedColor::White => "WHITE",
            NamedColor::Red => "RED",
            NamedColor::Green => "GREEN",
            NamedColor::Blue => "BLUE",
            NamedColor::Yellow => "YELLOW",
            NamedColor::Orange => "ORANGE",
            NamedColor::Magenta => "MAGENTA",
            NamedColor::Cyan => "CYAN",
            NamedColor::Gray => "GRAY",
        }
    }
}

impl fmt::Display for NamedColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedColor {
    type Err = Error;

    /// Case-insensitive color name.
    fn from_str(s: &str) -> Result<Self, Error> {
        NamedColor::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| range("color", alloc::format!("unknown color {s:?}")))
    }
}
