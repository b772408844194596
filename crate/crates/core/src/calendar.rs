//! Gregorian month calendars rendered as discrete pictures.

use alloc::format;
use alloc::string::String;

use crate::error::range;
use crate::pic::{self, DiscretePic};
use crate::Result;

pub const MONTH_NAMES: [&str; 12] = [
    "JANUARY", "FEBRUARY", "MARCH", "APRIL", "MAY", "JUNE", "JULY", "AUGUST", "SEPTEMBER",
    "OCTOBER", "NOVEMBER", "DECEMBER",
];

const WEEKDAY_HEADER: [&str; 7] = ["Mo", "Tu", "We", "Th", "Fr", "Sa", "Su"];
const CELL: usize = 3;

/// First Gregorian year accepted (the first full year after the 1582 reform).
pub const MIN_YEAR: i32 = 1583;

/// A validated (year, month) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CalendricSpec {
    year: i32,
    month: u32,
}

impl CalendricSpec {
    pub fn new(year: i32, month: u32) -> Result<Self> {
        if year < MIN_YEAR {
            return Err(range("year", format!("{year} < {MIN_YEAR}")));
        }
        if !(1..=12).contains(&month) {
            return Err(range("month", format!("{month} not in 1..=12")));
        }
        Ok(Self { year, month })
    }

    pub fn year(&self) -> i32 {
        self.year
    }

    pub fn month(&self) -> u32 {
        self.month
    }

    pub fn days(&self) -> u32 {
        days_in_month(self.year, self.month)
    }

    /// Weekday of the 1st, 0 = Monday .. 6 = Sunday.
    pub fn first_weekday(&self) -> u32 {
        weekday(self.year, self.month, 1)
    }

    pub fn name(&self) -> &'static str {
        MONTH_NAMES[self.month as usize - 1]
    }
}

pub fn is_leap_year(year: i32) -> bool {
    (year % 4 == 0 && year % 100 != 0) || year % 400 == 0
}

pub fn days_in_month(year: i32, month: u32) -> u32 {
    match month {
        2 if is_leap_year(year) => 29,
        2 => 28,
        4 | 6 | 9 | 11 => 30,
        _ => 31,
    }
}

/// Zeller's congruence for the Gregorian calendar, shifted so that
/// 0 = Monday and 6 = Sunday.
pub fn weekday(year: i32, month: u32, day: u32) -> u32 {
    // January and February count as months 13 and 14 of the previous year.
    let (m, y) = if month < 3 { (month as i64 + 12, year as i64 - 1) } else { (month as i64, year as i64) };
    let k = y.rem_euclid(100);
    let j = y.div_euclid(100);
    let q = day as i64;
    // h: 0 = Saturday, 1 = Sunday, 2 = Monday, ...
    let h = (q + (13 * (m + 1)) / 5 + k + k / 4 + j / 4 + 5 * j).rem_euclid(7);
    ((h + 5) % 7) as u32
}

/// Month name and year as a banner above a Monday-first day grid.
/// With `bold`, banner glyphs are doubled horizontally.
pub fn calendric_month(spec: CalendricSpec, bold: bool) -> Result<DiscretePic> {
    let mut title = pic::banner(&format!("{} {}", spec.name(), spec.year()))?;
    if bold {
        title = pic::scale(&title, 2, 1)?;
    }
    let grid = day_grid(spec)?;
    let width = title.width().max(grid.width());

    let title = title.pad_to(title.height(), width, ' ')?;
    let spacer = DiscretePic::filled(1, width, ' ')?;
    let grid_col = ((width - grid.width()) / 2) as isize;
    let grid = pic::overlay(
        &DiscretePic::filled(grid.height(), width, ' ')?,
        &grid,
        0,
        grid_col,
        '\0',
    );
    pic::vjoin(&pic::vjoin(&title, &spacer)?, &grid)
}

fn day_grid(spec: CalendricSpec) -> Result<DiscretePic> {
    let offset = spec.first_weekday();
    let days = spec.days();
    let weeks = (offset + days).div_ceil(7);

    let mut rows = alloc::vec::Vec::with_capacity(weeks as usize + 1);
    let header: String = WEEKDAY_HEADER.iter().map(|d| format!("{d:>CELL$}")).collect();
    rows.push(header);
    for week in 0..weeks {
        let mut row = String::with_capacity(7 * CELL);
        for col in 0..7 {
            let slot = week * 7 + col;
            if slot < offset || slot >= offset + days {
                row.push_str(&format!("{:CELL$}", ""));
            } else {
                row.push_str(&format!("{:>CELL$}", slot - offset + 1));
            }
        }
        rows.push(row);
    }
    DiscretePic::from_rows(rows)
}
