#![allow(dead_code)]

use std::path::{Path, PathBuf};

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

pub fn read_fixture(name: &str) -> Vec<u8> {
    std::fs::read(fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub struct Outcome {
    pub status: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

impl Outcome {
    pub fn stdout_text(&self) -> String {
        String::from_utf8(self.stdout.clone()).expect("utf-8 stdout")
    }
}

/// Runs the command line in-process.
pub fn run(args: &[&str], stdin: &[u8]) -> Outcome {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = pictura::cli::run(&args, &mut &stdin[..], &mut out, &mut err);
    Outcome { status, stdout: out, stderr: String::from_utf8(err).expect("utf-8 stderr") }
}

/// Reference layout for tabulation, built differently from the library:
/// the words are joined into one running string that is cut at the last
/// space that keeps each piece within `w` characters, and the pieces are
/// then dealt into columns of `h` lines, each padded to `w + gap`.
pub fn reference_tabulation(text: &str, w: usize, h: usize, gap: usize) -> String {
    let stream = text.split_whitespace().collect::<Vec<_>>().join(" ");
    let chars: Vec<char> = stream.chars().collect();
    let mut pieces: Vec<String> = Vec::new();
    let mut start = 0;
    while start < chars.len() {
        let rest = &chars[start..];
        if rest.len() <= w {
            pieces.push(rest.iter().collect());
            break;
        }
        let cut = rest[..=w].iter().rposition(|&c| c == ' ').expect("no word wider than the column");
        pieces.push(rest[..cut].iter().collect());
        start += cut + 1;
    }
    let columns: Vec<&[String]> = pieces.chunks(h).collect();
    let mut out = String::new();
    for r in 0..h.min(pieces.len()) {
        for col in &columns {
            if let Some(piece) = col.get(r) {
                out.push_str(&format!("{piece:<width$}", width = w + gap));
            }
        }
        out.push('\n');
    }
    out
}

pub fn strip_rows(text: &str) -> String {
    text.lines().map(|l| format!("{}\n", l.trim_end())).collect()
}
