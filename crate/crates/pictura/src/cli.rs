//! `pictura <command> ...`: argument parsing and dispatch.
//!
//! Parsing is hand-rolled: tokens starting with `--` are flags (either
//! switches or `--name VALUE`), everything else is positional. Unknown
//! flags, missing values and wrong positional counts are usage errors
//! (exit 2); failures inside the libraries are exit 1.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use pictura_core::calendar::{calendric_month, CalendricSpec, MIN_YEAR};
use pictura_core::canvas::{Canvas, MovingCircle, Sampler};
use pictura_core::color::NamedColor;
use pictura_core::fib::MAX_N;
use pictura_core::fractal::{default_window, draw_dragon, dragon_point_count, segment_count, DragonSpec, MAX_DEPTH};
use pictura_core::geometry::{Circle, Point};
use pictura_core::pic::pyramid;
use pictura_core::plot::plot_series;
use pictura_core::table::SampleTable;
use pictura_core::text::{strip_trailing, tabulate, Overflow, TabulationParams, TextBlock, DEFAULT_GAP};

use crate::bench::{self, FILL_CHORDS, FILL_RINGS};
use crate::frames::write_frames;
use crate::measure::DEFAULT_REPS;
use crate::output::{write_bytes, write_canvas, ImageFormat};
use crate::{Error, Result};

/// One subcommand's surface, used for parsing and for `--help`.
pub struct CommandSpec {
    pub name: &'static str,
    pub synopsis: &'static str,
    pub about: &'static str,
    /// Flags that take a value.
    pub options: &'static [&'static str],
    /// Flags that take no value.
    pub switches: &'static [&'static str],
}

pub const COMMANDS: &[CommandSpec] = &[
    CommandSpec {
        name: "pyramid",
        synopsis: "pyramid <h> <char> [--trim]",
        about: "centred pyramid of h rows; --trim drops trailing spaces",
        options: &[],
        switches: &["--trim"],
    },
    CommandSpec {
        name: "calendar",
        synopsis: "calendar <year> <month> [--bold]",
        about: "month calendar with a banner title (year >= 1583); --bold doubles the banner",
        options: &[],
        switches: &["--bold"],
    },
    CommandSpec {
        name: "tabulate",
        synopsis: "tabulate <w> <h> [--gap G] [--force] [--raw]",
        about: "stdin laid out in columns of h lines, w characters wide (gap default 2); \
                --force lets over-long words through, --raw keeps trailing padding",
        options: &["--gap"],
        switches: &["--force", "--raw"],
    },
    CommandSpec {
        name: "dragon",
        synopsis: "dragon <depth> [--out PATH.ppm|PATH.svg] [--color NAME]",
        about: "dragon curve on a 512x512 canvas (depth <= 15); without --out prints counts",
        options: &["--out", "--color"],
        switches: &[],
    },
    CommandSpec {
        name: "movingcircle",
        synopsis: "movingcircle <x> <y> <R> <r> [--frames N] [--seed S] [--out DIR] [--sampler polar|rectangular]",
        about: "frames of a radius-r circle placed at random inside a radius-R circle; \
                writes DIR/frame_NNNN.ppm and DIR/manifest.json (defaults: 1 frame, seed 0, \
                DIR frames, rectangular sampler)",
        options: &["--frames", "--seed", "--out", "--sampler"],
        switches: &[],
    },
    CommandSpec {
        name: "fill",
        synopsis: "fill --method radial|concentric --radius R [--rings K] [--chords C] --out PATH",
        about: "filled circle at (50, 50) on a 512x512 canvas, pen 0.01; prints the number of lines \
                drawn (concentric defaults: 160 rings of 180 chords)",
        options: &["--method", "--radius", "--rings", "--chords", "--out"],
        switches: &[],
    },
    CommandSpec {
        name: "bench",
        synopsis: "bench fib|fill|sort [--csv PATH] [--plot PATH.ppm] [--reps K] [--seed S] [--xs LIST]",
        about: "median-of-K timings (default 5) as CSV on stdout or in PATH; --xs is a comma-separated \
                sweep (Fibonacci index, fill radius or sort size); fib(0) = 0, fib(1) = 1",
        options: &["--csv", "--plot", "--reps", "--seed", "--xs"],
        switches: &[],
    },
    CommandSpec {
        name: "rings",
        synopsis: "rings --out PATH.ppm|PATH.svg [--outline-only]",
        about: "five interlocking rings; --outline-only draws them with the thin default pen",
        options: &["--out"],
        switches: &["--outline-only"],
    },
];

pub fn help_text() -> String {
    let mut s = String::from("usage: pictura <command> [arguments]\n\ncommands:\n");
    for c in COMMANDS {
        s.push_str(&format!("  {}\n      {}\n", c.synopsis, c.about));
    }
    s.push_str("\n  --help  print this message\n\nexit status: 0 ok, 1 failure, 2 usage error\n");
    s
}

struct Parsed {
    positional: Vec<String>,
    options: BTreeMap<&'static str, String>,
    switches: Vec<&'static str>,
}

impl Parsed {
    fn new(spec: &CommandSpec, args: &[String]) -> Result<Self> {
        let mut parsed = Parsed { positional: Vec::new(), options: BTreeMap::new(), switches: Vec::new() };
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            if !arg.starts_with("--") {
                parsed.positional.push(arg.clone());
            } else if let Some(&name) = spec.options.iter().find(|o| **o == arg) {
                let value = it.next().ok_or_else(|| Error::usage(format!("{name} needs a value")))?;
                if parsed.options.insert(name, value.clone()).is_some() {
                    return Err(Error::usage(format!("{name} given twice")));
                }
            } else if let Some(&name) = spec.switches.iter().find(|s| **s == arg) {
                parsed.switches.push(name);
            } else {
                return Err(Error::usage(format!("{}: unknown flag {arg}", spec.name)));
            }
        }
        Ok(parsed)
    }

    fn expect_positional(&self, spec: &CommandSpec, n: usize) -> Result<&[String]> {
        if self.positional.len() != n {
            return Err(Error::usage(format!(
                "{}: expected {n} argument(s), got {}",
                spec.name,
                self.positional.len()
            )));
        }
        Ok(&self.positional)
    }

    fn switch(&self, name: &str) -> bool {
        self.switches.contains(&name)
    }

    fn option<T: FromStr>(&self, name: &str) -> Result<Option<T>> {
        self.options.get(name).map(|v| parse_value(name, v)).transpose()
    }

    fn required<T: FromStr>(&self, name: &str) -> Result<T> {
        self.option(name)?.ok_or_else(|| Error::usage(format!("{name} is required")))
    }
}

fn parse_value<T: FromStr>(what: &str, s: &str) -> Result<T> {
    s.parse().map_err(|_| Error::usage(format!("{what}: cannot parse {s:?}")))
}

fn parse_list(what: &str, s: &str) -> Result<Vec<f64>> {
    let xs = s.split(',').map(|t| parse_value::<f64>(what, t.trim())).collect::<Result<Vec<_>>>()?;
    if xs.is_empty() || xs.windows(2).any(|w| w[0] >= w[1]) || xs.iter().any(|x| !x.is_finite()) {
        return Err(Error::usage(format!("{what}: values must be finite and strictly increasing")));
    }
    Ok(xs)
}

/// Runs one command line (without the program name). Returns the exit
/// status; errors are reported on `stderr`.
pub fn run(args: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(args, stdin, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = match &e {
                Error::Usage(msg) => match args.first().and_then(|n| COMMANDS.iter().find(|c| c.name == n)) {
                    Some(c) => writeln!(stderr, "error: {msg}\nusage: pictura {}\n(see pictura --help)", c.synopsis),
                    None => writeln!(stderr, "error: {msg}\n\n{}", help_text()),
                },
                other => writeln!(stderr, "error: {other}"),
            };
            e.exit_code()
        }
    }
}

fn dispatch(args: &[String], stdin: &mut dyn Read, out: &mut dyn Write) -> Result<()> {
    let Some(name) = args.first() else {
        return Err(Error::usage("no command given"));
    };
    if name == "--help" || name == "-h" || name == "help" {
        out.write_all(help_text().as_bytes())?;
        return Ok(());
    }
    let spec = COMMANDS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::usage(format!("unknown command {name:?}")))?;
    let rest = &args[1..];
    if rest.iter().any(|a| a == "--help") {
        writeln!(out, "usage: pictura {}\n    {}", spec.synopsis, spec.about)?;
        return Ok(());
    }
    let p = Parsed::new(spec, rest)?;
    match spec.name {
        "pyramid" => cmd_pyramid(spec, &p, out),
        "calendar" => cmd_calendar(spec, &p, out),
        "tabulate" => cmd_tabulate(spec, &p, stdin, out),
        "dragon" => cmd_dragon(spec, &p, out),
        "movingcircle" => cmd_movingcircle(spec, &p, out),
        "fill" => cmd_fill(spec, &p, out),
        "bench" => cmd_bench(spec, &p, out),
        "rings" => cmd_rings(spec, &p, out),
        _ => unreachable!("every listed command is dispatched"),
    }
}

fn cmd_pyramid(spec: &CommandSpec, p: &Parsed, out: &mut dyn Write) -> Result<()> {
    let pos = p.expect_positional(spec, 2)?;
    let h: usize = parse_value("h", &pos[0])?;
    if h < 1 {
        return Err(Error::usage("pyramid: h must be at least 1"));
    }
    let mut chars = pos[1].chars();
    let (Some(c), None) = (chars.next(), chars.next()) else {
        return Err(Error::usage("pyramid: <char> must be a single character"));
    };
    if c.is_control() {
        return Err(Error::usage("pyramid: <char> must be printable"));
    }
    let pic = pyramid(h, c)?;
    let text = if p.switch("--trim") { pic.render_trimmed() } else { pic.render_text() };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn cmd_calendar(spec: &CommandSpec, p: &Parsed, out: &mut dyn Write) -> Result<()> {
    let pos = p.expect_positional(spec, 2)?;
    let year: i32 = parse_value("year", &pos[0])?;
    let month: u32 = parse_value("month", &pos[1])?;
    if year < MIN_YEAR || !(1..=12).contains(&month) {
        return Err(Error::usage(format!("calendar: need year >= {MIN_YEAR} and month 1..12")));
    }
    let pic = calendric_month(CalendricSpec::new(year, month)?, p.switch("--bold"))?;
    out.write_all(pic.render_trimmed().as_bytes())?;
    Ok(())
}

fn cmd_tabulate(spec: &CommandSpec, p: &Parsed, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<()> {
    let pos = p.expect_positional(spec, 2)?;
    let w: usize = parse_value("w", &pos[0])?;
    let h: usize = parse_value("h", &pos[1])?;
    let gap = p.option("--gap")?.unwrap_or(DEFAULT_GAP);
    if w < 1 || h < 1 {
        return Err(Error::usage("tabulate: w and h must be at least 1"));
    }
    let params = TabulationParams::with_gap(w, h, gap)?;
    let mut input = String::new();
    stdin.read_to_string(&mut input)?;
    let overflow = if p.switch("--force") { Overflow::Permit } else { Overflow::Reject };
    let text = tabulate(&TextBlock::new(input), params, overflow)?;
    let text = if p.switch("--raw") { text } else { strip_trailing(&text) };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn cmd_dragon(spec: &CommandSpec, p: &Parsed, out: &mut dyn Write) -> Result<()> {
    let pos = p.expect_positional(spec, 1)?;
    let depth: u32 = parse_value("depth", &pos[0])?;
    let color = p.option::<NamedColor>("--color")?.unwrap_or(NamedColor::Black);
    let target: Option<PathBuf> = p.option("--out")?;
    let format = target.as_deref().map(ImageFormat::from_path).transpose()?;
    let spec = DragonSpec::unit(depth, color);
    match target {
        None => {
            let segments = segment_count(depth)?;
            writeln!(
                out,
                "depth {depth}: {segments} segments of length {}, {} intermediate points",
                0.5f64.powi(depth as i32),
                dragon_point_count(depth)?
            )?;
        }
        Some(path) => {
            if depth > MAX_DEPTH {
                return Err(pictura_core::Error::Capacity { depth, max: MAX_DEPTH }.into());
            }
            let (xs, ys) = default_window();
            let mut cv = Canvas::new(512, 512, xs, ys)?;
            cv.set_recording(format == Some(ImageFormat::Svg));
            let drawn = draw_dragon(&mut cv, &spec)?;
            write_canvas(&path, &cv)?;
            writeln!(out, "{drawn} segments -> {}", path.display())?;
        }
    }
    Ok(())
}

fn cmd_movingcircle(spec: &CommandSpec, p: &Parsed, out: &mut dyn Write) -> Result<()> {
    let pos = p.expect_positional(spec, 4)?;
    let nums = pos.iter().map(|s| parse_value::<f64>("circle parameter", s)).collect::<Result<Vec<_>>>()?;
    let sampler = match p.options.get("--sampler") {
        None => Sampler::Rectangular,
        Some(s) => s.parse().map_err(|_| Error::usage(format!("--sampler: unknown sampler {s:?}")))?,
    };
    let mut params = MovingCircle::new(nums[0], nums[1], nums[2], nums[3], sampler);
    params.frames = p.option("--frames")?.unwrap_or(1);
    params.seed = p.option("--seed")?.unwrap_or(0);
    let dir: PathBuf = p.option("--out")?.unwrap_or_else(|| PathBuf::from("frames"));
    let (frames, manifest) = write_frames(&dir, &params)?;
    for (frame, name) in frames.iter().zip(&manifest.frames) {
        let c = frame.moving.center();
        writeln!(
            out,
            "{} centre ({:.6}, {:.6}) after {} attempt(s)",
            dir.join(name).display(),
            c.x(),
            c.y(),
            frame.attempts
        )?;
    }
    Ok(())
}

fn cmd_fill(spec: &CommandSpec, p: &Parsed, out: &mut dyn Write) -> Result<()> {
    p.expect_positional(spec, 0)?;
    let method: String = p.required("--method")?;
    let radius: f64 = p.required("--radius")?;
    let path: PathBuf = p.required("--out")?;
    ImageFormat::from_path(&path)?;
    let rings = p.option("--rings")?;
    let chords = p.option("--chords")?;
    let concentric = match method.as_str() {
        "radial" if rings.is_none() && chords.is_none() => false,
        "radial" => return Err(Error::usage("--rings and --chords apply to the concentric method only")),
        "concentric" => true,
        other => return Err(Error::usage(format!("--method: unknown method {other:?}"))),
    };
    let mut cv = bench::fill_canvas()?;
    let circle = Circle::new(radius, Point::new(50.0, 50.0)?, NamedColor::Black)?;
    cv.set_recording(path.extension().is_some_and(|e| e.eq_ignore_ascii_case("svg")));
    let lines = if concentric {
        cv.fill_circle_concentric(&circle, rings.unwrap_or(FILL_RINGS), chords.unwrap_or(FILL_CHORDS))?
    } else {
        cv.fill_circle_radial(&circle)
    };
    write_canvas(&path, &cv)?;
    writeln!(out, "{lines}")?;
    Ok(())
}

fn cmd_bench(spec: &CommandSpec, p: &Parsed, out: &mut dyn Write) -> Result<()> {
    let pos = p.expect_positional(spec, 1)?;
    let reps: usize = p.option("--reps")?.unwrap_or(DEFAULT_REPS);
    if reps < 1 {
        return Err(Error::usage("--reps must be at least 1"));
    }
    let seed: u64 = p.option("--seed")?.unwrap_or(0);
    let xs = p.options.get("--xs").map(|s| parse_list("--xs", s)).transpose()?;
    let plot: Option<PathBuf> = p.option("--plot")?;
    if let Some(path) = &plot {
        if ImageFormat::from_path(path)? != ImageFormat::Ppm {
            return Err(Error::usage("--plot must name a .ppm file"));
        }
    }
    let table: SampleTable = match pos[0].as_str() {
        "fib" => {
            let ns = xs.unwrap_or_else(|| bench::DEFAULT_FIB_NS.to_vec());
            if ns.iter().any(|&n| n > MAX_N as f64) {
                return Err(Error::usage(format!("--xs: Fibonacci index above {MAX_N}")));
            }
            bench::bench_fib(&ns, reps)?
        }
        "fill" => bench::bench_fill(&xs.unwrap_or_else(|| bench::DEFAULT_FILL_RADII.to_vec()), reps)?,
        "sort" => bench::bench_sorts(&xs.unwrap_or_else(|| bench::DEFAULT_SORT_SIZES.to_vec()), seed, reps)?,
        other => return Err(Error::usage(format!("bench: unknown family {other:?} (fib, fill or sort)"))),
    };
    let csv = table.to_csv();
    match p.option::<PathBuf>("--csv")? {
        Some(path) => write_bytes(&path, csv.as_bytes())?,
        None => out.write_all(csv.as_bytes())?,
    }
    if let Some(path) = plot {
        write_canvas(&path, &plot_series(&table, 640, 480)?)?;
    }
    Ok(())
}

/// Ring centres from left to right, alternating between the top row
/// (y = 55) and the bottom row (y = 45).
pub const RING_CENTRES: [(f64, f64); 5] = [(30.0, 55.0), (40.0, 45.0), (50.0, 55.0), (60.0, 45.0), (70.0, 55.0)];
pub const RING_COLORS: [NamedColor; 5] =
    [NamedColor::Blue, NamedColor::Yellow, NamedColor::Black, NamedColor::Green, NamedColor::Red];
pub const RING_RADIUS: f64 = 9.0;
pub const RING_PEN_RADIUS: f64 = 0.01;

/// The five rings on a 512x512 canvas over `0..100`.
pub fn draw_rings(outline_only: bool) -> pictura_core::Result<Canvas> {
    let mut cv = Canvas::with_default_scale(512, 512)?;
    if !outline_only {
        cv.set_pen_radius(RING_PEN_RADIUS)?;
    }
    for (&(x, y), &color) in RING_CENTRES.iter().zip(&RING_COLORS) {
        cv.draw_circle_outline(&Circle::new(RING_RADIUS, Point::new(x, y)?, color)?);
    }
    Ok(cv)
}

fn cmd_rings(spec: &CommandSpec, p: &Parsed, out: &mut dyn Write) -> Result<()> {
    p.expect_positional(spec, 0)?;
    let path: PathBuf = p.required("--out")?;
    ImageFormat::from_path(&path)?;
    let cv = draw_rings(p.switch("--outline-only"))?;
    write_canvas(&path, &cv)?;
    writeln!(out, "{} rings -> {}", RING_CENTRES.len(), path.display())?;
    Ok(())
}
