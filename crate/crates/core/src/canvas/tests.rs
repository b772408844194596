use super::*;
use crate::Error;
use alloc::collections::BTreeSet;

fn pt(x: f64, y: f64) -> Point {
    Point::new(x, y).unwrap()
}

fn default_canvas() -> Canvas {
    Canvas::with_default_scale(512, 512).unwrap()
}

fn painted(cv: &Canvas) -> BTreeSet<(usize, usize)> {
    let white = NamedColor::White.rgb();
    let mut set = BTreeSet::new();
    for row in 0..cv.height() {
        for col in 0..cv.width() {
            if cv.pixel(col, row) != white {
                set.insert((col, row));
            }
        }
    }
    set
}

/// Pixels whose centres lie inside the analytic disc.
fn ideal_disc(cv: &Canvas, c: &Circle) -> BTreeSet<(usize, usize)> {
    let (cx, cy) = cv.to_pixel(c.center().x(), c.center().y());
    let (rx, _) = cv.pixel_radii(c.radius());
    let mut set = BTreeSet::new();
    for row in 0..cv.height() {
        for col in 0..cv.width() {
            let (dx, dy) = (col as f64 - cx, row as f64 - cy);
            if dx * dx + dy * dy <= rx * rx {
                set.insert((col, row));
            }
        }
    }
    set
}

#[test]
fn fresh_canvas_is_white() {
    let cv = default_canvas();
    assert!(cv.pixels().iter().all(|&p| p == NamedColor::White.rgb()));
    assert_eq!(cv.pen_color(), NamedColor::Black);
    assert_eq!(cv.pen_radius(), 0.002);
    assert_eq!(cv.primitive_count(), 0);

    let unit = Range::new(0.0, 1.0).unwrap();
    let one = Canvas::new(1, 1, unit, unit).unwrap();
    assert_eq!(one.pixels(), &[NamedColor::White.rgb()]);
}

#[test]
fn bad_construction() {
    assert!(matches!(Range::new(1.0, 1.0), Err(Error::Range { .. })));
    assert!(matches!(Range::new(2.0, 1.0), Err(Error::Range { .. })));
    assert!(Range::new(0.0, f64::INFINITY).is_err());
    let unit = Range::new(0.0, 1.0).unwrap();
    assert!(Canvas::new(0, 5, unit, unit).is_err());
    assert!(Canvas::new(5, 0, unit, unit).is_err());
}

#[test]
fn mapping_is_exact_at_the_corners() {
    let cv = default_canvas();
    assert_eq!(cv.to_pixel(0.0, 0.0), (0.0, 511.0));
    assert_eq!(cv.to_pixel(100.0, 100.0), (511.0, 0.0));
    assert_eq!(cv.to_pixel(50.0, 50.0), (255.5, 255.5));
}

#[test]
fn ppm_golden_bytes() {
    let unit = Range::new(0.0, 1.0).unwrap();
    let one = Canvas::new(1, 1, unit, unit).unwrap();
    assert_eq!(one.to_ppm(), b"P6\n1 1\n255\n\xff\xff\xff");

    let mut two = Canvas::new(2, 1, unit, unit).unwrap();
    two.set_pen_radius(0.0).unwrap();
    two.point(0.0, 0.5).unwrap();
    assert_eq!(two.to_ppm(), b"P6\n2 1\n255\n\x00\x00\x00\xff\xff\xff");
    assert_eq!(two.to_ppm(), two.to_ppm());
}

#[test]
fn diagonal_line() {
    let mut cv = default_canvas();
    cv.line(0.0, 0.0, 100.0, 100.0).unwrap();
    let black = NamedColor::Black.rgb();
    for i in [0, 100, 255, 400, 511] {
        assert_eq!(cv.pixel(i, 511 - i), black, "diagonal pixel {i}");
    }
    assert_eq!(cv.pixel(0, 0), NamedColor::White.rgb());
    assert_eq!(cv.primitive_count(), 1);
}

#[test]
fn off_canvas_point_still_counts() {
    let mut cv = default_canvas();
    cv.point(-50.0, 500.0).unwrap();
    assert_eq!(painted(&cv).len(), 0);
    assert_eq!(cv.primitive_count(), 1);
    assert!(matches!(cv.point(f64::NAN, 0.0), Err(Error::Numeric(_))));
    assert_eq!(cv.primitive_count(), 1);
}

#[test]
fn repeated_draws_are_idempotent() {
    let mut once = default_canvas();
    once.line(10.0, 20.0, 80.0, 35.0).unwrap();
    let mut twice = default_canvas();
    twice.line(10.0, 20.0, 80.0, 35.0).unwrap();
    twice.line(10.0, 20.0, 80.0, 35.0).unwrap();
    assert_eq!(once.pixels(), twice.pixels());
    assert_eq!(twice.primitive_count(), 2);
}

#[test]
fn clipped_walk_matches_full_walk() {
    // Reference: stamp at every step of the unclipped walk.
    fn full_walk(cv: &mut Canvas, a: (f64, f64), b: (f64, f64)) {
        let r = cv.stroke_radius();
        let rgb = cv.pen_color().rgb();
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let steps = libm::ceil(libm::fmax(libm::fabs(dx), libm::fabs(dy)));
        let n = steps as u64;
        for i in 0..=n {
            let t = i as f64 / steps;
            let p = if i == n { b } else { (a.0 + dx * t, a.1 + dy * t) };
            cv.stamp(p.0, p.1, r, rgb);
        }
    }
    for &(x0, y0, x1, y1) in &[
        (-300.0, -200.0, 400.0, 250.0),
        (-10.0, 50.0, 110.0, 50.0),
        (50.0, 150.0, 50.0, -40.0),
        (99.0, 99.0, 5000.0, 7000.0),
        (-20.0, -20.0, -5.0, 120.0),
    ] {
        let mut fast = default_canvas();
        fast.set_pen_radius(0.01).unwrap();
        fast.line(x0, y0, x1, y1).unwrap();
        let mut slow = default_canvas();
        slow.set_pen_radius(0.01).unwrap();
        let a = slow.to_pixel(x0, y0);
        let b = slow.to_pixel(x1, y1);
        full_walk(&mut slow, a, b);
        assert_eq!(fast.pixels(), slow.pixels(), "segment ({x0},{y0})-({x1},{y1})");
    }
}

#[test]
fn huge_off_canvas_line_is_cheap() {
    let mut cv = default_canvas();
    cv.line(-1e12, -1e12, -1e12 + 1.0, 1e12).unwrap();
    assert!(painted(&cv).is_empty());
}

#[test]
fn outline_ring() {
    let mut cv = default_canvas();
    let c = Circle::new(40.0, pt(50.0, 50.0), NamedColor::Blue).unwrap();
    assert_eq!(cv.draw_circle_outline(&c), 360);
    assert_eq!(cv.primitive_count(), 360);
    assert_eq!(cv.pixel(255, 255), NamedColor::White.rgb());
    let (cx, cy) = cv.to_pixel(90.0, 50.0);
    assert_eq!(cv.pixel(cx.round() as usize, cy.round() as usize), NamedColor::Blue.rgb());
    assert_eq!(cv.pen_color(), NamedColor::Blue);
}

#[test]
fn tiny_outline_is_a_point() {
    let mut cv = default_canvas();
    let c = Circle::new(0.1, pt(50.0, 50.0), NamedColor::Red).unwrap();
    assert_eq!(cv.draw_circle_outline(&c), 1);
    assert_eq!(cv.primitive_count(), 1);
    assert!(matches!(cv.primitives(), [Primitive::Point { .. }]));
}

#[test]
fn concentric_outlines_do_not_touch() {
    let mut outer = default_canvas();
    outer.draw_circle_outline(&Circle::new(40.0, pt(50.0, 50.0), NamedColor::Black).unwrap());
    let mut inner = default_canvas();
    inner.draw_circle_outline(&Circle::new(20.0, pt(50.0, 50.0), NamedColor::Black).unwrap());
    let a = painted(&outer);
    let b = painted(&inner);
    assert!(!a.is_empty() && !b.is_empty());
    assert!(a.is_disjoint(&b));
    // Every ring pixel sits within pen reach of its nominal radius.
    let centre = outer.to_pixel(50.0, 50.0);
    let slack = outer.stroke_radius() + 1.5;
    for (set, r) in [(&a, 40.0 * 511.0 / 100.0), (&b, 20.0 * 511.0 / 100.0)] {
        for &(col, row) in set {
            let d = libm::hypot(col as f64 - centre.0, row as f64 - centre.1);
            assert!((d - r).abs() <= slack, "pixel ({col},{row}) at {d} from centre, ring {r}");
        }
    }
}

#[test]
fn radial_fill_counts() {
    for r in [0.01, 0.5, 10.0, 40.0, 1000.0] {
        let mut cv = default_canvas();
        let c = Circle::new(r, pt(50.0, 50.0), NamedColor::Black).unwrap();
        assert_eq!(cv.fill_circle_radial(&c), 180);
        assert_eq!(cv.primitive_count(), 180);
    }
}

#[test]
fn concentric_fill_counts() {
    let c = Circle::new(40.0, pt(50.0, 50.0), NamedColor::Black).unwrap();
    for (rings, chords, total) in [(10, 180, 1800), (40, 180, 7200), (160, 180, 28800), (1, 3, 3)] {
        let mut cv = default_canvas();
        assert_eq!(cv.fill_circle_concentric(&c, rings, chords).unwrap(), total);
        assert_eq!(cv.primitive_count(), total);
    }
    let mut cv = default_canvas();
    assert!(matches!(cv.fill_circle_concentric(&c, 0, 180), Err(Error::Range { .. })));
    assert!(matches!(cv.fill_circle_concentric(&c, 10, 2), Err(Error::Range { .. })));
    assert_eq!(cv.primitive_count(), 0);
}

#[test]
fn small_radial_fill_covers_its_disc() {
    let mut cv = default_canvas();
    let c = Circle::new(0.5, pt(50.0, 50.0), NamedColor::Black).unwrap();
    cv.fill_circle_radial(&c);
    assert!(ideal_disc(&cv, &c).is_subset(&painted(&cv)));
}

#[test]
fn fills_cover_the_disc() {
    let c = Circle::new(40.0, pt(50.0, 50.0), NamedColor::Black).unwrap();
    let mut radial = default_canvas();
    radial.set_pen_radius(0.01).unwrap();
    radial.fill_circle_radial(&c);
    let mut concentric = default_canvas();
    concentric.set_pen_radius(0.01).unwrap();
    concentric.fill_circle_concentric(&c, 160, 180).unwrap();

    let disc = ideal_disc(&radial, &c);
    let r = painted(&radial);
    let k = painted(&concentric);
    let coverage = |set: &BTreeSet<(usize, usize)>| disc.intersection(set).count() as f64 / disc.len() as f64;
    assert!(coverage(&r) >= 0.99, "radial coverage {}", coverage(&r));
    assert!(coverage(&k) >= 0.99, "concentric coverage {}", coverage(&k));
    let diff = r.symmetric_difference(&k).count() as f64;
    assert!(diff < 0.02 * disc.len() as f64, "symmetric difference {diff} of {}", disc.len());
}

#[test]
fn drawing_only_uses_the_pen_color() {
    let mut cv = default_canvas();
    cv.set_pen_color(NamedColor::Red);
    cv.line(5.0, 5.0, 95.0, 60.0).unwrap();
    cv.point(20.0, 80.0).unwrap();
    let ok = [NamedColor::White.rgb(), NamedColor::Red.rgb()];
    assert!(cv.pixels().iter().all(|p| ok.contains(p)));
}

#[test]
fn svg_mirrors_primitives() {
    let mut cv = default_canvas();
    cv.set_pen_radius(0.01).unwrap();
    cv.line(0.0, 0.0, 100.0, 100.0).unwrap();
    cv.set_pen_color(NamedColor::Green);
    cv.point(50.0, 50.0).unwrap();
    let svg = cv.to_svg();
    assert!(svg.starts_with(export::SVG_HEADER));
    assert!(svg.ends_with("</svg>\n"));
    assert_eq!(svg.matches("<line ").count(), 1);
    assert_eq!(svg.matches("<circle ").count(), 1);
    assert!(svg.contains(
        "<line x1=\"0.000\" y1=\"511.000\" x2=\"511.000\" y2=\"0.000\" stroke=\"rgb(0,0,0)\" stroke-width=\"10.240\""
    ));
    assert!(svg.contains("fill=\"rgb(0,255,0)\""));

    cv.set_recording(false);
    cv.line(0.0, 0.0, 1.0, 1.0).unwrap();
    assert_eq!(cv.primitives().len(), 0);
    assert_eq!(cv.primitive_count(), 3);
}

#[test]
fn moving_frames_are_deterministic_and_contained() {
    for sampler in [Sampler::Rectangular, Sampler::Polar] {
        let mut params = MovingCircle::new(50.0, 50.0, 40.0, 8.0, sampler);
        params.frames = 3;
        params.seed = 7;
        params.pixels = 128;
        let a = moving_circle_frames(&params).unwrap();
        let b = moving_circle_frames(&params).unwrap();
        assert_eq!(a.len(), 3);
        for (fa, fb) in a.iter().zip(&b) {
            assert_eq!(fa.canvas.to_ppm(), fb.canvas.to_ppm());
            assert!(fa.fixed.contains_circle(&fa.moving));
            assert_eq!(fa.canvas.primitive_count(), 720);
        }
        assert_ne!(a[0].moving.center(), a[1].moving.center());
    }
}

#[test]
fn impossible_placement() {
    let params = MovingCircle::new(50.0, 50.0, 40.0, 40.0, Sampler::Rectangular);
    assert!(matches!(moving_circle_frames(&params), Err(Error::ImpossiblePlacement { .. })));
    let params = MovingCircle::new(50.0, 50.0, 40.0, 0.0, Sampler::Polar);
    assert!(matches!(moving_circle_frames(&params), Err(Error::Range { .. })));
    assert_eq!("polar".parse::<Sampler>().unwrap(), Sampler::Polar);
    assert!("square".parse::<Sampler>().is_err());
}
