//! Deterministic SVG pictures of a shifted lattice, its image and their
//! common coset.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::coincidence::Isometry;
use crate::gaussian::{GaussianInt, GaussianRational};
use crate::oracle::{brute_force_intersection, Window};
use crate::shifted::reduce_shift;

const UNIT: f64 = 24.0;
const MARGIN: f64 = 16.0;
const INSET: f64 = 160.0;

fn coords(w: &GaussianRational) -> (f64, f64) {
    let re = w.re().to_f64().unwrap_or(f64::NAN);
    let im = w.im().to_f64().unwrap_or(f64::NAN);
    (re, im)
}

struct Frame {
    half: f64,
}

impl Frame {
    fn px(&self, (re, im): (f64, f64)) -> (f64, f64) {
        (MARGIN + (re + self.half) * UNIT, MARGIN + (self.half - im) * UNIT)
    }

    fn visible(&self, (re, im): (f64, f64)) -> bool {
        re.abs() <= self.half && im.abs() <= self.half
    }

    fn side(&self) -> f64 {
        2.0 * self.half * UNIT + 2.0 * MARGIN
    }
}

fn circle(out: &mut String, (cx, cy): (f64, f64), r: f64) {
    writeln!(out, r#"    <circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.1}"/>"#).unwrap();
}

/// Draws `x + Z[i]` inside the window, the image `S(x + Z[i])`, the points
/// they share, and an inset with the shift reduced into the triangle
/// `0 <= b <= a <= 1/2`.
pub fn render(x: &GaussianRational, s: &Isometry, w: &Window) -> String {
    let r = w.radius() as i64;
    let frame = Frame { half: r as f64 + 1.0 };
    let side = frame.side();
    let width = side + INSET + 2.0 * MARGIN;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{side:.0}" viewBox="0 0 {width:.0} {side:.0}">"#
    )
    .unwrap();
    writeln!(out, "  <title>x = {x}, {s}, index {}</title>", s.sigma()).unwrap();
    writeln!(out, r##"  <rect x="0" y="0" width="{width:.0}" height="{side:.0}" fill="#ffffff"/>"##).unwrap();

    out.push_str("  <g id=\"lattice\" fill=\"#9aa0a6\">\n");
    for u in -r..=r {
        for v in -r..=r {
            let p = x + &GaussianRational::from_int(GaussianInt::from_i64(u, v));
            circle(&mut out, frame.px(coords(&p)), 2.5);
        }
    }
    out.push_str("  </g>\n");

    // |S w| = |w|, so preimages of visible points lie within half * sqrt 2
    out.push_str("  <g id=\"rotated\" fill=\"none\" stroke=\"#1a73e8\" stroke-width=\"1.2\">\n");
    let reach = (frame.half * std::f64::consts::SQRT_2).ceil() as i64 + 1;
    let mut image = Vec::new();
    for u in -reach..=reach {
        for v in -reach..=reach {
            let p = coords(&s.apply(&(x + &GaussianRational::from_int(GaussianInt::from_i64(u, v)))));
            if frame.visible(p) {
                image.push(frame.px(p));
            }
        }
    }
    image.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    for p in image {
        circle(&mut out, p, 4.5);
    }
    out.push_str("  </g>\n");

    out.push_str("  <g id=\"csl\" fill=\"#d93025\">\n");
    for p in brute_force_intersection(x, s, w) {
        circle(&mut out, frame.px(coords(&p)), 3.5);
    }
    out.push_str("  </g>\n");

    let (y, _) = reduce_shift(x);
    let (ya, yb) = coords(&y);
    let scale = INSET / 0.5 * 0.8;
    let ox = side + MARGIN;
    let oy = MARGIN + INSET * 0.9;
    writeln!(out, r#"  <g id="fundamental-domain" transform="translate({ox:.2},{oy:.2})">"#).unwrap();
    writeln!(
        out,
        r##"    <polygon points="0,0 {a:.2},0 {a:.2},{b:.2}" fill="#f1f3f4" stroke="#202124" stroke-width="1"/>"##,
        a = 0.5 * scale,
        b = -0.5 * scale
    )
    .unwrap();
    writeln!(out, r##"    <circle cx="{:.2}" cy="{:.2}" r="4.0" fill="#d93025"/>"##, ya * scale, -yb * scale).unwrap();
    writeln!(out, r#"    <text x="0" y="18" font-family="monospace" font-size="12">x ~ {y}</text>"#).unwrap();
    out.push_str("  </g>\n</svg>\n");
    out
}
