//! Brute-force geometric checks of shifted-lattice intersections.
//!
//! Nothing here uses the membership lemmas of [`crate::shifted`]. A window
//! point `x + g` is tested against `S(x + Z[i])` directly: with
//! `S w = eps z / conj(z) * sigma(w)` (`sigma` is conjugation for reflections),
//! `x + g ∈ S(x + Z[i])` iff `conj(z)(x + g) - eps z sigma(x) ∈ eps z Z[i]`.
//! Denominators are cleared once and each row of the window is scanned with
//! residues modulo the norm of the divisor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::coincidence::Isometry;
use crate::gaussian::{GaussianInt, GaussianRational};
use crate::shifted::ShiftedCsl;
use crate::{Error, Result};

const MAX_RADIUS: u32 = 10_000;

/// The square of lattice offsets `g` with `|re g|, |im g| <= radius`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    radius: u32,
}

impl Window {
    pub fn new(radius: u32) -> Result<Self> {
        if radius == 0 || radius > MAX_RADIUS {
            return Err(Error::BadRadius(radius));
        }
        Ok(Window { radius })
    }

    /// Radius `3 * sigma`, enough for a full fundamental domain of the CSL.
    pub fn for_isometry(s: &Isometry) -> Result<Self> {
        let r = (s.sigma() * 3u32).to_u32().unwrap_or(u32::MAX);
        Self::new(r)
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Number of lattice offsets in the window.
    pub fn census(&self) -> u64 {
        let side = 2 * self.radius as u64 + 1;
        side * side
    }

    fn r(&self) -> i64 {
        self.radius as i64
    }
}

/// All window offsets `g = u + v i`, in `(u, v)` order, with
/// `divisor | base + step * g`.
fn scan_divisible(base: &GaussianInt, step: &GaussianInt, divisor: &GaussianInt, w: &Window) -> Vec<(i64, i64)> {
    // d | n  iff  n * conj(d) ≡ 0 (mod norm(d)) componentwise.
    let modulus = divisor.norm();
    let c0 = base * &divisor.conj();
    let c1 = step * &divisor.conj();
    let c2 = c1.mul_unit(crate::Unit::I);
    match modulus.to_i64().filter(|m| *m < 1 << 61) {
        Some(m) => {
            let red = |v: &BigInt| v.mod_floor(&modulus).to_i64().expect("residue below modulus");
            let pair = |z: &GaussianInt| (red(z.re()), red(z.im()));
            scan_small(pair(&c0), pair(&c1), pair(&c2), m, w)
        }
        None => scan_big(&c0, &c1, &c2, &modulus, w),
    }
}

fn scan_small(c0: (i64, i64), c1: (i64, i64), c2: (i64, i64), m: i64, w: &Window) -> Vec<(i64, i64)> {
    let r = w.r();
    let add = |a: (i64, i64), b: (i64, i64)| ((a.0 + b.0) % m, (a.1 + b.1) % m);
    let times = |k: i64, a: (i64, i64)| {
        let k = k.rem_euclid(m) as i128;
        (((a.0 as i128 * k) % m as i128) as i64, ((a.1 as i128 * k) % m as i128) as i64)
    };
    let mut hits = Vec::new();
    let mut row = add(c0, times(-r, c1));
    let col_start = times(-r, c2);
    for u in -r..=r {
        let mut val = add(row, col_start);
        for v in -r..=r {
            if val == (0, 0) {
                hits.push((u, v));
            }
            val = add(val, c2);
        }
        row = add(row, c1);
    }
    hits
}

fn scan_big(c0: &GaussianInt, c1: &GaussianInt, c2: &GaussianInt, m: &BigInt, w: &Window) -> Vec<(i64, i64)> {
    let r = w.r();
    let mut hits = Vec::new();
    for u in -r..=r {
        for v in -r..=r {
            let val = c0 + &c1.scale(&BigInt::from(u)) + c2.scale(&BigInt::from(v));
            if val.re().mod_floor(m).is_zero() && val.im().mod_floor(m).is_zero() {
                hits.push((u, v));
            }
        }
    }
    hits
}

/// Offsets `g` in the window with `x + g ∈ S(x + Z[i])`, ordered by `(re, im)`.
pub fn intersection_offsets(x: &GaussianRational, s: &Isometry, w: &Window) -> Vec<GaussianInt> {
    let (num, n) = x.over_integer();
    let moved = if s.is_reflection() { num.conj() } else { num.clone() };
    let zbar = s.z().conj();
    let ez = s.z().mul_unit(s.eps());
    let base = &zbar * &num - &ez * &moved;
    let step = zbar.scale(&n);
    let divisor = ez.scale(&n);
    scan_divisible(&base, &step, &divisor, w).into_iter().map(|(u, v)| GaussianInt::from_i64(u, v)).collect()
}

/// The points of `(x + Z[i]) ∩ S(x + Z[i])` of the form `x + g` with `g` in
/// the window, ordered by `(re, im)`.
pub fn brute_force_intersection(x: &GaussianRational, s: &Isometry, w: &Window) -> Vec<GaussianRational> {
    intersection_offsets(x, s, w).into_iter().map(|g| x + &GaussianRational::from_int(g)).collect()
}

/// Echelon basis `{(a, b), (0, d)}` of a sublattice of `Z^2`.
#[derive(Default)]
struct Echelon {
    lead: Option<(i128, i128)>,
    d: i128,
}

impl Echelon {
    fn insert(&mut self, (x, y): (i128, i128)) {
        if x == 0 {
            self.d = self.d.gcd(&y);
        } else if let Some((a, b)) = self.lead {
            let e = a.extended_gcd(&x);
            let g = e.gcd;
            self.lead = Some((g, e.x * b + e.y * y));
            self.d = self.d.gcd(&((x / g) * b - (a / g) * y));
        } else {
            self.lead = Some(if x > 0 { (x, y) } else { (-x, -y) });
        }
        if let (Some((_, b)), true) = (self.lead.as_mut(), self.d != 0) {
            *b = b.rem_euclid(self.d);
        }
    }

    fn has_full_rank(&self) -> bool {
        self.lead.is_some() && self.d != 0
    }

    fn contains(&self, (x, y): (i128, i128)) -> bool {
        let rest = match self.lead {
            None if x != 0 => return false,
            None => y,
            Some((a, b)) => {
                if x % a != 0 {
                    return false;
                }
                y - (x / a) * b
            }
        };
        if self.d == 0 {
            rest == 0
        } else {
            rest % self.d == 0
        }
    }
}

fn coords(g: &GaussianInt) -> (i128, i128) {
    (g.re().to_i128().expect("window offset"), g.im().to_i128().expect("window offset"))
}

/// Geometric membership: the intersection is non-empty inside the window and
/// forms one coset of a full-rank sublattice there.
///
/// Errors when the points found do not span two independent directions.
pub fn verify_membership(x: &GaussianRational, s: &Isometry, w: &Window) -> Result<bool> {
    let points = intersection_offsets(x, s, w);
    let Some(first) = points.first() else {
        return Ok(false);
    };
    let origin = coords(first);
    let mut lattice = Echelon::default();
    for p in &points[1..] {
        let (u, v) = coords(p);
        lattice.insert((u - origin.0, v - origin.1));
    }
    if !lattice.has_full_rank() {
        return Err(Error::WindowTooSmall { radius: w.radius });
    }
    let r = w.r() as i128;
    let mut coset_size = 0usize;
    for u in -r..=r {
        for v in -r..=r {
            if lattice.contains((u - origin.0, v - origin.1)) {
                coset_size += 1;
            }
        }
    }
    Ok(coset_size == points.len())
}

/// Exact point-set equality, inside the window, between the brute-force
/// intersection and the claimed coset `x + t + (z)`.
pub fn verify_coset(c: &ShiftedCsl, w: &Window) -> bool {
    let found = intersection_offsets(c.shift(), c.isometry(), w);
    let claimed: Vec<GaussianInt> = scan_divisible(&(-c.translation()), &GaussianInt::one(), c.generator(), w)
        .into_iter()
        .map(|(u, v)| GaussianInt::from_i64(u, v))
        .collect();
    found == claimed
}
