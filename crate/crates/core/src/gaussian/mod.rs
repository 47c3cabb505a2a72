//! Arithmetic in the Gaussian integers `Z[i]` and the Gaussian rationals `Q(i)`.
//!
//! Associates are normalized to the representative with `re > 0` and `im >= 0`,
//! which makes gcds, factorizations and reduced denominators unique.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

mod factor;
mod rational;

pub use factor::{factor, factor_integer, is_prime, split_prime, Factorization};
pub use rational::GaussianRational;

/// An element `re + im*i` of `Z[i]`.
///
/// The derived ordering is lexicographic on `(re, im)`; it is only used to
/// get deterministic output, it has no algebraic meaning.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianInt {
    re: BigInt,
    im: BigInt,
}

/// One of the four units `1, i, -1, -i`, stored as the exponent `k` of `i^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    One,
    I,
    NegOne,
    NegI,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::I, Unit::NegOne, Unit::NegI];

    /// `i^k` for any integer `k`.
    pub fn from_index(k: i64) -> Unit {
        Self::ALL[k.rem_euclid(4) as usize]
    }

    /// The exponent `k` in `0..4` with `self = i^k`.
    pub fn index(self) -> u8 {
        match self {
            Unit::One => 0,
            Unit::I => 1,
            Unit::NegOne => 2,
            Unit::NegI => 3,
        }
    }

    pub fn inverse(self) -> Unit {
        Unit::from_index(-(self.index() as i64))
    }

    /// Complex conjugate; for units this is the inverse.
    pub fn conj(self) -> Unit {
        self.inverse()
    }

    pub fn to_gaussian(self) -> GaussianInt {
        match self {
            Unit::One => GaussianInt::from_i64(1, 0),
            Unit::I => GaussianInt::from_i64(0, 1),
            Unit::NegOne => GaussianInt::from_i64(-1, 0),
            Unit::NegI => GaussianInt::from_i64(0, -1),
        }
    }

    /// Returns the unit equal to `z`, if `z` is one.
    pub fn from_gaussian(z: &GaussianInt) -> Option<Unit> {
        Unit::ALL.into_iter().find(|u| &u.to_gaussian() == z)
    }
}

impl Mul for Unit {
    type Output = Unit;
    // i^j * i^k = i^(j+k)
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Unit) -> Unit {
        Unit::from_index(self.index() as i64 + rhs.index() as i64)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Unit::One => "1",
            Unit::I => "i",
            Unit::NegOne => "-1",
            Unit::NegI => "-i",
        })
    }
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(re, im)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    pub fn i() -> Self {
        Self::from_i64(0, 1)
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn conj(&self) -> Self {
        GaussianInt::new(self.re.clone(), -&self.im)
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GaussianInt::new(&self.re * k, &self.im * k)
    }

    pub fn mul_unit(&self, u: Unit) -> Self {
        match u {
            Unit::One => self.clone(),
            Unit::I => GaussianInt::new(-&self.im, self.re.clone()),
            Unit::NegOne => -self,
            Unit::NegI => GaussianInt::new(self.im.clone(), -&self.re),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianInt::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Division with remainder, rounding the exact quotient to the nearest
    /// Gaussian integer (ties to even, per component). The remainder satisfies
    /// `norm(r) <= norm(d) / 2`.
    pub fn div_rem_nearest(&self, d: &GaussianInt) -> Result<(GaussianInt, GaussianInt)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = d.norm();
        let prod = self * &d.conj();
        let q = GaussianInt::new(round_half_even(&prod.re, &n), round_half_even(&prod.im, &n));
        let r = self - &(&q * d);
        Ok((q, r))
    }

    /// `self / d` if it lies in `Z[i]`.
    pub fn exact_div(&self, d: &GaussianInt) -> Option<GaussianInt> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let prod = self * &d.conj();
        let (qr, rr) = prod.re.div_rem(&n);
        let (qi, ri) = prod.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then(|| GaussianInt::new(qr, qi))
    }

    /// The associate in the quadrant `re > 0, im >= 0`, with the unit `u`
    /// such that `canonical = u * self`.
    pub fn canonical_associate(&self) -> Result<(GaussianInt, Unit)> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        for u in Unit::ALL {
            let w = self.mul_unit(u);
            if w.re.is_positive() && !w.im.is_negative() {
                return Ok((w, u));
            }
        }
        unreachable!("every nonzero Gaussian integer has an associate in the first quadrant")
    }

    /// Canonical associate, with zero mapped to zero.
    pub fn normalized(&self) -> GaussianInt {
        match self.canonical_associate() {
            Ok((w, _)) => w,
            Err(_) => GaussianInt::zero(),
        }
    }
}

/// Nearest integer to `a / n` for `n > 0`, ties to even.
fn round_half_even(a: &BigInt, n: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(n);
    let twice: BigInt = &r * 2;
    match twice.cmp(n) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    }
}

/// Whether `d` divides `z` in `Z[i]`.
pub fn divides(d: &GaussianInt, z: &GaussianInt) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(z.exact_div(d).is_some())
}

/// Greatest common divisor, normalized to the canonical associate.
pub fn gcd(z: &GaussianInt, w: &GaussianInt) -> Result<GaussianInt> {
    extended_gcd(z, w).map(|(g, _, _)| g)
}

/// Returns `(g, u, v)` with `u*z + v*w = g` and `g` the canonical gcd.
///
/// The argument of smaller norm is used as the first divisor, so that
/// `extended_gcd(z, z)` and `extended_gcd(1, w)` return `v = 0`.
pub fn extended_gcd(z: &GaussianInt, w: &GaussianInt) -> Result<(GaussianInt, GaussianInt, GaussianInt)> {
    if z.is_zero() && w.is_zero() {
        return Err(Error::ZeroInput);
    }
    // Rows are (remainder, coefficient of z, coefficient of w).
    let z_row = (z.clone(), GaussianInt::one(), GaussianInt::zero());
    let w_row = (w.clone(), GaussianInt::zero(), GaussianInt::one());
    let (mut prev, mut cur) =
        if z.is_zero() || (!w.is_zero() && z.norm() > w.norm()) { (z_row, w_row) } else { (w_row, z_row) };
    while !cur.0.is_zero() {
        let (q, r) = prev.0.div_rem_nearest(&cur.0)?;
        let next = (r, &prev.1 - &(&q * &cur.1), &prev.2 - &(&q * &cur.2));
        prev = std::mem::replace(&mut cur, next);
    }
    let (g, u, v) = prev;
    let (g_canon, unit) = g.canonical_associate()?;
    Ok((g_canon, u.mul_unit(unit), v.mul_unit(unit)))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a> $trait<&'a GaussianInt> for &'a GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: &'a GaussianInt) -> GaussianInt {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<GaussianInt> for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: GaussianInt) -> GaussianInt {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussianInt> for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: &'a GaussianInt) -> GaussianInt {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<GaussianInt> for &'a GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: GaussianInt) -> GaussianInt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianInt::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| GaussianInt::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, |a, b| GaussianInt::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re));

impl AddAssign<&GaussianInt> for GaussianInt {
    fn add_assign(&mut self, rhs: &GaussianInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}

impl From<i64> for GaussianInt {
    fn from(n: i64) -> Self {
        GaussianInt::from_i64(n, 0)
    }
}

impl From<BigInt> for GaussianInt {
    fn from(n: BigInt) -> Self {
        GaussianInt::new(n, 0)
    }
}

impl From<Unit> for GaussianInt {
    fn from(u: Unit) -> Self {
        u.to_gaussian()
    }
}

/// Writes `a+bi` in the usual compact form: `0`, `3`, `i`, `-i`, `2+i`, `1-2i`, `5i`.
impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::gaussian::padded(f, |w| self.write_plain(w))
    }
}

impl GaussianInt {
    fn write_plain(&self, f: &mut dyn fmt::Write) -> fmt::Result {
        let im_part = |im: &BigInt| -> String {
            let mag = im.abs();
            if mag.is_one() {
                "i".to_string()
            } else {
                format!("{mag}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                let sign = if self.im.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}", im_part(&self.im))
            }
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{sign}{}", self.re, im_part(&self.im))
            }
        }
    }
}

/// Runs `write` and pads the result when the formatter asks for a width.
pub(crate) fn padded(
    f: &mut fmt::Formatter<'_>,
    write: impl FnOnce(&mut dyn fmt::Write) -> fmt::Result,
) -> fmt::Result {
    if f.width().is_none() {
        return write(f);
    }
    let mut s = String::new();
    write(&mut s)?;
    f.pad(&s)
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
