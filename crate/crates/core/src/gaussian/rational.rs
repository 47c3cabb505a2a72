use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{gcd, GaussianInt};
use crate::{Error, Result};

/// A reduced quotient `num / den` of Gaussian integers.
///
/// `gcd(num, den)` is a unit and `den` is a canonical associate (`re > 0`,
/// `im >= 0`), so two values are equal exactly when their fields are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    num: GaussianInt,
    den: GaussianInt,
}

impl GaussianRational {
    pub fn new(num: GaussianInt, den: GaussianInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd(&num, &den)?;
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let (den, u) = den.canonical_associate()?;
        Ok(GaussianRational { num: num.mul_unit(u), den })
    }

    pub fn zero() -> Self {
        Self::from_int(GaussianInt::zero())
    }

    pub fn one() -> Self {
        Self::from_int(GaussianInt::one())
    }

    pub fn from_int(z: GaussianInt) -> Self {
        GaussianRational { num: z, den: GaussianInt::one() }
    }

    /// `re + im*i` from rational coordinates.
    pub fn from_parts(re: &BigRational, im: &BigRational) -> Self {
        let l = re.denom().lcm(im.denom());
        let num = GaussianInt::new(re.numer() * (&l / re.denom()), im.numer() * (&l / im.denom()));
        Self::new(num, GaussianInt::new(l, 0)).expect("lcm of denominators is nonzero")
    }

    /// Shorthand for `a/b + (c/d) i` with machine integers.
    pub fn from_fractions(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if b == 0 || d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(&BigRational::new(a.into(), b.into()), &BigRational::new(c.into(), d.into())))
    }

    pub fn num(&self) -> &GaussianInt {
        &self.num
    }

    pub fn den(&self) -> &GaussianInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value lies in `Z[i]`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one_gaussian()
    }

    /// The value as a Gaussian integer, if it is one.
    pub fn to_integer(&self) -> Option<GaussianInt> {
        self.is_integral().then(|| self.num.clone())
    }

    /// Writes the value as `X / n` with `X` in `Z[i]` and the smallest positive
    /// rational integer `n`.
    pub fn over_integer(&self) -> (GaussianInt, BigInt) {
        let x = &self.num * &self.den.conj();
        let n = self.den.norm();
        let g = x.re().gcd(x.im()).gcd(&n);
        (GaussianInt::new(x.re() / &g, x.im() / &g), n / g)
    }

    pub fn re(&self) -> BigRational {
        let (x, n) = self.over_integer();
        BigRational::new(x.re().clone(), n)
    }

    pub fn im(&self) -> BigRational {
        let (x, n) = self.over_integer();
        BigRational::new(x.im().clone(), n)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.num.conj(), self.den.conj()).expect("nonzero denominator")
    }

    pub fn checked_div(&self, rhs: &GaussianRational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn mul_int(&self, z: &GaussianInt) -> Self {
        Self::new(&self.num * z, self.den.clone()).expect("nonzero denominator")
    }

    /// Splits off the nearest lattice point: returns `(k, r)` with `self = k + r`
    /// and both coordinates of `r` in `(-1/2, 1/2]`.
    pub fn split_lattice(&self) -> (GaussianInt, GaussianRational) {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let nearest = |v: BigRational| -> BigInt {
            // largest integer k with v - k in (-1/2, 1/2]
            (v - &half).ceil().to_integer()
        };
        let k = GaussianInt::new(nearest(self.re()), nearest(self.im()));
        let r = self - &GaussianRational::from_int(k.clone());
        (k, r)
    }
}

impl GaussianInt {
    pub(crate) fn is_one_gaussian(&self) -> bool {
        self.re().is_one() && self.im().is_zero()
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { num: -&self.num, den: self.den.clone() }
    }
}

impl From<GaussianInt> for GaussianRational {
    fn from(z: GaussianInt) -> Self {
        Self::from_int(z)
    }
}

fn write_rational(f: &mut dyn fmt::Write, v: &BigRational) -> fmt::Result {
    if v.denom().is_one() {
        write!(f, "{}", v.numer())
    } else {
        write!(f, "{}/{}", v.numer(), v.denom())
    }
}

/// Coordinate form `a/b+c/di`, e.g. `2/5+1/5i`, `-1/2`, `1/3i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::gaussian::padded(f, |w| self.write_plain(w))
    }
}

impl GaussianRational {
    fn write_plain(&self, f: &mut dyn fmt::Write) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        if im.is_zero() {
            return write_rational(f, &re);
        }
        if !re.is_zero() {
            write_rational(f, &re)?;
            if im.is_positive() {
                f.write_str("+")?;
            }
        }
        if im.abs().is_one() {
            return f.write_str(if im.is_negative() { "-i" } else { "i" });
        }
        write_rational(f, &im)?;
        f.write_str("i")
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_fractions(a, b, c, d).unwrap()
    }

    #[test]
    fn reduces_to_canonical_denominator() {
        // 1/2 + 1/2 i = 1/(1-i) = i/(1+i)
        let x = q(1, 2, 1, 2);
        assert_eq!(x.den(), &GaussianInt::from_i64(1, 1));
        assert_eq!(x.num(), &GaussianInt::from_i64(0, 1));
        // 2/5 + 1/5 i = i/(1+2i)
        let y = q(2, 5, 1, 5);
        assert_eq!(y.den(), &GaussianInt::from_i64(1, 2));
        assert_eq!(y.num(), &GaussianInt::from_i64(0, 1));
        let same = GaussianRational::new(GaussianInt::from_i64(2, 1), GaussianInt::from_i64(5, 0)).unwrap();
        assert_eq!(same, y);
    }

    #[test]
    fn reduction_is_idempotent() {
        let x = GaussianRational::new(GaussianInt::from_i64(6, -4), GaussianInt::from_i64(-2, 8)).unwrap();
        let again = GaussianRational::new(x.num().clone(), x.den().clone()).unwrap();
        assert_eq!(x, again);
    }

    #[test]
    fn coordinates_and_display() {
        let x = q(-1, 2, -1, 2);
        assert_eq!(x.to_string(), "-1/2-1/2i");
        assert_eq!(q(2, 5, 1, 5).to_string(), "2/5+1/5i");
        assert_eq!(q(1, 3, 0, 1).to_string(), "1/3");
        assert_eq!(q(0, 1, 1, 3).to_string(), "1/3i");
        assert_eq!(q(0, 1, -1, 1).to_string(), "-i");
        assert_eq!(q(0, 1, 0, 1).to_string(), "0");
    }

    #[test]
    fn split_lattice_lands_in_half_open_cell() {
        let (k, r) = q(-1, 2, -1, 2).split_lattice();
        assert_eq!(k, GaussianInt::from_i64(-1, -1));
        assert_eq!(r, q(1, 2, 1, 2));
        let (k, r) = q(7, 3, -9, 5).split_lattice();
        assert_eq!(&GaussianRational::from_int(k) + &r, q(7, 3, -9, 5));
        assert_eq!(r, q(1, 3, 1, 5));
    }

    #[test]
    fn arithmetic() {
        let a = q(1, 2, 1, 3);
        let b = q(-2, 7, 5, 4);
        let prod = &a * &b;
        assert_eq!(prod.checked_div(&b).unwrap(), a);
        assert_eq!(&(&a + &b) - &b, a);
        assert!(a.checked_div(&GaussianRational::zero()).is_err());
        assert_eq!(a.conj().conj(), a);
    }
}
