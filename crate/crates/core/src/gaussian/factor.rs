use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{GaussianInt, Unit};
use crate::{Error, Result};

/// Complete factorization `unit * prod(prime^exp)` of a nonzero Gaussian integer.
///
/// Primes are canonical associates sorted by `(norm, re, im)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Unit,
    pub factors: Vec<(GaussianInt, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> GaussianInt {
        self.factors.iter().fold(self.unit.to_gaussian(), |acc, (p, e)| acc * p.pow(*e))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.unit != Unit::One || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for (p, e) in &self.factors {
            if *e == 1 {
                parts.push(format!("({p})"));
            } else {
                parts.push(format!("({p})^{e}"));
            }
        }
        f.write_str(&parts.join(" * "))
    }
}

/// Trial-division factorization of `|n|` into rational primes, ascending.
/// Returns an empty list for `n = ±1`; zero is rejected.
pub fn factor_integer(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut n = n.abs();
    if let Some(small) = n.to_u64() {
        return Ok(factor_u64(small).into_iter().map(|(p, e)| (BigInt::from(p), e)).collect());
    }
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    Ok(out)
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    matches!(factor_integer(n).as_deref(), Ok([(_, 1)]))
}

/// The canonical Gaussian prime `w` with `norm(w) = p` for a rational prime
/// `p ≡ 1 (mod 4)`.
///
/// Searches `a` from `ceil(sqrt(p/2))` to `floor(sqrt(p))` for `p - a^2` a
/// square; the hit `a + b*i` has `a > b > 0` and is already canonical.
pub fn split_prime(p: &BigInt) -> Result<GaussianInt> {
    if p.mod_floor(&BigInt::from(4)) != BigInt::one() || !is_prime(p) {
        return Err(Error::NotSplitPrime(p.clone()));
    }
    let mut a = (p / 2u32).sqrt();
    while &a * &a * 2u32 < *p {
        a += 1;
    }
    let top = p.sqrt();
    while a <= top {
        let rest = p - &a * &a;
        let b = rest.sqrt();
        if &b * &b == rest {
            return Ok(GaussianInt::new(a, b));
        }
        a += 1;
    }
    unreachable!("a prime p = 1 mod 4 is a sum of two squares")
}

/// Factors `z` by factoring `norm(z)` over `Z` and lifting each rational prime.
pub fn factor(z: &GaussianInt) -> Result<Factorization> {
    if z.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut rest = z.clone();
    let mut factors = Vec::new();
    let mut take = |prime: GaussianInt, max: u32, rest: &mut GaussianInt| {
        let mut e = 0;
        while e < max {
            match rest.exact_div(&prime) {
                Some(q) => {
                    *rest = q;
                    e += 1;
                }
                None => break,
            }
        }
        if e > 0 {
            factors.push((prime, e));
        }
        e
    };
    let four = BigInt::from(4);
    for (p, k) in factor_integer(&z.norm())? {
        if p == BigInt::from(2) {
            take(GaussianInt::from_i64(1, 1), k, &mut rest);
        } else if p.mod_floor(&four) == BigInt::from(3) {
            take(GaussianInt::new(p, 0), k / 2, &mut rest);
        } else {
            let w = split_prime(&p)?;
            let w_bar = w.conj().normalized();
            let used = take(w, k, &mut rest);
            take(w_bar, k - used, &mut rest);
        }
    }
    let unit = Unit::from_gaussian(&rest).expect("cofactor after removing all primes is a unit");
    factors.sort_by(|(a, _), (b, _)| (a.norm(), a.re(), a.im()).cmp(&(b.norm(), b.re(), b.im())));
    Ok(Factorization { unit, factors })
}
