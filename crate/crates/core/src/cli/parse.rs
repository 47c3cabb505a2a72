//! Literal grammar for Gaussian integers, units and shifts.
//!
//! Rational shifts are written `a/b+c/di` with optional signs and either part
//! omitted (`1/2`, `1/3i`, `-i`, `2/5+1/5i`). Shifts with an irrational
//! coordinate use keyword descriptors:
//!
//! ```text
//! irr-a b=<rat>          a irrational, b rational
//! irr-b a=<rat>          a rational, b irrational
//! indep                  both irrational, independent over Q
//! dep <p1>/<q1> <p2>/<q2> a = p1/q1 + (p2/q2) b, b irrational
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::CliError;
use crate::gaussian::{GaussianInt, GaussianRational, Unit};
use crate::shifted::{IrrationalShift, Shift};

fn bad(what: &str, input: &str) -> CliError {
    CliError::Parse(format!("cannot parse {what} {input:?}"))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if s.is_empty() || s.starts_with('/') || s.ends_with('/') {
        return None;
    }
    let r = BigRational::from_str(s).ok()?;
    Some(r)
}

/// Splits `a+bi` into `("a", Some("+b"))`, `"bi"` into `("", Some("b"))`.
fn split_complex(s: &str) -> (&str, Option<&str>) {
    let Some(body) = s.strip_suffix('i') else {
        return (s, None);
    };
    let cut =
        body.char_indices().filter(|&(k, c)| k > 0 && (c == '+' || c == '-')).map(|(k, _)| k).next_back().unwrap_or(0);
    (&body[..cut], Some(&body[cut..]))
}

fn coefficient(s: &str) -> Option<BigRational> {
    match s {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => parse_rational(s),
    }
}

fn parse_complex(s: &str) -> Option<(BigRational, BigRational)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let (re, im) = split_complex(&s);
    let re = if re.is_empty() { BigRational::from_integer(BigInt::from(0)) } else { parse_rational(re)? };
    let im = match im {
        Some(im) => coefficient(im)?,
        None => BigRational::from_integer(BigInt::from(0)),
    };
    Some((re, im))
}

/// A Gaussian integer literal such as `4+7i`, `-3`, `2i`, `-i`.
pub fn parse_gaussian_int(s: &str) -> Result<GaussianInt, CliError> {
    match parse_complex(s) {
        Some((re, im)) if re.is_integer() && im.is_integer() => Ok(GaussianInt::new(re.to_integer(), im.to_integer())),
        _ => Err(bad("Gaussian integer", s)),
    }
}

/// A Gaussian rational literal such as `2/5+1/5i`.
pub fn parse_gaussian_rational(s: &str) -> Result<GaussianRational, CliError> {
    parse_complex(s).map(|(re, im)| GaussianRational::from_parts(&re, &im)).ok_or_else(|| bad("shift", s))
}

/// One of `1`, `i`, `-1`, `-i`.
pub fn parse_unit(s: &str) -> Result<Unit, CliError> {
    parse_gaussian_int(s).ok().and_then(|z| Unit::from_gaussian(&z)).ok_or_else(|| bad("unit", s))
}

fn parse_fraction(s: &str) -> Option<(BigInt, BigInt)> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    Some((BigInt::from_str(p).ok()?, BigInt::from_str(q).ok()?))
}

fn parse_irrational(words: &[&str]) -> Option<IrrationalShift> {
    match words {
        ["indep"] => Some(IrrationalShift::BothIrrIndependent),
        ["irr-a", rest] => Some(IrrationalShift::AIrrBRat { b: parse_rational(rest.strip_prefix("b=")?)? }),
        ["irr-b", rest] => Some(IrrationalShift::ARatBIrr { a: parse_rational(rest.strip_prefix("a=")?)? }),
        ["dep", f1, f2] => {
            let (p1, q1) = parse_fraction(f1)?;
            let (p2, q2) = parse_fraction(f2)?;
            Some(IrrationalShift::BothIrrDependent { p1, q1, p2, q2 })
        }
        _ => None,
    }
}

/// A rational shift literal or an irrational descriptor.
pub fn parse_shift(s: &str) -> Result<Shift, CliError> {
    let words: Vec<&str> = s.split_whitespace().collect();
    let keyword = words.first().is_some_and(|w| ["indep", "irr-a", "irr-b", "dep"].contains(w));
    if !keyword {
        return parse_gaussian_rational(s).map(Shift::Rational);
    }
    let d = parse_irrational(&words).ok_or_else(|| bad("irrational shift descriptor", s))?;
    if let IrrationalShift::BothIrrDependent { q1, q2, .. } = &d {
        if !q1.is_positive() || !q2.is_positive() {
            return Err(bad("irrational shift descriptor", s));
        }
    }
    // reject reduced-form and slope violations up front
    crate::shifted::irrational_oc_group(&d).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(Shift::Irrational(d))
}

/// A positive integer such as a coincidence index.
pub fn parse_positive(s: &str) -> Result<BigInt, CliError> {
    BigInt::from_str(s.trim()).ok().filter(|n| n.is_positive()).ok_or_else(|| bad("positive integer", s))
}
