use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coincidence::Isometry;
use crate::gaussian::{GaussianInt, Unit};
use crate::{Error, Result};

/// Rationality class of a shift `a + b i` with at least one irrational
/// coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrrationalShift {
    /// `a` irrational, `b` rational.
    AIrrBRat { b: BigRational },
    /// `a` rational, `b` irrational.
    ARatBIrr { a: BigRational },
    /// `a` and `b` irrational and linearly independent over `Q` (with 1).
    BothIrrIndependent,
    /// `a = p1/q1 + (p2/q2) b` with `b` irrational, both fractions reduced and
    /// `q1, q2 >= 1`.
    BothIrrDependent { p1: BigInt, q1: BigInt, p2: BigInt, q2: BigInt },
}

impl fmt::Display for IrrationalShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::gaussian::padded(f, |w| self.write_plain(w))
    }
}

impl IrrationalShift {
    fn write_plain(&self, f: &mut dyn fmt::Write) -> fmt::Result {
        match self {
            IrrationalShift::AIrrBRat { b } => write!(f, "irr-a b={b}"),
            IrrationalShift::ARatBIrr { a } => write!(f, "irr-b a={a}"),
            IrrationalShift::BothIrrIndependent => f.write_str("indep"),
            IrrationalShift::BothIrrDependent { p1, q1, p2, q2 } => write!(f, "dep {p1}/{q1} {p2}/{q2}"),
        }
    }
}

impl IrrationalShift {
    fn validate(&self) -> Result<()> {
        if let IrrationalShift::BothIrrDependent { p1, q1, p2, q2 } = self {
            let bad = |why: &str| Err(Error::MalformedDescriptor(format!("{self}: {why}")));
            if !q1.is_positive() || !q2.is_positive() {
                return bad("denominators must be positive");
            }
            if !p1.gcd(q1).is_one() || !p2.gcd(q2).is_one() {
                return bad("fractions must be reduced");
            }
            if p2.is_zero() {
                return bad("a zero slope makes a rational");
            }
        }
        Ok(())
    }
}

fn is_half_integer(v: &BigRational) -> bool {
    (v * BigRational::from_integer(BigInt::from(2))).is_integer()
}

/// The coincidence isometries of an irrationally shifted lattice: the identity
/// and at most one reflection.
pub fn irrational_oc_group(x: &IrrationalShift) -> Result<Vec<Isometry>> {
    x.validate()?;
    let mut group = vec![Isometry::identity()];
    let generator = match x {
        IrrationalShift::AIrrBRat { b } => is_half_integer(b).then(Isometry::conjugation),
        // w -> -conj(w), the reflection in the imaginary axis
        IrrationalShift::ARatBIrr { a } => is_half_integer(a).then(|| Isometry::point(Unit::NegOne, true)),
        IrrationalShift::BothIrrIndependent => None,
        IrrationalShift::BothIrrDependent { p1: _, q1, p2, q2 } => {
            if (p2 * q2).is_even() {
                let two_q2: BigInt = q2 * 2;
                two_q2.is_multiple_of(q1).then(|| {
                    Isometry::reflection(GaussianInt::new(p2.clone(), q2.clone()), Unit::One)
                        .expect("coprime coordinates of different parity give a primitive numerator")
                })
            } else {
                q2.is_multiple_of(q1).then(|| {
                    let re: BigInt = (p2 + q2) / 2i32;
                    let im: BigInt = -((p2 - q2) / 2i32);
                    Isometry::reflection(GaussianInt::new(re, im), Unit::I)
                        .expect("halved sum and difference of coprime odd numbers are primitive")
                })
            }
        }
    };
    group.extend(generator);
    Ok(group)
}
