//! Coincidence isometries and CSLs of the shifted square lattice `x + Z[i]`.
//!
//! An isometry `S` of `Z[i]` is a coincidence isometry of `x + Z[i]` exactly
//! when `S x - x` lies in `Z[i] + S Z[i]`; the intersection
//! `(x + Z[i]) ∩ S(x + Z[i])` is then the coset `x + t + (z)` of the
//! unshifted CSL. For the square lattice with `S = R(z, eps)` this becomes a
//! divisibility test on the numerator and denominator of `x`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coincidence::{Csl, Isometry};
use crate::gaussian::{self, GaussianInt, GaussianRational, Unit};
use crate::{Error, Result};

mod counting;
mod irrational;
mod structure;

pub use counting::{count_fx, member_isometries, FxCounts};
pub use irrational::{irrational_oc_group, IrrationalShift};
pub use structure::{group_structure, surviving_point_reflection, OcStructure, Verdict};

/// A shift vector `x = a + b i`.
///
/// Rational shifts are exact. Irrational shifts are described only by the
/// rationality relations between `a` and `b`, which is all that membership
/// depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shift {
    Rational(GaussianRational),
    Irrational(IrrationalShift),
}

impl Shift {
    pub fn as_rational(&self) -> Option<&GaussianRational> {
        match self {
            Shift::Rational(x) => Some(x),
            Shift::Irrational(_) => None,
        }
    }
}

impl From<GaussianRational> for Shift {
    fn from(x: GaussianRational) -> Self {
        Shift::Rational(x)
    }
}

impl From<IrrationalShift> for Shift {
    fn from(x: IrrationalShift) -> Self {
        Shift::Irrational(x)
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shift::Rational(x) => fmt::Display::fmt(x, f),
            Shift::Irrational(d) => fmt::Display::fmt(d, f),
        }
    }
}

/// The coset `x + t + (z)` cut out of `x + Z[i]` by a coincidence isometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedCsl {
    shift: GaussianRational,
    translation: GaussianInt,
    isometry: Isometry,
}

impl ShiftedCsl {
    /// Assembles a record without checking it; see [`shifted_csl`] for the
    /// computed one.
    pub fn from_parts(shift: GaussianRational, translation: GaussianInt, isometry: Isometry) -> Self {
        ShiftedCsl { shift, translation, isometry }
    }

    pub fn shift(&self) -> &GaussianRational {
        &self.shift
    }

    pub fn translation(&self) -> &GaussianInt {
        &self.translation
    }

    pub fn isometry(&self) -> &Isometry {
        &self.isometry
    }

    pub fn generator(&self) -> &GaussianInt {
        self.isometry.z()
    }

    pub fn csl(&self) -> Csl {
        self.isometry.csl()
    }

    /// Index of the coset's lattice in `Z[i]`; always the unshifted `sigma`.
    pub fn index(&self) -> BigInt {
        self.generator().norm()
    }

    /// Whether the point `x + gamma` belongs to the coset.
    pub fn contains_offset(&self, gamma: &GaussianInt) -> bool {
        self.csl().contains(&(gamma - &self.translation))
    }
}

/// Maps `x` into the triangle `0 <= b <= a <= 1/2` by a lattice translation and
/// a point-group element: returns `(y, Q)` with `x ≡ Q y (mod Z[i])`.
pub fn reduce_shift(x: &GaussianRational) -> (GaussianRational, Isometry) {
    let zero = BigRational::zero();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for q in Isometry::point_group() {
        let (_, y) = q.inverse().apply(x).split_lattice();
        let (a, b) = (y.re(), y.im());
        if zero <= b && b <= a && a <= half {
            return (y, q);
        }
    }
    unreachable!("the triangle is a fundamental domain of the lattice symmetry group")
}

/// `eps * z - conj(z)` via its closed form per unit.
pub fn eps_z_minus_conj(z: &GaussianInt, eps: Unit) -> GaussianInt {
    let (re, im) = (z.re().clone(), z.im().clone());
    let one_minus_i = GaussianInt::from_i64(1, -1);
    match eps {
        Unit::One => GaussianInt::new(BigInt::zero(), 2 * im),
        Unit::NegOne => GaussianInt::new(-2 * re, BigInt::zero()),
        Unit::I => -(one_minus_i.scale(&(re + im))),
        Unit::NegI => -(one_minus_i.scale(&(re - im)).mul_unit(Unit::I)),
    }
}

/// Rotation test: `R(z, eps)` preserves a coincidence of `p/q + Z[i]` iff
/// `q | eps z - conj(z)`. Only the denominator of `x` matters.
pub fn is_coincidence_rotation(x: &GaussianRational, r: &Isometry) -> Result<bool> {
    if r.is_reflection() {
        return Err(Error::WrongIsometryKind { expected: "rotation", found: "reflection" });
    }
    gaussian::divides(x.den(), &eps_z_minus_conj(r.z(), r.eps()))
}

/// Reflection test: `R(z, eps) T_r` is a coincidence isometry of `x + Z[i]`
/// iff `eps z conj(x) - conj(z) x` is a Gaussian integer.
pub fn is_coincidence_reflection(x: &GaussianRational, t: &Isometry) -> Result<bool> {
    if t.is_rotation() {
        return Err(Error::WrongIsometryKind { expected: "reflection", found: "rotation" });
    }
    Ok(coincidence_defect(x, t).is_integral())
}

/// `S x - x` scaled by `conj(z)`: `(eps z - conj(z)) x` for rotations and
/// `eps z conj(x) - conj(z) x` for reflections.
fn coincidence_defect(x: &GaussianRational, s: &Isometry) -> GaussianRational {
    let ez = GaussianRational::from_int(s.z().mul_unit(s.eps()));
    let zbar = GaussianRational::from_int(s.z().conj());
    let moved = if s.is_reflection() { x.conj() } else { x.clone() };
    &(&ez * &moved) - &(&zbar * x)
}

/// Whether `s` is a coincidence isometry of `x + Z[i]`.
pub fn oc_membership(x: &Shift, s: &Isometry) -> bool {
    match x {
        Shift::Rational(x) => {
            let verdict = if s.is_rotation() { is_coincidence_rotation(x, s) } else { is_coincidence_reflection(x, s) };
            verdict.expect("kind matches the dispatched test")
        }
        Shift::Irrational(d) => match irrational_oc_group(d) {
            Ok(group) => group.contains(s),
            Err(_) => s == &Isometry::identity(),
        },
    }
}

fn not_member(x: &GaussianRational, s: &Isometry) -> Error {
    Error::NotMember { shift: x.to_string(), isometry: s.to_string() }
}

/// A translation `t` with `(x + Z[i]) ∩ S(x + Z[i]) = x + t + (z)`, reduced
/// modulo `(z)`.
///
/// Writing `S x - x = c / conj(z)`, we need `t, s` with
/// `conj(z) t + eps z s = c`; since `z` and `conj(z)` are coprime the
/// extended gcd solves it.
pub fn translation_vector(x: &GaussianRational, s: &Isometry) -> Result<GaussianInt> {
    let c = coincidence_defect(x, s).to_integer().ok_or_else(|| not_member(x, s))?;
    let z = s.z();
    let zbar = z.conj();
    let ez = z.mul_unit(s.eps());
    let (g, u, _) = gaussian::extended_gcd(&zbar, &ez)?;
    let unit = Unit::from_gaussian(&g).expect("numerator is coprime to its conjugate");
    let t = (u * c).mul_unit(unit.inverse());
    // norm(z) is odd, so nearest-quotient rounding never ties and the
    // remainder is a canonical coset representative.
    let (_, t) = t.div_rem_nearest(z)?;
    Ok(t)
}

/// The CSL of `x + Z[i]` obtained from `s`.
pub fn shifted_csl(x: &GaussianRational, s: &Isometry) -> Result<ShiftedCsl> {
    let t = translation_vector(x, s)?;
    Ok(ShiftedCsl::from_parts(x.clone(), t, s.clone()))
}

/// `x = m/2 + (n/2) i` with `m, n` odd: the only shifts that keep every
/// coincidence rotation. Lattice shifts `x ∈ Z[i]` are reported as `false`
/// even though they trivially keep everything.
pub fn socx_equals_soc(x: &GaussianRational) -> bool {
    let is_odd_half = |v: BigRational| {
        let doubled = v * BigRational::from_integer(BigInt::from(2));
        doubled.is_integer() && doubled.to_integer() % 2 != BigInt::zero()
    };
    is_odd_half(x.re()) && is_odd_half(x.im())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::from_i64(re, im)
    }

    fn q(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_fractions(a, b, c, d).unwrap()
    }

    fn rot(re: i64, im: i64, eps: Unit) -> Isometry {
        Isometry::rotation(g(re, im), eps).unwrap()
    }

    fn refl(re: i64, im: i64, eps: Unit) -> Isometry {
        Isometry::reflection(g(re, im), eps).unwrap()
    }

    #[test]
    fn reduce_shift_examples() {
        let (y, qq) = reduce_shift(&GaussianRational::zero());
        assert_eq!((y, qq), (GaussianRational::zero(), Isometry::identity()));

        let x = q(-1, 2, -1, 2);
        let (y, qq) = reduce_shift(&x);
        assert_eq!(y, q(1, 2, 1, 2));
        assert!((&qq.apply(&y) - &x).is_integral());

        let x = q(1, 5, 2, 5);
        let (y, qq) = reduce_shift(&x);
        assert_eq!(y, q(2, 5, 1, 5));
        assert_eq!(qq, Isometry::point(Unit::I, true));
        assert!((&qq.apply(&y) - &x).is_integral());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(eps_z_minus_conj(&g(2, 1), Unit::One), g(0, 2));
        assert_eq!(eps_z_minus_conj(&g(2, 1), Unit::NegOne), g(-4, 0));
        assert_eq!(eps_z_minus_conj(&g(2, 1), Unit::I), g(-3, 3));
        for re in -5..=5 {
            for im in -5..=5 {
                let z = g(re, im);
                for eps in Unit::ALL {
                    assert_eq!(eps_z_minus_conj(&z, eps), z.mul_unit(eps) - z.conj());
                }
            }
        }
    }

    #[test]
    fn rotation_membership_examples() {
        let center = q(1, 2, 1, 2);
        for z in [g(1, 0), g(2, 1), g(1, 2), g(3, 2), g(8, 1)] {
            for eps in Unit::ALL {
                assert!(is_coincidence_rotation(&center, &Isometry::rotation(z.clone(), eps).unwrap()).unwrap());
            }
        }
        let half = q(1, 2, 0, 1);
        assert!(!is_coincidence_rotation(&half, &rot(2, 1, Unit::I)).unwrap());
        assert!(is_coincidence_rotation(&half, &rot(2, 1, Unit::NegOne)).unwrap());

        let x = q(2, 5, 1, 5);
        let hits = Unit::ALL.iter().filter(|&&e| is_coincidence_rotation(&x, &rot(3, 2, e)).unwrap()).count();
        assert_eq!(hits, 1);
        assert!(is_coincidence_rotation(&x, &refl(2, 1, Unit::One)).is_err());
    }

    #[test]
    fn reflection_membership_examples() {
        assert!(is_coincidence_reflection(&GaussianRational::zero(), &Isometry::conjugation()).unwrap());
        let x = q(2, 5, 1, 5);
        // (1-2i) | z for z = 2+i (associate) and z = (2+i)(3+2i) = 4+7i
        for z in [g(2, 1), g(4, 7)] {
            for eps in Unit::ALL {
                let t = Isometry::reflection(z.clone(), eps).unwrap();
                assert!(is_coincidence_reflection(&x, &t).unwrap(), "{t}");
            }
        }
        // For 1/3 the conjugation survives and the imaginary-axis reflection does not.
        let third = q(1, 3, 0, 1);
        assert!(is_coincidence_reflection(&third, &Isometry::point(Unit::One, true)).unwrap());
        assert!(!is_coincidence_reflection(&third, &Isometry::point(Unit::NegOne, true)).unwrap());
        assert!(is_coincidence_reflection(&third, &Isometry::identity()).is_err());
    }

    #[test]
    fn membership_dispatch() {
        let shifts = [
            Shift::Rational(q(2, 5, 1, 5)),
            Shift::Irrational(IrrationalShift::BothIrrIndependent),
            Shift::Irrational(IrrationalShift::AIrrBRat { b: BigRational::new(1.into(), 2.into()) }),
        ];
        for x in &shifts {
            assert!(oc_membership(x, &Isometry::identity()));
        }
        assert!(oc_membership(&shifts[2], &Isometry::conjugation()));
        assert!(!oc_membership(&shifts[1], &rot(2, 1, Unit::One)));
        assert!(!oc_membership(&shifts[1], &Isometry::conjugation()));
    }

    #[test]
    fn translation_vector_examples() {
        let x = q(3, 7, -2, 9);
        assert_eq!(translation_vector(&x, &Isometry::identity()).unwrap(), GaussianInt::zero());
        let origin = GaussianRational::zero();
        for r in [rot(2, 1, Unit::One), refl(8, 1, Unit::NegI), rot(3, 2, Unit::I)] {
            assert_eq!(translation_vector(&origin, &r).unwrap(), GaussianInt::zero());
        }
        let err = translation_vector(&q(1, 2, 0, 1), &rot(2, 1, Unit::I));
        assert!(matches!(err, Err(Error::NotMember { .. })));
    }

    #[test]
    fn translation_vector_solves_the_coset_equation() {
        // (x + t) must lie in S(x + Z[i]): S^{-1}(x + t) - x ∈ Z[i].
        let x = q(1, 2, 1, 2);
        for z in [g(2, 1), g(1, 2), g(3, 2), g(4, 7)] {
            for eps in Unit::ALL {
                for reflected in [false, true] {
                    let s = Isometry::new(z.clone(), eps, reflected).unwrap();
                    let t = translation_vector(&x, &s).unwrap();
                    let point = &x + &GaussianRational::from_int(t.clone());
                    let back = &s.inverse().apply(&point) - &x;
                    assert!(back.is_integral(), "{s}: t = {t}");
                    assert!(t.norm() * 2 <= z.norm());
                }
            }
        }
    }

    #[test]
    fn shifted_csl_index_is_sigma() {
        let c = shifted_csl(&q(1, 2, 0, 1), &rot(2, 1, Unit::One)).unwrap();
        assert_eq!(c.index(), BigInt::from(5));
        let c = shifted_csl(&q(1, 2, 1, 2), &Isometry::identity()).unwrap();
        assert_eq!(c.index(), BigInt::one());
        assert!(c.contains_offset(&g(17, -3)));
    }

    #[test]
    fn socx_criterion() {
        assert!(socx_equals_soc(&q(1, 2, 1, 2)));
        assert!(socx_equals_soc(&q(-3, 2, 5, 2)));
        assert!(!socx_equals_soc(&GaussianRational::zero()));
        assert!(!socx_equals_soc(&q(1, 2, 0, 1)));
        assert!(!socx_equals_soc(&q(1, 2, 1, 1)));
    }
}
