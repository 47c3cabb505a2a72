use num_bigint::BigInt;
use num_rational::BigRational;

use super::{irrational_oc_group, is_coincidence_rotation, member_isometries, socx_equals_soc, Shift};
use crate::coincidence::Isometry;
use crate::gaussian::{GaussianRational, Unit};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Decided exactly (a point-group reflection survives, or the shift is
    /// irrational).
    Proven,
    /// Closure held for every pair of member reflections with index up to
    /// `bound`; larger indices were not examined.
    Bounded { bound: u64 },
    /// A pair of member reflections whose product is not a member.
    Refuted,
}

/// Group-theoretic shape of the set of coincidence isometries of `x + Z[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OcStructure {
    pub is_group: bool,
    pub verdict: Verdict,
    /// The reflection `T` with `OC(x + Z[i]) = SOC(x + Z[i]) ⋊ <T>`, when known.
    pub decomposition: Option<Isometry>,
    /// Member reflections `(T1, T2)` with `T1 T2` not a member.
    pub witness: Option<(Isometry, Isometry)>,
    /// Short classification tag: `full`, `semidirect`, `finite`, `bounded`
    /// or `not-a-group`.
    pub note: String,
}

/// The point-group reflection `R(1, eps) T_r` kept by `x = a + b i`, chosen
/// in the order `b ∈ Z/2`, `a ∈ Z/2`, `a - b ∈ Z`, `a + b ∈ Z`.
pub fn surviving_point_reflection(x: &GaussianRational) -> Option<Isometry> {
    let (a, b) = (x.re(), x.im());
    let two = BigRational::from_integer(BigInt::from(2));
    let half_integral = |v: &BigRational| (v * &two).is_integer();
    let eps = if half_integral(&b) {
        Unit::One
    } else if half_integral(&a) {
        Unit::NegOne
    } else if (&a - &b).is_integer() {
        Unit::I
    } else if (&a + &b).is_integer() {
        Unit::NegI
    } else {
        return None;
    };
    Some(Isometry::point(eps, true))
}

/// Decides whether the coincidence isometries of `x + Z[i]` form a group.
///
/// A surviving point-group reflection settles it (semidirect product).
/// Otherwise every pair of member reflections with index at most `bound` is
/// multiplied out; the first product that is not a member refutes group
/// structure, and if none is found the answer is only a bounded verdict.
pub fn group_structure(x: &Shift, bound: u64) -> OcStructure {
    let x = match x {
        Shift::Rational(x) => x,
        Shift::Irrational(d) => {
            let group = irrational_oc_group(d).unwrap_or_else(|_| vec![Isometry::identity()]);
            return OcStructure {
                is_group: true,
                verdict: Verdict::Proven,
                decomposition: group.get(1).cloned(),
                witness: None,
                note: "finite".into(),
            };
        }
    };

    if let Some(t) = surviving_point_reflection(x) {
        let full = x.is_integral() || socx_equals_soc(x);
        return OcStructure {
            is_group: true,
            verdict: Verdict::Proven,
            decomposition: Some(t),
            witness: None,
            note: if full { "full" } else { "semidirect" }.into(),
        };
    }

    let reflections: Vec<Isometry> = (1..=bound.max(1))
        .flat_map(|m| member_isometries(x, &BigInt::from(m)))
        .filter(Isometry::is_reflection)
        .collect();
    for t1 in &reflections {
        for t2 in &reflections {
            let product = t1.compose(t2);
            if !is_coincidence_rotation(x, &product).expect("product of reflections is a rotation") {
                return OcStructure {
                    is_group: false,
                    verdict: Verdict::Refuted,
                    decomposition: None,
                    witness: Some((t1.clone(), t2.clone())),
                    note: "not-a-group".into(),
                };
            }
        }
    }
    OcStructure {
        is_group: true,
        verdict: Verdict::Bounded { bound },
        decomposition: None,
        witness: None,
        note: "bounded".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shifted::{is_coincidence_reflection, IrrationalShift};

    fn shift(a: i64, b: i64, c: i64, d: i64) -> Shift {
        Shift::Rational(GaussianRational::from_fractions(a, b, c, d).unwrap())
    }

    #[test]
    fn delaunay_center_keeps_everything() {
        let s = group_structure(&shift(1, 2, 1, 2), 100);
        assert!(s.is_group);
        assert_eq!(s.verdict, Verdict::Proven);
        assert_eq!(s.note, "full");
        assert_eq!(s.decomposition, Some(Isometry::conjugation()));
    }

    #[test]
    fn thirds_use_the_table_reflection() {
        let s = group_structure(&shift(1, 3, 0, 1), 100);
        assert!(s.is_group);
        assert_eq!(s.decomposition, Some(Isometry::point(Unit::One, true)));
        let s = group_structure(&shift(1, 3, 1, 3), 100);
        assert_eq!(s.decomposition, Some(Isometry::point(Unit::I, true)));
        assert_eq!(s.note, "semidirect");
    }

    #[test]
    fn off_diagonal_fifth_is_not_a_group() {
        let s = group_structure(&shift(2, 5, 1, 5), 100);
        assert!(!s.is_group);
        assert_eq!(s.verdict, Verdict::Refuted);
        let (t1, t2) = s.witness.unwrap();
        let x = GaussianRational::from_fractions(2, 5, 1, 5).unwrap();
        assert!(is_coincidence_reflection(&x, &t1).unwrap());
        assert!(is_coincidence_reflection(&x, &t2).unwrap());
        let product = t1.compose(&t2);
        assert!(product.is_point_group());
        assert!(!is_coincidence_rotation(&x, &product).unwrap());
    }

    #[test]
    fn bounded_verdict_when_no_reflection_found() {
        // 1/7 + 3/7 i keeps no point reflection; with bound 1 nothing is checked
        let s = group_structure(&shift(1, 7, 3, 7), 1);
        assert!(s.is_group);
        assert_eq!(s.verdict, Verdict::Bounded { bound: 1 });
        assert_eq!(s.note, "bounded");
    }

    #[test]
    fn table_reflection_matches_direct_membership() {
        for den in 1..=6i64 {
            for a in 0..den {
                for b in 0..den {
                    let x = GaussianRational::from_fractions(a, den, b, den).unwrap();
                    let direct: Vec<Isometry> = Isometry::point_group()
                        .into_iter()
                        .filter(|t| t.is_reflection() && is_coincidence_reflection(&x, t).unwrap())
                        .collect();
                    match surviving_point_reflection(&x) {
                        Some(t) => assert!(direct.contains(&t), "{x}"),
                        None => assert!(direct.is_empty(), "{x}"),
                    }
                }
            }
        }
    }

    #[test]
    fn irrational_shifts_are_finite_groups() {
        let s = group_structure(
            &Shift::Irrational(IrrationalShift::BothIrrDependent {
                p1: 0.into(),
                q1: 1.into(),
                p2: (-2).into(),
                q2: 1.into(),
            }),
            10,
        );
        assert!(s.is_group);
        assert_eq!(s.note, "finite");
        assert_eq!(
            s.decomposition,
            Some(Isometry::reflection(crate::GaussianInt::from_i64(-2, 1), Unit::One).unwrap())
        );
    }
}
