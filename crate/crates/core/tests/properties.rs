use num_bigint::BigInt;
use proptest::prelude::*;
use shifted_csl::coincidence::{enumerate_numerators, Isometry};
use shifted_csl::gaussian::{divides, extended_gcd, factor, gcd, GaussianInt, GaussianRational, Unit};
use shifted_csl::shifted::{
    eps_z_minus_conj, is_coincidence_reflection, is_coincidence_rotation, member_isometries, oc_membership,
    shifted_csl, surviving_point_reflection, translation_vector, Shift,
};

const SIGMAS: [u64; 11] = [1, 5, 13, 17, 25, 29, 37, 41, 53, 61, 65];

fn gaussian(bound: i64) -> impl Strategy<Value = GaussianInt> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, b)| GaussianInt::from_i64(a, b))
}

fn nonzero(bound: i64) -> impl Strategy<Value = GaussianInt> {
    gaussian(bound).prop_filter("nonzero", |z| !z.is_zero())
}

fn unit() -> impl Strategy<Value = Unit> {
    (0i64..4).prop_map(Unit::from_index)
}

fn isometry(bound: i64) -> impl Strategy<Value = Isometry> {
    (gaussian(bound), unit(), any::<bool>())
        .prop_filter_map("primitive numerator", |(z, e, r)| Isometry::new(z, e, r).ok())
}

fn shift() -> impl Strategy<Value = GaussianRational> {
    (-12i64..=12, 1i64..=12, -12i64..=12, 1i64..=12)
        .prop_map(|(a, b, c, d)| GaussianRational::from_fractions(a, b, c, d).unwrap())
}

fn small_shift() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=6, -6i64..=6, 1i64..=6)
        .prop_map(|(a, b, c, d)| GaussianRational::from_fractions(a, b, c, d).unwrap())
}

fn pick_member(x: &GaussianRational, k: usize, idx: &prop::sample::Index, rotations: bool) -> Option<Isometry> {
    let members: Vec<Isometry> =
        member_isometries(x, &BigInt::from(SIGMAS[k])).into_iter().filter(|s| !rotations || s.is_rotation()).collect();
    (!members.is_empty()).then(|| idx.get(&members).clone())
}

fn shift_with_member() -> impl Strategy<Value = (GaussianRational, Isometry)> {
    (small_shift(), 0..SIGMAS.len(), any::<prop::sample::Index>()).prop_filter_map(
        "no member of that index",
        |(x, k, idx)| {
            let s = pick_member(&x, k, &idx, false)?;
            Some((x, s))
        },
    )
}

fn shift_with_rotation_pair() -> impl Strategy<Value = (GaussianRational, Isometry, Isometry)> {
    let idx = any::<prop::sample::Index>;
    (small_shift(), 0..SIGMAS.len(), 0..SIGMAS.len(), idx(), idx()).prop_filter_map(
        "no member rotations",
        |(x, k1, k2, i1, i2)| {
            let s = pick_member(&x, k1, &i1, true)?;
            let t = pick_member(&x, k2, &i2, true)?;
            Some((x, s, t))
        },
    )
}

fn point_group_element() -> impl Strategy<Value = Isometry> {
    (0usize..8).prop_map(|k| Isometry::point_group()[k].clone())
}

proptest! {
    #[test]
    fn nearest_division(a in gaussian(10_000), d in nonzero(300)) {
        let (q, r) = a.div_rem_nearest(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.norm() * 2 <= d.norm());
    }

    #[test]
    fn bezout(z in gaussian(500), w in gaussian(500)) {
        prop_assume!(!(z.is_zero() && w.is_zero()));
        let (g, u, v) = extended_gcd(&z, &w).unwrap();
        prop_assert_eq!(&(&u * &z) + &(&v * &w), g.clone());
        prop_assert!(divides(&g, &z).unwrap() && divides(&g, &w).unwrap());
        prop_assert_eq!(g.normalized(), g.clone());
        prop_assert_eq!(gcd(&w, &z).unwrap(), g);
    }

    #[test]
    fn factorization_multiplies_back(z in nonzero(2_000)) {
        let fac = factor(&z).unwrap();
        prop_assert_eq!(fac.product(), z);
        for (p, _) in &fac.factors {
            prop_assert_eq!(p.normalized(), p.clone());
            prop_assert!(!p.is_unit());
        }
    }

    #[test]
    fn canonical_associate_quadrant(z in nonzero(1_000)) {
        let (w, u) = z.canonical_associate().unwrap();
        prop_assert_eq!(z.mul_unit(u), w.clone());
        prop_assert!(w.re() > &BigInt::from(0) && w.im() >= &BigInt::from(0));
    }

    #[test]
    fn rational_field_laws(x in shift(), y in shift()) {
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        let (k, r) = x.split_lattice();
        prop_assert_eq!(&GaussianRational::from_int(k) + &r, x);
    }

    #[test]
    fn composition_is_pointwise(s in isometry(12), t in isometry(12), w in shift()) {
        prop_assert_eq!(s.compose(&t).apply(&w), s.apply(&t.apply(&w)));
    }

    #[test]
    fn group_laws(s in isometry(10), t in isometry(10), u in isometry(10)) {
        prop_assert_eq!(s.compose(&t).compose(&u), s.compose(&t.compose(&u)));
        prop_assert_eq!(s.compose(&s.inverse()), Isometry::identity());
        prop_assert_eq!(Isometry::identity().compose(&s), s.clone());
        let sigma = s.compose(&t).sigma();
        prop_assert!(sigma <= s.sigma() * t.sigma());
    }

    #[test]
    fn point_group_covariance(x in shift(), s in isometry(15), q in point_group_element()) {
        // membership for Qx is membership of the conjugate Q^-1 S Q for x
        let moved = Shift::Rational(q.apply(&x));
        let conjugate = q.inverse().compose(&s).compose(&q);
        prop_assert_eq!(oc_membership(&moved, &s), oc_membership(&Shift::Rational(x), &conjugate));
    }

    #[test]
    fn rotation_test_depends_only_on_denominator(x in shift(), s in isometry(15), k in gaussian(20)) {
        prop_assume!(s.is_rotation());
        let y = &x + &GaussianRational::from_int(k);
        prop_assert_eq!(is_coincidence_rotation(&x, &s).unwrap(), is_coincidence_rotation(&y, &s).unwrap());
        let one_over_q = GaussianRational::new(GaussianInt::one(), x.den().clone()).unwrap();
        prop_assert_eq!(is_coincidence_rotation(&x, &s).unwrap(), is_coincidence_rotation(&one_over_q, &s).unwrap());
    }

    #[test]
    fn member_pairs_compose_to_members((x, s, t) in shift_with_rotation_pair()) {
        prop_assert!(is_coincidence_rotation(&x, &s.compose(&t)).unwrap());
        prop_assert!(is_coincidence_rotation(&x, &s.inverse()).unwrap());
    }

    #[test]
    fn reflection_excludes_rotations_without_point_reflection(
        (x, t) in (shift(), isometry(15))
            .prop_filter("reflection, no point reflection", |(x, t)| {
                t.is_reflection() && surviving_point_reflection(x).is_none()
            })
    ) {
        if is_coincidence_reflection(&x, &t).unwrap() {
            for eps in Unit::ALL {
                let r = Isometry::rotation(t.z().clone(), eps).unwrap();
                prop_assert!(!is_coincidence_rotation(&x, &r).unwrap(), "{} with {}", t, r);
            }
        }
    }

    #[test]
    fn coincidence_defect_closed_form(s in isometry(200)) {
        let (z, eps) = (s.z(), s.eps());
        let (a, b) = (z.re().clone(), z.im().clone());
        let one_minus_i = GaussianInt::from_i64(1, -1);
        let expected = match eps {
            Unit::One => GaussianInt::new(BigInt::from(0), &b * 2u32),
            Unit::NegOne => GaussianInt::new(-(&a * 2u32), BigInt::from(0)),
            Unit::I => -(one_minus_i.scale(&(&a + &b))),
            Unit::NegI => -(one_minus_i.scale(&(&a - &b)).mul_unit(Unit::I)),
        };
        prop_assert_eq!(eps_z_minus_conj(z, eps), expected);
    }

    #[test]
    fn translation_solves_the_coset_equation((x, s) in shift_with_member()) {
        let t = translation_vector(&x, &s).unwrap();
        // x + t lies in the image S(x + Z[i])
        let preimage = s.inverse().apply(&(&x + &GaussianRational::from_int(t.clone())));
        prop_assert!((&preimage - &x).is_integral());
        let c = shifted_csl(&x, &s).unwrap();
        prop_assert_eq!(c.index(), s.sigma());
        let (q, _) = t.div_rem_nearest(s.z()).unwrap();
        prop_assert!(q.is_zero());
    }

    #[test]
    fn numerators_have_the_requested_norm(m in 1u64..2_000) {
        for z in enumerate_numerators(&BigInt::from(m)) {
            prop_assert_eq!(z.norm(), BigInt::from(m));
            prop_assert!(Isometry::rotation(z, Unit::One).is_ok());
        }
    }
}
