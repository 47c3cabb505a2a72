use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shifted_csl::coincidence::isometries_of_index;
use shifted_csl::oracle::{brute_force_intersection, verify_coset, verify_membership, Window};
use shifted_csl::shifted::{oc_membership, shifted_csl, Shift};
use shifted_csl::{Error, GaussianRational, Isometry};

fn random_shift(rng: &mut ChaCha8Rng) -> GaussianRational {
    let den = |rng: &mut ChaCha8Rng| rng.gen_range(1..=10i64);
    let (b, d) = (den(rng), den(rng));
    GaussianRational::from_fractions(rng.gen_range(-b..=b), b, rng.gen_range(-d..=d), d).unwrap()
}

#[test]
fn random_shifts_agree_with_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let isometries: Vec<Isometry> = (1..=41u64).flat_map(|m| isometries_of_index(&BigInt::from(m))).collect();
    for _ in 0..40 {
        let x = random_shift(&mut rng);
        let shift = Shift::Rational(x.clone());
        for s in &isometries {
            let w = Window::for_isometry(s).unwrap();
            let analytic = oc_membership(&shift, s);
            assert_eq!(verify_membership(&x, s, &w), Ok(analytic), "{x} {s}");
            if analytic {
                assert!(verify_coset(&shifted_csl(&x, s).unwrap(), &w), "{x} {s}");
            }
        }
    }
}

#[test]
fn member_density_matches_the_index() {
    let x = GaussianRational::from_fractions(1, 2, 1, 2).unwrap();
    for m in [5u64, 13, 25, 65] {
        for s in isometries_of_index(&BigInt::from(m)) {
            let w = Window::for_isometry(&s).unwrap();
            let side = 2 * w.radius() as u64 + 1;
            let points = brute_force_intersection(&x, &s, &w).len() as u64;
            let census = w.census();
            let boundary = 4 * side;
            assert!(points + boundary >= census / m, "{s}: {points}");
            assert!(points <= census.div_ceil(m) + boundary, "{s}: {points}");
        }
    }
}

#[test]
fn non_members_have_empty_intersections() {
    let x = GaussianRational::from_fractions(1, 2, 0, 1).unwrap();
    for s in isometries_of_index(&BigInt::from(13)) {
        if !oc_membership(&Shift::Rational(x.clone()), &s) {
            let w = Window::new(40).unwrap();
            assert!(brute_force_intersection(&x, &s, &w).is_empty(), "{s}");
        }
    }
}

#[test]
fn small_windows_are_reported() {
    let x = GaussianRational::zero();
    let s = isometries_of_index(&BigInt::from(65)).remove(0);
    let w = Window::new(2).unwrap();
    assert_eq!(verify_membership(&x, &s, &w), Err(Error::WindowTooSmall { radius: 2 }));
    assert!(s.sigma().to_u64().unwrap() > w.census() / 2);
}
