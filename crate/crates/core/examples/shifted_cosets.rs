// The CSL of a shifted lattice is a coset x + t + (z); check it point by point.

use shifted_csl::oracle::{brute_force_intersection, verify_coset, Window};
use shifted_csl::shifted::{oc_membership, shifted_csl, translation_vector};
use shifted_csl::{GaussianInt, GaussianRational, Isometry, Unit};

fn main() {
    let cases = [
        ((1, 2, 0, 1), (2, 1), Unit::One, false),
        ((1, 2, 1, 2), (3, 2), Unit::I, false),
        ((2, 5, 1, 5), (2, 1), Unit::I, true),
        ((1, 3, 0, 1), (4, 1), Unit::One, true),
    ];
    println!("{:<10} {:<16} {:<22} {:>5} {:>7}  oracle", "x", "isometry", "coset", "index", "points");
    for ((a, b, c, d), (re, im), eps, reflected) in cases {
        let x = GaussianRational::from_fractions(a, b, c, d).unwrap();
        let s = Isometry::new(GaussianInt::from_i64(re, im), eps, reflected).unwrap();
        report(&x, &s);
    }

    // for 2/5 + 1/5 i exactly one unit works with a numerator of norm 13
    let x = GaussianRational::from_fractions(2, 5, 1, 5).unwrap();
    let shift = x.clone().into();
    for eps in Unit::ALL {
        let s = Isometry::rotation(GaussianInt::from_i64(2, 3), eps).unwrap();
        if oc_membership(&shift, &s) {
            report(&x, &s);
        }
    }
}

fn report(x: &GaussianRational, s: &Isometry) {
    let Ok(t) = translation_vector(x, s) else {
        println!("{x:<10} {s:<16} not a coincidence isometry");
        return;
    };
    let coset = shifted_csl(x, s).unwrap();
    let w = Window::for_isometry(s).unwrap();
    let points = brute_force_intersection(x, s, &w);
    let ideal = format!("x + ({t}) + ({})", coset.generator());
    let agrees = if verify_coset(&coset, &w) { "agrees" } else { "DIFFERS" };
    println!("{x:<10} {s:<16} {ideal:<22} {:>5} {:>7}  {agrees}", coset.index(), points.len());
}
