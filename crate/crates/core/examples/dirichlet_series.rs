// Counting functions as Euler products, checked against direct enumeration.

use shifted_csl::series::{compare_enumeration_to_series, euler_coefficients, ClosedFormClass, LocalFactorSpec};
use shifted_csl::shifted::count_fx;
use shifted_csl::GaussianRational;

fn main() {
    let phi = euler_coefficients(&LocalFactorSpec::square_lattice(), 100);
    let terms: Vec<String> = phi.support().iter().map(|(m, c)| format!("{c}/{m}^s")).collect();
    println!("Phi(s) = {} + ...", terms.join(" + "));

    let x = GaussianRational::from_fractions(2, 5, 1, 5).unwrap();
    let class = ClosedFormClass::of(&x).expect("known class");
    let [csls, _, isometries] = class.expected_tables(80);
    println!("x = {x} ({class:?})");
    for m in [1, 5, 13, 17, 25, 65] {
        let c = count_fx(&x, m as u64);
        println!(
            "  m = {m:>2}: f_x {} (series {}), Fhat_x {} (series {}), distinct cosets {}",
            c.f_x,
            csls.get(m),
            c.Fhat_x,
            isometries.get(m),
            c.cosets
        );
    }

    for (a, b, c, d) in [(0, 1, 0, 1), (1, 2, 0, 1), (1, 3, 1, 3), (2, 5, 2, 5), (2, 5, 1, 5)] {
        let x = GaussianRational::from_fractions(a, b, c, d).unwrap();
        let report = compare_enumeration_to_series(&x, 200).unwrap();
        println!("{x:<10} enumeration vs series up to 200: {}", if report.is_match() { "match" } else { "MISMATCH" });
    }
}
