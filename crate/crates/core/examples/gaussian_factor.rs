// Factoring in Z[i]: split primes, gcds and Bezout coefficients.

use num_bigint::BigInt;
use shifted_csl::gaussian::{extended_gcd, factor, split_prime};
use shifted_csl::GaussianInt;

fn main() {
    for (re, im) in [(5, 0), (4, 7), (-3, 2), (0, 130), (11, 0)] {
        let z = GaussianInt::from_i64(re, im);
        let fac = factor(&z).expect("nonzero");
        println!("{z:>6} = {fac}   (norm {})", z.norm());
        assert_eq!(fac.product(), z);
    }

    for p in [5u32, 13, 17, 29, 1_000_000_009] {
        let w = split_prime(&BigInt::from(p)).expect("p = 1 mod 4");
        println!("{p} = N({w})");
    }

    let (a, b) = (GaussianInt::from_i64(11, 3), GaussianInt::from_i64(1, 8));
    let (g, u, v) = extended_gcd(&a, &b).expect("not both zero");
    println!("gcd({a}, {b}) = {g} = ({u})({a}) + ({v})({b})");
    assert_eq!(&(&u * &a) + &(&v * &b), g);
}
