// Coincidence rotations and CSLs of the unshifted square lattice.

use num_bigint::BigInt;
use shifted_csl::coincidence::{f, f_hat, isometries_of_index};
use shifted_csl::{GaussianInt, Isometry, Unit};

fn main() {
    println!("{:>4} {:>5} {:>6}", "m", "f(m)", "fhat(m)");
    for m in (1..=65).filter(|&m| f(m) > 0) {
        println!("{m:>4} {:>5} {:>6}", f(m), f_hat(m));
    }

    let r = Isometry::rotation(GaussianInt::from_i64(2, 1), Unit::One).unwrap();
    let csl = r.csl();
    let [b1, b2] = csl.basis();
    println!("{r}: multiplier {}, index {}, basis {b1}, {b2}", r.multiplier(), csl.index());

    // all coincidence isometries of index 25, rotations and reflections
    for s in isometries_of_index(&BigInt::from(25)) {
        println!("  {s}  (inverse {})", s.inverse());
    }
}
