// Which coincidence rotations survive a shift of the lattice.

use num_bigint::BigInt;
use shifted_csl::coincidence::enumerate_numerators;
use shifted_csl::shifted::{eps_z_minus_conj, oc_membership, reduce_shift, Shift};
use shifted_csl::{GaussianRational, Isometry, Unit};

fn main() {
    let shifts = [(1, 2, 1, 2), (1, 2, 0, 1), (1, 3, 0, 1), (1, 3, 1, 3), (1, 5, 0, 1), (2, 5, 1, 5), (-3, 5, 4, 5)];
    let numerators = enumerate_numerators(&BigInt::from(65));
    for (a, b, c, d) in shifts {
        let x = GaussianRational::from_fractions(a, b, c, d).unwrap();
        let (y, q) = reduce_shift(&x);
        let shift = Shift::Rational(x.clone());
        print!("x = {x:<10} ~ {y:<10} via {q:<12}");
        for z in &numerators {
            let units: Vec<String> = Unit::ALL
                .into_iter()
                .filter(|&e| oc_membership(&shift, &Isometry::rotation(z.clone(), e).unwrap()))
                .map(|e| e.to_string())
                .collect();
            print!("  {z}: [{}]", units.join(" "));
        }
        println!();
    }

    // the defect eps z - conj z has a closed form in Re z and Im z
    let z = numerators[0].clone();
    for e in Unit::ALL {
        println!("eps = {e:>2}: eps z - conj z = {}", eps_z_minus_conj(&z, e));
    }
}
