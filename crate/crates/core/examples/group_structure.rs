// Group structure of OC(x + Z[i]) for rational and irrational shifts.

use num_bigint::BigInt;
use num_rational::BigRational;
use shifted_csl::shifted::{group_structure, Verdict};
use shifted_csl::{GaussianRational, IrrationalShift, Shift};

fn main() {
    let mut shifts: Vec<Shift> = [(0, 1, 0, 1), (1, 2, 1, 2), (1, 2, 0, 1), (1, 3, 1, 3), (2, 5, 1, 5), (1, 7, 3, 7)]
        .into_iter()
        .map(|(a, b, c, d)| GaussianRational::from_fractions(a, b, c, d).unwrap().into())
        .collect();
    shifts.extend([
        // 1/sqrt2 + (1/sqrt3) i
        IrrationalShift::BothIrrIndependent.into(),
        // sqrt2 - (sqrt2/2) i, so a = -2 b
        IrrationalShift::BothIrrDependent { p1: 0.into(), q1: 1.into(), p2: (-2).into(), q2: 1.into() }.into(),
        IrrationalShift::AIrrBRat { b: BigRational::new(BigInt::from(1), BigInt::from(2)) }.into(),
    ]);

    for shift in &shifts {
        let report = group_structure(shift, 65);
        let verdict = match report.verdict {
            Verdict::Proven => "proven".to_string(),
            Verdict::Bounded { bound } => format!("checked to index {bound}"),
            Verdict::Refuted => "refuted".to_string(),
        };
        print!("{shift:<14} group: {:<5} {verdict:<22} [{}]", report.is_group, report.note);
        if let Some(t) = &report.decomposition {
            print!("  reflection {t}");
        }
        if let Some((t1, t2)) = &report.witness {
            print!("  {t1} * {t2} = {}", t1.compose(t2));
        }
        println!();
    }
}
