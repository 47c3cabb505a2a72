use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{oc_membership, translation_vector, Shift};
use crate::coincidence::{isometries_of_index, Isometry};
use crate::gaussian::GaussianRational;

/// Counts at a fixed index `m` for a rational shift.
#[allow(non_snake_case)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FxCounts {
    /// Distinct CSLs of index `m`, i.e. distinct lattices `(z)` of which the
    /// shifted CSLs are translates.
    pub f_x: u64,
    /// Coincidence rotations of index `m`.
    pub fhat_x: u64,
    /// Coincidence rotations and reflections of index `m`.
    pub Fhat_x: u64,
    /// Distinct point sets `x + t + (z)`. This can exceed `f_x` when several
    /// member reflections share `(z)` but not the translation class.
    pub cosets: u64,
}

/// Coincidence isometries of `x + Z[i]` with index `m`, in table order.
pub fn member_isometries(x: &GaussianRational, m: &BigInt) -> Vec<Isometry> {
    let shift = Shift::Rational(x.clone());
    isometries_of_index(m).into_iter().filter(|s| oc_membership(&shift, s)).collect()
}

/// Enumerates every isometry of index `m` and counts the members. Two members
/// give the same point set exactly when they share the ideal `(z)` and their
/// translations agree modulo `(z)`.
pub fn count_fx(x: &GaussianRational, m: u64) -> FxCounts {
    let mut counts = FxCounts::default();
    let mut lattices = BTreeSet::new();
    let mut cosets = BTreeSet::new();
    for s in member_isometries(x, &BigInt::from(m)) {
        if s.is_rotation() {
            counts.fhat_x += 1;
        }
        counts.Fhat_x += 1;
        let t = translation_vector(x, &s).expect("members have a translation vector");
        lattices.insert(s.z().clone());
        cosets.insert((s.z().clone(), t));
    }
    counts.f_x = lattices.len() as u64;
    counts.cosets = cosets.len() as u64;
    counts
}
