//! Dirichlet-series coefficients of Euler products, and the cross-check of
//! enumerated CSL counts against the known closed forms.
//!
//! A local factor at the prime `p` is given by its expansion
//! `c_0 + c_1 p^-s + c_2 p^-2s + ...` with `c_0 = 1`. All factors that occur
//! here are of the form `(1 + a t) / (1 - t)`, i.e. `1, 1+a, 1+a, ...`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::gaussian::GaussianRational;
use crate::shifted::{count_fx, reduce_shift};
use crate::{Error, Result};

/// Expansion of one local factor in powers of `p^-s`: explicit leading
/// coefficients followed by a constant tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalExpansion {
    head: Vec<BigUint>,
    tail: BigUint,
}

impl LocalExpansion {
    pub fn new(head: Vec<BigUint>, tail: BigUint) -> Result<Self> {
        if head.first() != Some(&BigUint::one()) {
            return Err(Error::InvalidLocalFactor("constant term must be 1".into()));
        }
        Ok(LocalExpansion { head, tail })
    }

    /// The trivial factor `1`.
    pub fn trivial() -> Self {
        Self::constant_tail(0)
    }

    /// `1 + c t + c t^2 + ...`, i.e. `(1 + (c-1) t) / (1 - t)`.
    pub fn constant_tail(c: u64) -> Self {
        LocalExpansion { head: vec![BigUint::one()], tail: BigUint::from(c) }
    }

    pub fn coefficient(&self, k: usize) -> &BigUint {
        self.head.get(k).unwrap_or(&self.tail)
    }
}

type Rule = Arc<dyn Fn(u64) -> LocalExpansion + Send + Sync>;

/// Per-prime rule producing the local factor of an Euler product.
#[derive(Clone)]
pub struct LocalFactorSpec {
    rule: Rule,
    overrides: BTreeMap<u64, LocalExpansion>,
}

impl LocalFactorSpec {
    pub fn new(rule: impl Fn(u64) -> LocalExpansion + Send + Sync + 'static) -> Self {
        LocalFactorSpec { rule: Arc::new(rule), overrides: BTreeMap::new() }
    }

    /// Replaces the local factor at `p`.
    pub fn with_override(mut self, p: u64, factor: LocalExpansion) -> Self {
        self.overrides.insert(p, factor);
        self
    }

    pub fn local(&self, p: u64) -> LocalExpansion {
        self.overrides.get(&p).cloned().unwrap_or_else(|| (self.rule)(p))
    }

    /// Every factor equal to `1`.
    pub fn trivial() -> Self {
        Self::new(|_| LocalExpansion::trivial())
    }

    /// `prod_{p = 1 mod 4} (1 + p^-s) / (1 - p^-s)`: CSLs of the square lattice.
    pub fn square_lattice() -> Self {
        Self::new(|p| if p % 4 == 1 { LocalExpansion::constant_tail(2) } else { LocalExpansion::trivial() })
    }

    /// The square-lattice product with the factor at `p` removed.
    pub fn square_lattice_without(p: u64) -> Self {
        Self::square_lattice().with_override(p, LocalExpansion::trivial())
    }

    /// The square-lattice product with the factor at 5 replaced by `1/(1 - 5^-s)`.
    pub fn interior_fifth_csls() -> Self {
        Self::square_lattice().with_override(5, LocalExpansion::constant_tail(1))
    }

    /// The square-lattice product with the factor at 5 replaced by
    /// `(1 + 3·5^-s)/(1 - 5^-s)`.
    pub fn interior_fifth_isometries() -> Self {
        Self::square_lattice().with_override(5, LocalExpansion::constant_tail(4))
    }
}

impl fmt::Debug for LocalFactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LocalFactorSpec").field("overrides", &self.overrides).finish_non_exhaustive()
    }
}

/// Coefficients `a(1..=limit)` of a Dirichlet series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    values: Vec<BigUint>,
}

impl CoefficientTable {
    pub fn from_values(values: Vec<BigUint>) -> Self {
        assert!(!values.is_empty(), "a coefficient table needs limit >= 1");
        CoefficientTable { values }
    }

    pub fn limit(&self) -> usize {
        self.values.len()
    }

    /// `a(m)` for `1 <= m <= limit`.
    pub fn get(&self, m: usize) -> &BigUint {
        &self.values[m - 1]
    }

    pub fn get_u64(&self, m: usize) -> u64 {
        self.get(m).to_u64().expect("coefficient fits in u64")
    }

    /// Nonzero coefficients as `(m, a(m))`.
    pub fn support(&self) -> Vec<(usize, BigUint)> {
        (1..=self.limit()).filter(|&m| !self.get(m).is_zero()).map(|m| (m, self.get(m).clone())).collect()
    }

    fn scaled(&self, k: u64) -> CoefficientTable {
        CoefficientTable { values: self.values.iter().map(|v| v * k).collect() }
    }
}

fn primes_up_to(limit: usize) -> Vec<usize> {
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for n in 2..=limit {
        if !composite[n] {
            primes.push(n);
            let mut k = n * n;
            while k <= limit {
                composite[k] = true;
                k += n;
            }
        }
    }
    primes
}

/// Multiplies out the Euler product up to `limit`.
///
/// Primes are folded in ascending order; before handling `p` the table is
/// supported on `p`-free integers, so the convolution can write the
/// multiples of `p` in place.
pub fn euler_coefficients(spec: &LocalFactorSpec, limit: usize) -> CoefficientTable {
    assert!(limit >= 1, "limit must be positive");
    let mut values = vec![BigUint::zero(); limit + 1];
    values[1] = BigUint::one();
    for p in primes_up_to(limit) {
        let local = spec.local(p as u64);
        for m in 1..=limit / p {
            if m % p == 0 || values[m].is_zero() {
                continue;
            }
            let base = values[m].clone();
            let (mut k, mut target) = (1, m * p);
            while target <= limit {
                values[target] = &base * local.coefficient(k);
                k += 1;
                match target.checked_mul(p) {
                    Some(t) => target = t,
                    None => break,
                }
            }
        }
    }
    values.remove(0);
    CoefficientTable { values }
}

/// `a(1) = 1` and `a(mn) = a(m) a(n)` for every coprime pair with `mn <= limit`.
pub fn verify_multiplicative(table: &CoefficientTable) -> bool {
    if !table.get(1).is_one() {
        return false;
    }
    let limit = table.limit();
    for m in 2..=limit {
        for n in m + 1..=limit / m {
            if m.gcd(&n) == 1 && table.get(m * n) != &(table.get(m) * table.get(n)) {
                return false;
            }
        }
    }
    true
}

/// The shift classes with a known closed form, named by their representative
/// in the fundamental triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormClass {
    /// `x ∈ Z[i]`.
    Lattice,
    /// `1/2 + 1/2 i`, the centre of a square.
    SquareCenter,
    /// `1/2`, the midpoint of an edge.
    EdgeMidpoint,
    /// `1/3` or `1/3 + 1/3 i`.
    Thirds,
    /// `1/5`, `2/5`, `1/5 + 1/5 i` or `2/5 + 2/5 i`.
    BoundaryFifths,
    /// `2/5 + 1/5 i`.
    InteriorFifth,
}

/// Expected `(f_x, fhat_x, Fhat_x)` columns, each a scaled Euler product.
struct ClosedForm {
    columns: [(u64, LocalFactorSpec); 3],
}

impl ClosedFormClass {
    pub fn of(x: &GaussianRational) -> Option<Self> {
        let (y, _) = reduce_shift(x);
        let key = (y.re(), y.im());
        let frac = |n: i64, d: i64| num_rational::BigRational::new(BigInt::from(n), BigInt::from(d));
        [
            ((0, 1, 0, 1), ClosedFormClass::Lattice),
            ((1, 2, 1, 2), ClosedFormClass::SquareCenter),
            ((1, 2, 0, 1), ClosedFormClass::EdgeMidpoint),
            ((1, 3, 0, 1), ClosedFormClass::Thirds),
            ((1, 3, 1, 3), ClosedFormClass::Thirds),
            ((1, 5, 0, 1), ClosedFormClass::BoundaryFifths),
            ((2, 5, 0, 1), ClosedFormClass::BoundaryFifths),
            ((1, 5, 1, 5), ClosedFormClass::BoundaryFifths),
            ((2, 5, 2, 5), ClosedFormClass::BoundaryFifths),
            ((2, 5, 1, 5), ClosedFormClass::InteriorFifth),
        ]
        .into_iter()
        .find(|((a, b, c, d), _)| key == (frac(*a, *b), frac(*c, *d)))
        .map(|(_, class)| class)
    }

    fn closed_form(self) -> ClosedForm {
        use LocalFactorSpec as S;
        let columns = match self {
            ClosedFormClass::Lattice | ClosedFormClass::SquareCenter => {
                [(1, S::square_lattice()), (4, S::square_lattice()), (8, S::square_lattice())]
            }
            ClosedFormClass::EdgeMidpoint => {
                [(1, S::square_lattice()), (2, S::square_lattice()), (4, S::square_lattice())]
            }
            ClosedFormClass::Thirds => [(1, S::square_lattice()), (1, S::square_lattice()), (2, S::square_lattice())],
            ClosedFormClass::BoundaryFifths => [
                (1, S::square_lattice_without(5)),
                (1, S::square_lattice_without(5)),
                (2, S::square_lattice_without(5)),
            ],
            ClosedFormClass::InteriorFifth => {
                [(1, S::interior_fifth_csls()), (1, S::square_lattice_without(5)), (1, S::interior_fifth_isometries())]
            }
        };
        ClosedForm { columns }
    }

    /// The `(f_x, fhat_x, Fhat_x)` coefficient tables up to `limit`.
    pub fn expected_tables(self, limit: usize) -> [CoefficientTable; 3] {
        self.closed_form().columns.map(|(scale, spec)| euler_coefficients(&spec, limit).scaled(scale))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Column {
    Csls,
    Rotations,
    Isometries,
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Column::Csls => "f_x",
            Column::Rotations => "fhat_x",
            Column::Isometries => "Fhat_x",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub m: u64,
    pub column: Column,
    pub expected: u64,
    pub actual: u64,
}

#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub shift: GaussianRational,
    pub limit: u64,
    pub class: ClosedFormClass,
    pub mismatches: Vec<Mismatch>,
}

impl SeriesReport {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Enumerates `f_x, fhat_x, Fhat_x` for every `m <= limit` and diffs them
/// against the closed-form coefficients of the shift's class.
pub fn compare_enumeration_to_series(x: &GaussianRational, limit: u64) -> Result<SeriesReport> {
    let class = ClosedFormClass::of(x).ok_or_else(|| Error::NoClosedForm(x.to_string()))?;
    let [f_tab, fhat_tab, fhat_all_tab] = class.expected_tables(limit as usize);
    let mut mismatches = Vec::new();
    for m in 1..=limit {
        let counts = count_fx(x, m);
        let idx = m as usize;
        for (column, table, actual) in [
            (Column::Csls, &f_tab, counts.f_x),
            (Column::Rotations, &fhat_tab, counts.fhat_x),
            (Column::Isometries, &fhat_all_tab, counts.Fhat_x),
        ] {
            let expected = table.get_u64(idx);
            if expected != actual {
                mismatches.push(Mismatch { m, column, expected, actual });
            }
        }
    }
    Ok(SeriesReport { shift: x.clone(), limit, class, mismatches })
}

/// Coefficients of the square-lattice product as plain integers, `a(1..=limit)`.
pub fn square_lattice_coefficients(limit: usize) -> Vec<u64> {
    let table = euler_coefficients(&LocalFactorSpec::square_lattice(), limit);
    (1..=limit).map(|m| table.get_u64(m)).collect()
}
