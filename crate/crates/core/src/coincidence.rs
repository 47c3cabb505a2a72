//! Coincidence isometries of the unshifted square lattice `Z[i]`.
//!
//! Every coincidence rotation is multiplication by `eps * z / conj(z)` where
//! the numerator `z` is a product of split Gaussian primes with `z / conj(z)`
//! reduced, and `eps` is a unit. Its CSL is the principal ideal `(z)` and its
//! index is `norm(z)`. Coincidence reflections are those maps followed by
//! complex conjugation and share the CSL and index of their rotation part.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::gaussian::{self, factor_integer, split_prime, GaussianInt, GaussianRational, Unit};
use crate::{Error, Result};

/// `R(z, eps)` or `R(z, eps) * T_r`.
///
/// `z` is always the canonical associate; rescaling `z` by a unit `u` changes
/// `z / conj(z)` by `u^2`, which [`Isometry::new`] folds into `eps`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Isometry {
    z: GaussianInt,
    eps: Unit,
    reflected: bool,
}

impl Isometry {
    /// Builds the isometry `w -> eps * z / conj(z) * w` (or `* conj(w)` when
    /// `reflected`). Any associate of a primitive numerator is accepted.
    pub fn new(z: GaussianInt, eps: Unit, reflected: bool) -> Result<Self> {
        let (canon, u) = z.canonical_associate()?;
        if !gaussian::gcd(&canon, &canon.conj())?.is_unit() {
            return Err(Error::NotPrimitive(z.to_string()));
        }
        Ok(Isometry { z: canon, eps: eps * u * u, reflected })
    }

    pub fn rotation(z: GaussianInt, eps: Unit) -> Result<Self> {
        Self::new(z, eps, false)
    }

    pub fn reflection(z: GaussianInt, eps: Unit) -> Result<Self> {
        Self::new(z, eps, true)
    }

    pub fn identity() -> Self {
        Self::point(Unit::One, false)
    }

    /// Complex conjugation `T_r`, the reflection along the real axis.
    pub fn conjugation() -> Self {
        Self::point(Unit::One, true)
    }

    /// The point-group element `w -> eps * w` or `w -> eps * conj(w)`.
    pub fn point(eps: Unit, reflected: bool) -> Self {
        Isometry { z: GaussianInt::one(), eps, reflected }
    }

    /// The eight symmetries of the square lattice, rotations first.
    pub fn point_group() -> Vec<Isometry> {
        [false, true].into_iter().flat_map(|r| Unit::ALL.into_iter().map(move |e| Self::point(e, r))).collect()
    }

    pub fn z(&self) -> &GaussianInt {
        &self.z
    }

    pub fn eps(&self) -> Unit {
        self.eps
    }

    pub fn is_reflection(&self) -> bool {
        self.reflected
    }

    pub fn is_rotation(&self) -> bool {
        !self.reflected
    }

    pub fn is_point_group(&self) -> bool {
        self.z.is_unit()
    }

    /// The rotation `R(z, eps)` with the reflection dropped.
    pub fn rotation_part(&self) -> Isometry {
        Isometry { reflected: false, ..self.clone() }
    }

    /// The complex number `eps * z / conj(z)`.
    pub fn multiplier(&self) -> GaussianRational {
        GaussianRational::new(self.z.mul_unit(self.eps), self.z.conj()).expect("nonzero numerator")
    }

    /// Coincidence index; the reflection flag does not matter.
    pub fn sigma(&self) -> BigInt {
        self.z.norm()
    }

    pub fn csl(&self) -> Csl {
        Csl { generator: self.z.clone() }
    }

    pub fn apply(&self, w: &GaussianRational) -> GaussianRational {
        let w = if self.reflected { w.conj() } else { w.clone() };
        &self.multiplier() * &w
    }

    /// `self ∘ other`, i.e. apply `other` first.
    ///
    /// The product numerator `z1 * z2` is divided by `g = gcd(z1, conj(z2))`
    /// on one side and `conj(g)` on the other so that the result is reduced.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        // A leading reflection conjugates the rotation part of `other`.
        let (z2, e2) = if self.reflected { (other.z.conj(), other.eps.conj()) } else { (other.z.clone(), other.eps) };
        let g = gaussian::gcd(&self.z, &z2.conj()).expect("numerators are nonzero");
        let h1 = self.z.exact_div(&g).expect("g divides z1");
        let h2 = z2.exact_div(&g.conj()).expect("conj(g) divides z2");
        Isometry::new(h1 * h2, self.eps * e2, self.reflected ^ other.reflected)
            .expect("product of coincidence isometries is a coincidence isometry")
    }

    pub fn inverse(&self) -> Isometry {
        if self.reflected {
            return self.clone();
        }
        Isometry::new(self.z.conj(), self.eps.conj(), false).expect("conjugate numerator is primitive")
    }
}

/// Table order: `(sigma, z, unit index, reflection flag)`.
impl Ord for Isometry {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.sigma(), &self.z, self.eps.index(), self.reflected).cmp(&(
            other.sigma(),
            &other.z,
            other.eps.index(),
            other.reflected,
        ))
    }
}

impl PartialOrd for Isometry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::gaussian::padded(f, |w| self.write_plain(w))
    }
}

impl Isometry {
    fn write_plain(&self, f: &mut dyn fmt::Write) -> fmt::Result {
        write!(f, "R({}, {})", self.z, self.eps)?;
        if self.reflected {
            f.write_str("T_r")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The coincidence site lattice `(z) = z Z[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Csl {
    generator: GaussianInt,
}

impl Csl {
    pub fn new(generator: GaussianInt) -> Result<Self> {
        Ok(Csl { generator: generator.canonical_associate()?.0 })
    }

    pub fn generator(&self) -> &GaussianInt {
        &self.generator
    }

    /// Index in `Z[i]`, equal to the norm of the generator.
    pub fn index(&self) -> BigInt {
        self.generator.norm()
    }

    /// The lattice basis `{z, iz}`.
    pub fn basis(&self) -> [GaussianInt; 2] {
        [self.generator.clone(), self.generator.mul_unit(Unit::I)]
    }

    pub fn contains(&self, w: &GaussianInt) -> bool {
        w.exact_div(&self.generator).is_some()
    }
}

/// Builds `eps * prod (w_p / conj(w_p))^{n_p}` from exponents keyed by split
/// rational primes. The numerator takes `w_p^{n_p}` for positive exponents and
/// `conj(w_p)^{-n_p}` for negative ones.
pub fn isometry_from_exponents(exponents: &BTreeMap<BigInt, i64>, eps: Unit, reflected: bool) -> Result<Isometry> {
    let mut z = GaussianInt::one();
    for (p, &n) in exponents {
        let w = split_prime(p)?;
        let power = u32::try_from(n.unsigned_abs()).map_err(|_| Error::NotSplitPrime(p.clone()))?;
        let base = if n >= 0 { w } else { w.conj() };
        z = z * base.pow(power);
    }
    Isometry::new(z, eps, reflected)
}

/// All primitive numerators of norm `m`, canonical and sorted.
///
/// Each prime power `p^k` of `m` contributes either `w_p^k` or
/// `conj(w_p)^k`, so there are `2^(number of distinct primes)` of them, or
/// none when some prime factor of `m` is not `1 mod 4`.
pub fn enumerate_numerators(m: &BigInt) -> Vec<GaussianInt> {
    let Ok(primes) = factor_integer(m) else {
        return Vec::new();
    };
    let four = BigInt::from(4);
    let mut out = vec![GaussianInt::one()];
    for (p, k) in primes {
        if p.mod_floor(&four) != BigInt::one() {
            return Vec::new();
        }
        let w = split_prime(&p).expect("p = 1 mod 4 is prime");
        let choices = [w.pow(k), w.conj().pow(k)];
        out = out.iter().flat_map(|z| choices.iter().map(move |c| z * c)).collect();
    }
    let mut out: Vec<GaussianInt> = out.into_iter().map(|z| z.normalized()).collect();
    out.sort_by(|a, b| (a.re(), a.im()).cmp(&(b.re(), b.im())));
    out
}

/// Every coincidence isometry of `Z[i]` with index `m`, in table order.
pub fn isometries_of_index(m: &BigInt) -> Vec<Isometry> {
    let mut out: Vec<Isometry> = enumerate_numerators(m)
        .into_iter()
        .flat_map(|z| {
            Unit::ALL.into_iter().flat_map(move |eps| {
                let z = z.clone();
                [false, true]
                    .into_iter()
                    .map(move |r| Isometry::new(z.clone(), eps, r).expect("enumerated numerators are primitive"))
            })
        })
        .collect();
    out.sort();
    out
}

/// Number of CSLs of `Z[i]` with index `m`: multiplicative, `f(p^r) = 2` for
/// `p = 1 mod 4` and `0` for the other primes.
pub fn f(m: u64) -> u64 {
    assert!(m >= 1, "index must be positive");
    factor_integer(&BigInt::from(m))
        .expect("m >= 1")
        .iter()
        .map(|(p, _)| if (p % 4u32).to_u32() == Some(1) { 2 } else { 0 })
        .product()
}

/// Number of coincidence rotations of `Z[i]` with index `m`.
pub fn f_hat(m: u64) -> u64 {
    4 * f(m)
}
