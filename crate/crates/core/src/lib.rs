//! Exact coincidence site lattices (CSLs) of the square lattice `Z[i]` and of
//! its shifted copies `x + Z[i]`.
//!
//! The square lattice is identified with the Gaussian integers. A coincidence
//! rotation is multiplication by `eps * z / conj(z)` for a primitive numerator
//! `z` and a unit `eps`; a coincidence reflection composes that map with complex
//! conjugation. Everything here is exact: arbitrary-precision integers, reduced
//! Gaussian rationals, and symbolic descriptors for irrational shifts.
//!
//! Module map:
//!
//! - [`gaussian`]: arithmetic in `Z[i]` and `Q(i)`, gcd, factorization.
//! - [`coincidence`]: coincidence isometries of the unshifted lattice.
//! - [`shifted`]: membership, CSL cosets, group structure and counting for `x + Z[i]`.
//! - [`series`]: Dirichlet-series coefficients from Euler products.
//! - [`oracle`]: brute-force geometric verifier, independent of the analytic tests.
//! - [`cli`]: command implementations behind the `csl` binary (tables, JSON, SVG).

pub mod cli;
pub mod coincidence;
mod error;
pub mod gaussian;
pub mod oracle;
pub mod series;
pub mod shifted;

pub use coincidence::{Csl, Isometry};
pub use error::{Error, Result};
pub use gaussian::{Factorization, GaussianInt, GaussianRational, Unit};
pub use oracle::Window;
pub use shifted::{IrrationalShift, OcStructure, Shift, ShiftedCsl};
