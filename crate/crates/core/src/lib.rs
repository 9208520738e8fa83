//! Weyl, Pauli and Dirac spinors in the real Clifford algebras `Cl(3,0)` and
//! `Cl(0,3)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: dense multivectors for `Cl(p,q)`, `p + q <= 4`.
//! - [`repr`]: the 2x2 complex representation of `Cl(3,0)`, the 4x4 Dirac
//!   representation of `Cl(1,3)+` and the isomorphism between them.
//! - [`weyl`]: the four Weyl spinor ideals, spinorial metrics and `SL(2,C)`.
//! - [`dirac`]: the Dirac-Hestenes equation in `Cl(3,0)` and its plane waves.
//! - [`paravector`]: null paravectors built from Weyl spinors.
//! - [`cl03`]: the `Cl(0,3) = H + H` sector and the sigma map.
//! - [`verify`]: seeded randomized sweeps over all of the above.

pub mod algebra;
pub mod cl03;
pub mod dirac;
pub mod error;
pub mod field;
pub mod paravector;
pub mod repr;
pub mod verify;
pub mod weyl;

pub use algebra::{Blade, CenterScalar, Multivector, Signature};
pub use error::{Error, Result};
pub use field::{Field, SpacetimePoint};
