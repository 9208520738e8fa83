//! Dense multivector arithmetic for `Cl(p,q)` with `p + q <= 4`.

mod blade;
mod center;
mod json;
mod multivector;
mod signature;

pub use blade::Blade;
pub use center::{center_decompose, CenterScalar};
pub use multivector::{geometric_product, Multivector};
pub use signature::{Signature, MAX_DIM};

/// Shorthand for the `Cl(3,0)` basis blade with the given 1-based indices.
pub fn blade30(indices: &[usize]) -> Multivector {
    Multivector::basis(Signature::CL30, indices)
}

/// Shorthand for the `Cl(0,3)` basis blade with the given 1-based indices.
pub fn blade03(indices: &[usize]) -> Multivector {
    Multivector::basis(Signature::CL03, indices)
}

/// Shorthand for a `Cl(1,3)` blade; index 1 is `gamma_0`, indices 2..4 are
/// `gamma_1..gamma_3`.
pub fn blade13(indices: &[usize]) -> Multivector {
    Multivector::basis(Signature::CL13, indices)
}
