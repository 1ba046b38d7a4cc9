//! An exact-arithmetic laboratory for tridiagonal pairs of q-geometric type.
//!
//! The crate constructs tridiagonal pairs on finite-dimensional rational
//! vector spaces, builds the auxiliary operators B, B*, K, K* from
//! split-decomposition eigendata, assembles the two quantum affine sl2
//! module structures they carry, and verifies every operator identity
//! involved to exact zero. Everything is computed over arbitrary-precision
//! rationals; there is no floating point and no tolerance anywhere.
//!
//! The linear algebra core is generic over an exact [`field::Field`] scalar;
//! the concrete aliases below fix the shipped instantiation.

pub mod decomposition;
pub mod error;
pub mod field;
pub mod instances;
pub mod io;
pub mod matrix;
pub mod octet;
pub mod pair;
pub mod quartet;
pub mod report;
pub mod span;
pub mod subspace;
#[cfg(test)]
pub(crate) mod testutil;

pub use decomposition::{DecName, Decomposition};
pub use error::Error;
pub use field::{q_bracket, Field, FieldConfig};
pub use matrix::Matrix;
pub use pair::{verify_tridiagonal_pair, PairCheck, PairReport, ShapeVector, TridiagonalPair};
pub use quartet::{build_quartet, OperatorQuartet};
pub use subspace::{direct_sum_check, eigenspace, kernel, subspace_intersect, subspace_sum, Subspace};

/// Arbitrary-precision exact rational scalar, the shipped field.
pub type Rat = num::BigRational;

/// Dense matrix over [`Rat`].
pub type Mat = Matrix<Rat>;

/// Convenience constructor for small rational scalars.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(num::BigInt::from(numer), num::BigInt::from(denom))
}

/// Rational vector from integer entries.
pub fn vecr(entries: &[i64]) -> Vec<Rat> {
    entries.iter().map(|&x| rat(x, 1)).collect()
}

/// Rational matrix from integer rows.
pub fn mat(rows: &[&[i64]]) -> Mat {
    Mat::from_rows(rows.iter().map(|r| vecr(r)).collect())
}
