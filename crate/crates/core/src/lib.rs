//! Exact rational classical invariants of knots given by surgery diagrams,
//! and linearized Legendrian contact homology of twist-knot families in lens
//! spaces.

// Matrix code reads more clearly with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod connectsum;
pub mod dga;
pub mod diagram;
mod error;
pub mod exact;
pub mod families;
pub mod grading;
pub mod surgery;

pub use error::{Error, Result};

/// Arbitrary-precision integer backing.
pub use num_bigint::BigInt;

pub type Rational64 = exact::Rational<i64>;
pub type Rational128 = exact::Rational<i128>;
pub type BigRational = exact::Rational<BigInt>;

pub type Grading64 = grading::Grading<i64>;
pub type BigGrading = grading::Grading<BigInt>;
pub type Polynomial64 = grading::PoincarePolynomial<i64>;
pub type BigPolynomial = grading::PoincarePolynomial<BigInt>;

pub type Presentation64 = surgery::SurgeryPresentation<i64>;
pub type BigPresentation = surgery::SurgeryPresentation<BigInt>;
pub type Dga64 = dga::Dga<i64>;
