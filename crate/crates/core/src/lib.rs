//! Exact-arithmetic verification of two families of Nekrasov-Okounkov type
//! q-series identities built from the topological vertex.
//!
//! The headline partition functions are computed three independent ways
//! (raw vertex-pair sums, hook-weighted infinite sums, infinite products)
//! as truncated formal power series with exact rational coefficients, and
//! compared coefficient by coefficient. Supporting combinatorial lemmas,
//! Fock-space trace formulas and the polynomial corollaries are verified
//! the same way.

pub mod fock;
pub mod identities;
pub mod laurent;
pub mod partitions;
pub mod qseries;
pub mod schur;
pub mod tpoly;
pub mod vertex;

pub use laurent::LaurentSeries;
pub use partitions::Partition;
pub use qseries::{MSeries, Monomial, VarTable};
pub use tpoly::TPoly;

pub type Rat = num_rational::BigRational;
pub type Int = num_bigint::BigInt;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from(Int::from(n))
}
