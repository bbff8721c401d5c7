//! Exact desk-scale censuses of monic integer polynomials by Galois group.
//!
//! The crate provides exact big-integer polynomial arithmetic, certified
//! complex root finding, permutation-group machinery, Galois resolvents
//! with integer-coefficient certificates, a Galois-group identification
//! pipeline, exhaustive census engines with power-law exponent fitting,
//! and exact integer point counting on plane curves.

pub mod arith;
pub mod ball;
pub mod census;
pub mod identify;
pub mod modp;
pub mod perm;
pub mod poly;
pub mod resolvent;
pub mod roots;
