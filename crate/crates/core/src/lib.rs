//! Exact arithmetic for the cyclic sieving phenomenon.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactroots`] decides whether an integer polynomial takes integer values at
//!   all `n`-th roots of unity and computes those values through the divisor
//!   bases `g_d` / `h_d`, never touching floating point or cyclotomic fields.
//! * [`sieve`] turns an evaluation table into orbit counts and decides whether a
//!   cyclic action complementing the polynomial to a CSP can exist.
//! * [`schur`] handles partitions, abacus cores and quotients, principal
//!   specializations of Schur polynomials and Murnaghan–Nakayama characters.
//! * [`cone`] works with CSP matrices: exact membership, the universal
//!   projection, swap decompositions, the half-space description, extreme rays
//!   and lattice-point counts for prime `n`.
//!
//! Every computation is exact (`BigInt` / `BigRational`).

pub mod arith;
pub mod cone;
pub mod error;
pub mod exactroots;
pub mod json;
pub mod linalg;
pub mod schur;
pub mod sieve;

pub use cone::{CspMatrix, HalfSpaceSystem, Swap, UniversalVector};
pub use error::{Error, Result};
pub use exactroots::{CycPoly, DivisorDecomp, EvalTable, MultiPoly};
pub use schur::{Abacus, CoreQuotient, IntPolynomial, Partition};
pub use sieve::{AdHocAction, CspDecision, OrbitProfile, Rejection, Verdict};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
