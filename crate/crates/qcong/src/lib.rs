//! Exact arithmetic for multiple q-harmonic sums and their congruences in
//! the quotient ring Q[q]/Phi_p(q).
//!
//! The crate provides:
//! - exact scalars, polynomials, rational functions and truncated power
//!   series over arbitrary-precision rationals ([`rational`], [`poly`],
//!   [`ratfunc`], [`series`]);
//! - the cyclotomic quotient ring in which congruences "mod [p]_q" are
//!   decided ([`cyclo`]);
//! - q-integers, Gaussian q-binomials and Chebyshev polynomials
//!   ([`qobjects`]);
//! - Bernoulli/Stirling sequences and the K_n(p) coefficients with three
//!   independent computation routes ([`special`]);
//! - evaluators for strict, non-strict and mixed-strictness multiple
//!   q-harmonic sums ([`qmhs`]);
//! - a registry of named congruence and identity checks plus the cyclic-sum
//!   conjecture lab ([`verify`]).
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod cyclo;
pub mod poly;
pub mod qmhs;
pub mod qobjects;
pub mod ratfunc;
pub mod rational;
pub mod series;
pub mod special;
pub mod verify;

pub use cyclo::{CycloElement, CycloError, CycloModulus};
pub use poly::Poly;
pub use qmhs::{IndexSpec, MixedSpec};
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use series::Series;
