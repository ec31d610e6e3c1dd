//! Exact and numeric computations for the q-deformed compact Lie groups `G_q`.
//!
//! The crate is `no_std` (it needs `alloc`) and carries no IO. It covers:
//!
//! * [`rootsys`]: finite-type Cartan data, the normalized invariant form, Weyl
//!   group actions, the longest element and positive roots;
//! * [`repdata`]: weight multiplicities of irreducible modules (Freudenthal)
//!   together with the classical Weyl dimension formula and the character
//!   formula specialized at `e(μ) = q^{2(μ,ρ)}`;
//! * [`qcalc`]: integer Laurent polynomials in `q`, q-integers, q-Pochhammer
//!   symbols, quantum dimensions and the exponents of the Woronowicz character;
//! * [`soibelman`]: truncated operator models of `C(SU_q(2))` and of the
//!   diagonal elements `|a_λ|` in the representation `π_{w₀}`;
//! * [`haar`]: Haar-state values obtained from the density on the quantum flag
//!   manifold;
//! * [`classify`]: the closed-subgroup invariant of product type actions of
//!   `SU_q(2)` and the resulting conjugacy verdicts.

#![no_std]
#![deny(unsafe_code)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod haar;
mod linalg;
pub mod qcalc;
pub mod repdata;
pub mod rootsys;
pub mod soibelman;

pub use error::{Error, Result};

/// Exact rational number used for pairings, prime exponents and `q`.
pub type Rational = num_rational::Ratio<i64>;
