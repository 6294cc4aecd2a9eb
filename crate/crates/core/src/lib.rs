//! Rotation of minuscule Littelmann paths and the cyclic sieving it carries.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`rootsys`]: Cartan data, weights and Weyl group actions for every finite type;
//! * [`paths`]: enumeration of minuscule Littelmann paths and the rotation `R`;
//! * [`crystal`]: minuscule tensor-product crystals, the Schützenberger
//!   involution and rotation through the crystal commutor;
//! * [`tableaux`]: the type A bijection with rectangular row-strict tableaux and promotion;
//! * [`kostka`]: Kostka-Foulkes polynomials (charge and q-Kostant) and invariant dimensions;
//! * [`csp`]: cyclotomic polynomials and exact cyclic sieving checks.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod crystal;
pub mod csp;
pub mod error;
pub mod kostka;
pub mod paths;
pub mod poly;
pub mod rootsys;
pub mod tableaux;

pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use rootsys::{Family, RootSystem, Weight, WeylWord};
