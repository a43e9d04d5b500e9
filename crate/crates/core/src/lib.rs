//! Torus-equivariant fundamental, Chern–Schwartz–MacPherson and motivic
//! Chern classes of Borel orbits of square-zero upper-triangular matrices.
//!
//! Classes are produced by applying Demazure–Lusztig type operators along a
//! reduced word to the class of the minimal orbit of the same rank, and are
//! checked against independent computations: fixed-point localization,
//! double Schubert and Grothendieck polynomials, Porteous determinants and
//! trigonometric weight functions.

pub mod classes;
pub mod combin;
pub mod error;
pub mod operators;
pub mod ring;
pub mod schubert;
pub mod verify;
pub mod weightfn;

pub use error::{Error, Result};
