//! Exact rational scalars, polynomials and matrices.

pub mod enclosure;
pub mod linalg;
pub mod matrix;
pub mod mpoly;
pub mod parse;
pub mod rational;
pub mod roots;
pub mod upoly;

pub use enclosure::{Enclosure, Interval};
pub use matrix::SymMatrix;
pub use mpoly::{Exponent, MultiPoly};
pub use rational::Rational;
pub use upoly::UniPoly;
