//! Exact wall-and-chamber structure for moduli of sheaves on the projective plane.
//!
//! Characters live in the `{1, ch1/ch0, ch2/ch0}`-plane. Every predicate is decided with exact
//! rational or quadratic-irrational arithmetic; there is no floating point anywhere except the
//! `to_f64` views used for drawing.

pub mod error;
pub mod exactnum;
pub mod exceptional;
pub mod ktheory;
pub mod lepotier;
pub mod quiver;
pub mod walls;

pub use error::{Error, Result};
pub use exactnum::{QuadraticScalar, Rational};
pub use exceptional::{DyadicIndex, ExceptionalBundle};
pub use ktheory::{ChernCharacter, PlaneLine, PlanePoint, StabilityPoint};
