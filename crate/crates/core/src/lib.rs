//! Finite combinatorics of weak identity arrows.
//!
//! * [`ordinal`]: the simplex category `Δ`.
//! * [`fat`]: coloured ordinals, `T`, and the fat delta with its projection to `Δ`.
//! * [`fincat`]: finite categories and functors, with components, truncation,
//!   discrete objects and fibre products over them.
//! * [`fairset`]: fair categories in `Set` as triples `(O, A, U)`, and their
//!   equivalence with ordinary categories.
//! * [`twocat`], [`fairtwo`], [`bicat`]: semi-2-categories, fair categories in `Cat`,
//!   and bicategories with strict composition and weak units.

pub mod bicat;
pub mod error;
pub mod fairset;
pub mod fairtwo;
pub mod fat;
pub mod fincat;
pub mod gen;
pub mod json;
pub mod ordinal;
pub mod par;
pub mod twocat;

pub use error::{Error, Result};
