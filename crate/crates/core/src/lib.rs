//! Exact computations with permutation modules, spider and ladder diagrams,
//! Kronecker products of permutation modules, and Brauer algebras.
//!
//! Every scalar is an exact rational number; there is no floating point
//! anywhere in the crate. The modules build on each other roughly bottom-up:
//!
//! * [`linear`] holds rationals, sparse labeled matrices and rank routines.
//! * [`combinatorics`] holds compositions, partitions and contingency matrices.
//! * [`tabloid`] realizes permutation modules on tabloid bases.
//! * [`spider`] parses, prints and evaluates diagrams into tabloid morphisms.
//! * [`kronecker`] decomposes tensor products of permutation modules.
//! * [`brauer`] covers Brauer algebras and their commuting Lie actions.
//! * [`doty`] checks saturation and Schur-algebra dimension identities.

pub mod brauer;
pub mod combinatorics;
pub mod doty;
mod error;
pub mod kronecker;
pub mod linear;
pub mod report;
pub mod spider;
pub mod tabloid;

pub use error::{Error, Result};
pub use linear::{BasisLabel, LinMap, Rational};
