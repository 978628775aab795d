//! Exact rational scalars and sparse linear maps between labeled bases.

mod echelon;
mod label;
mod linmap;
mod scalar;

pub use echelon::{bareiss_rank, commutant_dimension, intertwiner_dimension, rank, sparse_rank, Echelon};
pub use label::BasisLabel;
pub use linmap::LinMap;
pub use scalar::{format_rational, parse_rational, Rational};
pub(crate) use scalar::int;
