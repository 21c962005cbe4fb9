//! Multiplicities of the trivial and sign representations of `S_n` inside
//! Weyl modules `W_λ(ℂⁿ)` for two-column and hook shapes `λ`.
//!
//! Four independent routes compute the same numbers:
//!
//! * [`charpoly`]: moments and signed moments of character polynomials,
//! * [`counts`]: positive combinatorial formulas and the sign-reversing
//!   involutions behind them,
//! * [`series`]: coefficient extraction from truncated generating functions,
//! * [`oracle`]: Murnaghan–Nakayama characters and inner products.
//!
//! [`verify`] cross-checks all of them; [`report`] is the dispatch layer used
//! by the command line and the browser demo.

pub mod arith;
pub mod charpoly;
pub mod counts;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod report;
pub mod series;
pub mod verify;

pub use arith::Rational;
pub use charpoly::{CharPoly, CycleType, Shape};
pub use error::{Error, Result};
pub use partitions::{PaddedPartition, Partition, StrictPartition};
