//! Exact q-series toolkit for rank/crank congruences of partitions.
//!
//! The crate is organized as a small stack:
//!
//! - [`series`]: truncated Laurent series over pluggable coefficient rings.
//! - [`products`]: q-Pochhammer and theta products, plus the named
//!   Rogers-Ramanujan-style families.
//! - [`lerch`]: bilateral Lerch sums, Lambert series, and Appell-Lerch
//!   functions at monomial arguments.
//! - [`partitions`]: a brute-force enumeration oracle for p(n), the Dyson
//!   rank, and the Andrews-Garvan crank.
//! - [`verify`]: the identity registry and the parallel suite runner.

pub mod error;
pub mod lerch;
pub mod partitions;
pub mod products;
pub mod series;
pub mod verify;

pub use error::{QError, Result};
pub use series::{CoefRing, DualRational, QSeries, Rational, ZLaurent};
