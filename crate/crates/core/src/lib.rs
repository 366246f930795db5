//! Exact-arithmetic toolkit for finitely presented graded algebras.
//!
//! Everything is computed over GF(p) or arbitrary-precision rationals; no
//! floating point and no tolerances anywhere. The pieces:
//!
//! - [`presentation`]: graded presentations, free-algebra arithmetic, and
//!   the `.alg` text format;
//! - [`dims`]: graded component dimensions by degreewise elimination;
//! - [`koszul`]: the two boundary matrices per degree, their exactness,
//!   the Euler identity, and the generator/relation inequality;
//! - [`series`]: truncated power series, the positivity order, and the
//!   infinite-dimensionality certificates;
//! - [`serre`]: growth witnesses for the unboundedness recurrence, over
//!   exact quadratic numbers;
//! - [`group`]: the group-algebra side, from Fox derivatives and
//!   power-series valuations to augmentation filtrations and Smith normal
//!   form.
//!
//! Per-degree computations are independent and fan out through a rayon
//! pool when the `parallel` feature (default) is on; disabling it swaps in
//! plain iteration with identical results.

pub mod corpus;
pub mod dims;
pub mod error;
pub mod koszul;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod presentation;
pub mod scalar;
pub mod serre;
pub mod series;
pub mod word;

pub mod group;

pub use error::Error;
pub use scalar::{Field, Rat, Scalar};
