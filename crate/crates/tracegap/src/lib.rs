//! Deformed relative entropies, skew informations, and their trace
//! inequalities as checkable signed gaps.
//!
//! The library computes a family of quantum information quantities built
//! on a deformed logarithm (relative entropies, operator entropies, skew
//! informations and their correlation measures), encodes the known trace
//! inequalities between them as signed-gap predicates with explicit
//! tolerances, reproduces the registered reference cases (including the
//! ones where a plausible bound genuinely fails), and searches for new
//! violations with a seeded, replayable random walk.
//!
//! Layer by layer:
//!
//! * [`matrix`]: exact-Hermitian matrices, Jacobi eigendecomposition,
//!   spectral functions, the operator order, and weighted matrix means.
//! * [`deformed`]: the deformed logarithm and exponential, their operator
//!   lifts, and the constants appearing in upper bounds.
//! * [`quantities`]: states, relative entropies, variances, skew
//!   informations, and correlation measures.
//! * [`inequalities`]: the inequality catalog, gap evaluation, variational
//!   checks, and the randomized suite.
//! * [`cases`]: registered reference inputs with their pinned values.
//! * [`search`]: seeded gap minimization with replayable records.
//! * [`sample`], [`rng`]: reproducible random inputs; the generator is
//!   specified bit-exactly for replication outside this crate.
//! * [`io`], [`cli`]: the matrix interchange format and the command-line
//!   front end.
//!
//! Tolerances live in [`tol`] with the rationale for each constant.

pub mod cases;
pub mod cli;
pub mod deformed;
pub mod error;
pub mod inequalities;
pub mod io;
pub mod matrix;
pub mod quantities;
pub mod rng;
pub mod sample;
pub mod search;
pub mod tol;

pub use error::{Error, Result};
