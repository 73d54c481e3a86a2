//! Exact chromatic symmetric functions of graphs and rooted graphs.
//!
//! * [`graph`]: bitset graphs, rooted graphs, weighted graphs and the text format.
//! * [`sym`]: partitions and symmetric functions in the m, m̃, p and e bases,
//!   including polynomials in the root variable `z`.
//! * [`poly`]: exact univariate and multivariate polynomials over the rationals.
//! * [`chromatic`]: `X_G`, `X_0` and `X_{≠0}` by brute force, power sums,
//!   tree recursion and deletion-contraction.
//! * [`special`]: specializations, Eisenstein certificates and the `f` invariants.
//! * [`pointed`]: the pointed function, its transforms and `U`/`W` polynomials.
//! * [`enumerate`]: trees, graphs and posets up to isomorphism.
//! * [`harness`]: verification suites, collision searches and CLI plumbing.
//!
//! All arithmetic is exact; sizes past the documented limits return
//! [`Error::Guard`] instead of running unbounded.

pub mod chromatic;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod harness;
pub mod pointed;
pub mod poly;
pub mod special;
pub mod sym;

pub use error::{Error, Result};
