//! Symmetric functions over `Q` in the monomial, augmented monomial,
//! power-sum and elementary bases, and the graded ring `Λ[z]`.
//!
//! A [`SymExpansion`] is a finite `Partition -> Rational` map tagged with its
//! basis. A [`ZPoly`] is a polynomial in `z` with [`SymExpansion`]
//! coefficients; rooted invariants are stored this way, with `z` standing for
//! the distinguished variable `x_0`.

mod expansion;
mod partition;
mod transition;
mod vars;
mod zpoly;

pub use expansion::{Basis, SymExpansion};
pub use partition::Partition;
pub use transition::DEFAULT_DEGREE_BOUND;
pub use vars::{collect_rooted, collect_symmetric, expand_vars, expand_zpoly, VarRange};
pub use zpoly::ZPoly;
