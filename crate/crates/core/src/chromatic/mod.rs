//! Chromatic symmetric functions `X_G` and the rooted variants `X_i(G_*)`,
//! `X_{≠i}(G_*)`, computed by several independent algorithms:
//!
//! * [`brute_force`]: direct enumeration of proper colorings;
//! * [`x0_tree_recursion`]: the product formula over principal subtrees;
//! * [`x0_deletion_contraction`]: deletion-contraction on edges at the root;
//! * [`powersum_x`] / [`powersum_x0`]: inclusion-exclusion over edge subsets.
//!
//! Explicit results are [`MultiPoly`](crate::poly::MultiPoly) values in
//! `x_0, ..., x_N`; abstract results are [`SymExpansion`](crate::sym::SymExpansion)
//! or [`ZPoly`](crate::sym::ZPoly) values, which is how invariants are compared.

mod brute;
mod coeffs;
mod dc;
mod dp;
mod identities;
mod powersum;
mod tree;

pub use brute::{brute_force, Mode, BRUTE_FORCE_LIMIT};
pub use coeffs::{coeff_zk, RootMembership};
pub use dc::x0_deletion_contraction;
pub use dp::{tree_chromatic_dp, tree_dp, tree_dp_dense, DenseIntPoly, Ring, RootConstraint};
pub use identities::{
    apply_transposition, pointing_check, pointing_sum, recover_x_from_xne0, x0_from_xne0,
    xne0_from_x0,
};
pub use powersum::{powersum_x, powersum_x0, x0_zpoly, x_sym, xne0_zpoly};
pub use tree::x0_tree_recursion;
