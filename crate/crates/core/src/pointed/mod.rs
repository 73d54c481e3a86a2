//! The pointed chromatic symmetric function `P_{G,v}`, the
//! transforms relating it to `X_0(G_*)`, internal spanning trees, and the
//! U / rooted-U / W polynomials of (weighted) graphs.

mod signed;
mod spanning;
mod transforms;
mod upoly;

pub use signed::{ans_paw_check, ans_paw_sum, pointed_p, pointed_positivity};
pub use spanning::{
    internal_spanning_trees, internal_spanning_trees_ordered, internal_trees_by_activity,
    InternalTreeCounts,
};
pub use transforms::{phi, psi};
pub use upoly::{
    p_from_rooted_u, rooted_u, u_poly, w_poly, x_from_u, UMonomial, UPoly, U_EDGE_LIMIT,
};
