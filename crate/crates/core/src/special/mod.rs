//! One-variable specializations of `X_G`, `X_0(G_*)` and `X_{≠0}(G_*)`,
//! independent coefficient formulas for them, and Eisenstein certificates of
//! irreducibility.

mod eisenstein;
mod fspec;
mod kp;

pub use eisenstein::{
    eisenstein, irreducibility_certificate, is_prime, linear_coeff_parity, Certificate,
    EisensteinFailure, EisensteinReport, PRIME_SEARCH_LIMIT,
};
pub use fspec::{
    f0_tree, f0_tree_dense, f_specialize, fi_brute, principal_specialization, x0det2_relations,
    Which, X0Det2Report,
};
pub use kp::{aj2_formula, aj_formula, spec_kp, specialize_sym, specialize_zpoly, x_2p, RootMode};
