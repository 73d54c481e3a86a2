use super::{brute_force, powersum_x, Mode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{rat, MultiPoly};
use crate::sym::{expand_vars, VarRange};

/// `(i, j)•p`: swaps the variables `x_i` and `x_j`.
pub fn apply_transposition(p: &MultiPoly, i: usize, j: usize) -> MultiPoly {
    p.transpose(i, j)
}

/// `X_{≠0} = Σ_{i=1}^N (0,i)•X_0`.
pub fn xne0_from_x0(x0: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(x0.nvars());
    for i in 1..x0.nvars() {
        out = &out + &x0.transpose(0, i);
    }
    out
}

fn check_vars(p: &MultiPoly, n_colors_max: usize) -> Result<()> {
    if n_colors_max == 0 {
        return Err(Error::OutOfRange("need N >= 1 colors besides 0".into()));
    }
    if p.nvars() != n_colors_max + 1 {
        return Err(Error::VariableMismatch(p.nvars(), n_colors_max + 1));
    }
    Ok(())
}

/// `X(G_*) = (1/N) Σ_{i=0}^N (0,i)•X_{≠0}(G_*)`.
pub fn recover_x_from_xne0(xne0: &MultiPoly, n_colors_max: usize) -> Result<MultiPoly> {
    check_vars(xne0, n_colors_max)?;
    let mut sum = xne0.clone();
    for i in 1..=n_colors_max {
        sum = &sum + &xne0.transpose(0, i);
    }
    Ok(sum.scale(&(rat(1) / rat(n_colors_max as i64))))
}

/// `X_0(G_*) = (1/N) Σ_{i=0}^N (0,i)•X_{≠0}(G_*) - X_{≠0}(G_*)`.
///
/// The result must have integer coefficients; anything else is reported as
/// an [`Error::Integrality`].
pub fn x0_from_xne0(xne0: &MultiPoly, n_colors_max: usize) -> Result<MultiPoly> {
    let x0 = &recover_x_from_xne0(xne0, n_colors_max)? - xne0;
    if !x0.is_integral() {
        return Err(Error::Integrality(format!("X_0 recovered from X_≠0: {x0}")));
    }
    Ok(x0)
}

/// `Σ_{r ∈ V} X_0(G_*^r)` by brute force.
pub fn pointing_sum(g: &Graph, n_colors_max: usize) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero(n_colors_max + 1);
    for r in 0..g.n() {
        acc = &acc + &brute_force(g, n_colors_max, Mode::x0(r))?;
    }
    Ok(acc)
}

/// `x_0 ∂/∂x_0 X_G = Σ_{r ∈ V} X_0(G_*^r)`, with the left side from the
/// power-sum expansion and the right side from brute force.
pub fn pointing_check(g: &Graph, n_colors_max: usize) -> Result<bool> {
    let x = expand_vars(&powersum_x(g)?, VarRange::All(n_colors_max))?;
    Ok(x.euler_derivative(0) == pointing_sum(g, n_colors_max)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoint_path_from_xne0() {
        // X_{≠0} for P3 rooted at an endpoint
        let xne0 = MultiPoly::from_int_terms(
            3,
            &[
                (4, &[1, 1, 1]),
                (1, &[1, 2, 0]),
                (1, &[1, 0, 2]),
                (1, &[0, 2, 1]),
                (1, &[0, 1, 2]),
            ],
        );
        assert_eq!(
            x0_from_xne0(&xne0, 2).unwrap(),
            MultiPoly::from_int_terms(3, &[(2, &[1, 1, 1]), (1, &[2, 1, 0]), (1, &[2, 0, 1])])
        );
    }

    #[test]
    fn pointing_on_path() {
        let g = Graph::path(3);
        assert!(pointing_check(&g, 2).unwrap());
        assert_eq!(
            pointing_sum(&g, 2).unwrap(),
            MultiPoly::from_int_terms(
                3,
                &[
                    (6, &[1, 1, 1]),
                    (2, &[2, 1, 0]),
                    (2, &[2, 0, 1]),
                    (1, &[1, 2, 0]),
                    (1, &[1, 0, 2])
                ]
            )
        );
    }

    #[test]
    fn transposition_is_an_involution() {
        let p = MultiPoly::from_int_terms(3, &[(3, &[2, 1, 0]), (-1, &[0, 0, 4])]);
        assert_eq!(apply_transposition(&apply_transposition(&p, 0, 2), 0, 2), p);
    }

    #[test]
    fn zero_colors_rejected() {
        assert!(recover_x_from_xne0(&MultiPoly::zero(1), 0).is_err());
        assert!(recover_x_from_xne0(&MultiPoly::zero(3), 3).is_err());
    }
}
