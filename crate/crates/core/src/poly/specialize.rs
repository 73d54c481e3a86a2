use num_traits::Zero;

use super::{rational_pow, MultiPoly, Rational, UniPoly};
use crate::error::{Error, Result};

/// Where a single variable is sent by [`specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Keep,
    QPow(u32),
    Const(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Multi(MultiPoly),
    Uni(UniPoly),
}

impl Specialized {
    pub fn into_uni(self) -> Option<UniPoly> {
        match self {
            Specialized::Uni(u) => Some(u),
            Specialized::Multi(_) => None,
        }
    }

    pub fn into_multi(self) -> Option<MultiPoly> {
        match self {
            Specialized::Multi(m) => Some(m),
            Specialized::Uni(_) => None,
        }
    }
}

/// Ring homomorphism image of `p` under a per-variable assignment.
///
/// With no [`Target::Keep`] the result is univariate in `q`. Otherwise the
/// kept variables stay in place, constants are substituted, and if any
/// variable went to a power of `q` then `q` becomes an extra last variable.
pub fn specialize(p: &MultiPoly, assignment: &[Target]) -> Result<Specialized> {
    if assignment.len() != p.nvars() {
        return Err(Error::VariableMismatch(p.nvars(), assignment.len()));
    }
    let any_keep = assignment.iter().any(|t| matches!(t, Target::Keep));
    let any_q = assignment.iter().any(|t| matches!(t, Target::QPow(_)));

    // Powers of constants are reused heavily.
    let max_exp = p.max_exponent() as usize;
    let const_pows: Vec<Option<Vec<Rational>>> = assignment
        .iter()
        .map(|t| match t {
            Target::Const(c) => Some((0..=max_exp).map(|e| rational_pow(c, e as u32)).collect()),
            _ => None,
        })
        .collect();

    let term_image = |e: &[u8], c: &Rational| -> (Rational, usize, Vec<u8>) {
        let mut coeff = c.clone();
        let mut qdeg = 0usize;
        let mut kept = Vec::new();
        for (i, (&x, t)) in e.iter().zip(assignment).enumerate() {
            match t {
                Target::Keep => kept.push(x),
                Target::QPow(j) => {
                    kept.push(0);
                    qdeg += *j as usize * x as usize;
                }
                Target::Const(_) => {
                    kept.push(0);
                    if x > 0 {
                        coeff *= &const_pows[i].as_ref().unwrap()[x as usize];
                    }
                }
            }
        }
        (coeff, qdeg, kept)
    };

    if !any_keep {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in p.terms() {
            let (coeff, qdeg, _) = term_image(e, c);
            if coeff.is_zero() {
                continue;
            }
            if coeffs.len() <= qdeg {
                coeffs.resize(qdeg + 1, Rational::zero());
            }
            coeffs[qdeg] += coeff;
        }
        return Ok(Specialized::Uni(UniPoly::from_coeffs(coeffs)));
    }

    let nvars = p.nvars() + usize::from(any_q);
    let mut out = MultiPoly::zero(nvars);
    for (e, c) in p.terms() {
        let (coeff, qdeg, mut kept) = term_image(e, c);
        if any_q {
            kept.push(u8::try_from(qdeg).map_err(|_| Error::OutOfRange("q exponent".into()))?);
        }
        out.add_term(kept, coeff);
    }
    Ok(Specialized::Multi(out))
}

/// [`specialize`] when every variable is sent to a power of `q` or a constant.
pub fn specialize_uni(p: &MultiPoly, assignment: &[Target]) -> Result<UniPoly> {
    if assignment.iter().any(|t| matches!(t, Target::Keep)) {
        return Err(Error::Invalid(
            "univariate specialization cannot keep a variable".into(),
        ));
    }
    Ok(specialize(p, assignment)?
        .into_uni()
        .expect("univariate image"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn ex_xt() -> MultiPoly {
        // 6x0x1x2 + x0^2x1 + x0^2x2 + x0x1^2 + x1^2x2 + x0x2^2 + x1x2^2
        MultiPoly::from_int_terms(
            3,
            &[
                (6, &[1, 1, 1]),
                (1, &[2, 1, 0]),
                (1, &[2, 0, 1]),
                (1, &[1, 2, 0]),
                (1, &[0, 2, 1]),
                (1, &[1, 0, 2]),
                (1, &[0, 1, 2]),
            ],
        )
    }

    #[test]
    fn principal_specialization_of_path() {
        let f = specialize_uni(
            &ex_xt(),
            &[Target::QPow(0), Target::QPow(1), Target::QPow(2)],
        )
        .unwrap();
        assert_eq!(f, UniPoly::from_ints(&[0, 1, 2, 6, 2, 1]));
    }

    #[test]
    fn endpoint_rooted_path_at_qq1() {
        // 2x0x1x2 + x0^2x1 + x0^2x2 with x0 = x1 = q, x2 = 1 -> q^3 + 3q^2
        let p = MultiPoly::from_int_terms(3, &[(2, &[1, 1, 1]), (1, &[2, 1, 0]), (1, &[2, 0, 1])]);
        let f = specialize_uni(
            &p,
            &[Target::QPow(1), Target::QPow(1), Target::Const(rat(1))],
        )
        .unwrap();
        assert_eq!(f, UniPoly::from_ints(&[0, 0, 3, 1]));
    }

    #[test]
    fn identity_assignment_is_identity() {
        let p = ex_xt();
        let out = specialize(&p, &[Target::Keep, Target::Keep, Target::Keep]).unwrap();
        assert_eq!(out, Specialized::Multi(p));
    }

    #[test]
    fn mixed_assignment_appends_q() {
        // x0 * x1^2 with x0 kept, x1 -> q, x2 -> 3
        let p = MultiPoly::from_int_terms(3, &[(1, &[1, 2, 0]), (1, &[0, 0, 1])]);
        let out = specialize(&p, &[Target::Keep, Target::QPow(1), Target::Const(rat(3))])
            .unwrap()
            .into_multi()
            .unwrap();
        assert_eq!(out.nvars(), 4);
        assert_eq!(
            out,
            MultiPoly::from_int_terms(4, &[(1, &[1, 0, 0, 2]), (3, &[0, 0, 0, 0])])
        );
    }

    #[test]
    fn wrong_length_is_rejected() {
        assert!(specialize(&ex_xt(), &[Target::Keep]).is_err());
        assert!(
            specialize_uni(&ex_xt(), &[Target::Keep, Target::QPow(1), Target::QPow(1)]).is_err()
        );
    }
}
