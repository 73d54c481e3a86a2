use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::poly::{rat_big, Rational};
use crate::sym::{Basis, Partition, ZPoly};

/// `φ(p_k) = p_k + z^k`, extended to a ring map on `Λ[z]` fixing `z`.
pub fn phi(x: &ZPoly) -> Result<ZPoly> {
    transform(x, false)
}

/// `ψ(p_k) = p_k - z^k`; inverse of [`phi`].
pub fn psi(x: &ZPoly) -> Result<ZPoly> {
    transform(x, true)
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn transform(x: &ZPoly, negate: bool) -> Result<ZPoly> {
    let x = x.convert(Basis::PowerSum)?;
    let mut out = ZPoly::zero(Basis::PowerSum);
    for (j, s) in x.z_terms() {
        for (lambda, c) in s.terms() {
            // Π over distinct parts a with multiplicity r of (p_a ± z^a)^r.
            let mut acc: Vec<(usize, Vec<usize>, Rational)> = vec![(j, Vec::new(), c.clone())];
            for (a, r) in lambda.multiplicities() {
                let mut next = Vec::new();
                for (zexp, parts, coeff) in &acc {
                    for t in 0..=r {
                        let mut b = rat_big(binomial(r, t));
                        if negate && t % 2 == 1 {
                            b = -b;
                        }
                        let mut p = parts.clone();
                        p.extend(std::iter::repeat_n(a, r - t));
                        next.push((zexp + a * t, p, coeff * &b));
                    }
                }
                acc = next;
            }
            for (zexp, parts, coeff) in acc {
                out.add_term(zexp, Partition::new(parts)?, coeff);
            }
        }
    }
    Ok(out)
}
