use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use super::spec_kp;
use crate::error::{Error, Result};
use crate::graph::{chromatic_polynomial, Graph};
use crate::poly::{rat, UniPoly};

/// Upper bound for the least-prime search.
pub const PRIME_SEARCH_LIMIT: u64 = 10_000;

/// The first Eisenstein hypothesis that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EisensteinFailure {
    /// `p` divides the leading coefficient.
    LeadingDivisible,
    /// `p` does not divide `a_j` for this `j < n`.
    CoefficientNotDivisible(usize),
    /// `p^2` divides `a_0`.
    ConstantDivisibleBySquare,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinReport {
    pub prime: u64,
    pub satisfied: bool,
    pub witness: Option<EisensteinFailure>,
}

/// Eisenstein's criterion for `f` at `p`.
pub fn eisenstein(f: &UniPoly, p: u64) -> Result<EisensteinReport> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let coeffs = f.to_integers()?;
    let n = match f.degree() {
        Some(d) if d > 0 => d,
        _ => return Err(Error::Invalid("Eisenstein needs positive degree".into())),
    };
    let pb = BigInt::from(p);
    let witness = if coeffs[n].is_multiple_of(&pb) {
        Some(EisensteinFailure::LeadingDivisible)
    } else if let Some(j) = (0..n).find(|&j| !coeffs[j].is_multiple_of(&pb)) {
        Some(EisensteinFailure::CoefficientNotDivisible(j))
    } else if coeffs[0].is_multiple_of(&(&pb * &pb)) {
        Some(EisensteinFailure::ConstantDivisibleBySquare)
    } else {
        None
    };
    Ok(EisensteinReport {
        prime: p,
        satisfied: witness.is_none(),
        witness,
    })
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Irreducibility certificate: `X_G(x_1, ..., x_M)` is irreducible with
/// `M = k + p` when the report is satisfied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub k: usize,
    pub p: u64,
    pub m: usize,
    pub report: EisensteinReport,
}

/// `k = χ(G)`, `p` the least prime dividing neither `χ_G(k)` nor the
/// coefficient of `x` in `χ_G`, and Eisenstein at `p` for [`spec_kp`].
pub fn irreducibility_certificate(g: &Graph) -> Result<Certificate> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let k = g.chromatic_number();
    let chi = chromatic_polynomial(g);
    let at_k = chi.eval(&rat(k as i64)).to_integer();
    let c1 = chi.coeff(1).to_integer();
    let p = (2..=PRIME_SEARCH_LIMIT)
        .filter(|&p| is_prime(p))
        .find(|&p| {
            let pb = BigInt::from(p);
            !at_k.is_multiple_of(&pb) && !c1.is_multiple_of(&pb)
        })
        .ok_or_else(|| Error::guard("least prime search", PRIME_SEARCH_LIMIT))?;
    let report = eisenstein(&spec_kp(g, k, p as usize)?, p)?;
    Ok(Certificate {
        k,
        p,
        m: k + p as usize,
        report,
    })
}

/// Whether the coefficient of `x` in `χ_G` is odd exactly when `G` is
/// connected and bipartite.
pub fn linear_coeff_parity(g: &Graph) -> bool {
    let c1 = chromatic_polynomial(g).coeff(1).to_integer();
    let odd = c1.abs().is_odd();
    odd == (g.n() > 0 && g.is_connected() && g.is_bipartite())
}
