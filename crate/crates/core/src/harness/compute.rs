use serde_json::Value;

use crate::chromatic::{apply_transposition, powersum_x, x0_zpoly, x_sym, xne0_zpoly};
use crate::error::{Error, Result};
use crate::graph::{chromatic_polynomial, GraphRecord};
use crate::pointed::{pointed_p, rooted_u, u_poly, w_poly};
use crate::poly::UniPoly;
use crate::special::{
    f_specialize, irreducibility_certificate, principal_specialization, spec_kp, x_2p, RootMode,
    Which,
};
use crate::sym::{expand_vars, expand_zpoly, Basis, VarRange, ZPoly};

/// Every invariant the `compute` verb can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Invariant {
    X,
    X0,
    Xne0,
    Xi,
    F0,
    Fne0,
    Chi,
    Principal,
    P,
    U,
    Ur,
    W,
    SpecKp,
    X2p,
}

const NAMES: [(&str, Invariant); 14] = [
    ("X", Invariant::X),
    ("X0", Invariant::X0),
    ("Xne0", Invariant::Xne0),
    ("Xi", Invariant::Xi),
    ("f0", Invariant::F0),
    ("fne0", Invariant::Fne0),
    ("chi", Invariant::Chi),
    ("principal", Invariant::Principal),
    ("P", Invariant::P),
    ("U", Invariant::U),
    ("Ur", Invariant::Ur),
    ("W", Invariant::W),
    ("spec-kp", Invariant::SpecKp),
    ("x-2p", Invariant::X2p),
];

impl Invariant {
    pub fn name(self) -> &'static str {
        NAMES
            .iter()
            .find(|(_, i)| *i == self)
            .expect("every invariant is named")
            .0
    }

    pub fn parse(s: &str) -> Result<Self> {
        NAMES
            .iter()
            .find(|(n, _)| *n == s)
            .map(|&(_, i)| i)
            .ok_or_else(|| Error::Unknown {
                kind: "invariant",
                name: s.to_string(),
            })
    }

    pub fn names() -> impl Iterator<Item = &'static str> {
        NAMES.iter().map(|(n, _)| *n)
    }
}

/// Optional parameters of [`compute`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ComputeParams {
    /// Expand in the explicit variables `x_0, ..., x_N` instead of a basis.
    pub colors: Option<usize>,
    /// Root color `i` for [`Invariant::Xi`].
    pub color: usize,
    pub k: Option<usize>,
    pub p: Option<usize>,
    /// Root colored 0 instead of avoiding 0 for [`Invariant::X2p`].
    pub root_zero: bool,
    /// Output basis; `m` by default, `p` for [`Invariant::P`].
    pub basis: Option<Basis>,
}

/// A computed invariant as JSON and as text.
#[derive(Clone, Debug, PartialEq)]
pub struct Computed {
    pub json: Value,
    pub text: String,
}

fn uni(f: UniPoly, var: &str) -> Computed {
    Computed {
        json: f.to_json(var),
        text: f.display(var),
    }
}

fn zpoly(z: ZPoly, basis: Basis) -> Result<Computed> {
    let z = z.convert(basis)?;
    Ok(Computed {
        json: z.to_json(),
        text: z.to_string(),
    })
}

fn need(name: &str) -> Error {
    Error::Invalid(format!("this invariant needs --{name}"))
}

/// Computes `invariant` of the graph in `record`. Equal inputs give equal
/// output.
pub fn compute(
    record: &GraphRecord,
    invariant: Invariant,
    params: &ComputeParams,
) -> Result<Computed> {
    let rooted = || record.rooted(None);
    let basis = params.basis.unwrap_or(Basis::Monomial);
    let multi = |m: crate::poly::MultiPoly| Computed {
        json: m.to_json(),
        text: m.to_string(),
    };
    Ok(match invariant {
        Invariant::X => {
            let g = record.graph()?;
            match params.colors {
                Some(n) => multi(expand_vars(&powersum_x(&g)?, VarRange::All(n))?),
                None => zpoly(ZPoly::from_sym(0, x_sym(&g)?), basis)?,
            }
        }
        Invariant::X0 | Invariant::Xne0 | Invariant::Xi => {
            let g = rooted()?;
            let z = match invariant {
                Invariant::Xne0 => xne0_zpoly(&g)?,
                _ => x0_zpoly(&g)?,
            };
            match (params.colors, invariant) {
                (Some(n), Invariant::Xi) => {
                    if params.color > n {
                        return Err(Error::OutOfRange(format!(
                            "color {} with N = {n}",
                            params.color
                        )));
                    }
                    multi(apply_transposition(
                        &expand_zpoly(&z, VarRange::Positive(n))?,
                        0,
                        params.color,
                    ))
                }
                (None, Invariant::Xi) => return Err(need("colors")),
                (Some(n), _) => multi(expand_zpoly(&z, VarRange::Positive(n))?),
                (None, _) => zpoly(z, basis)?,
            }
        }
        Invariant::F0 => uni(f_specialize(&rooted()?, Which::F0)?, "q"),
        Invariant::Fne0 => uni(f_specialize(&rooted()?, Which::Fne0)?, "q"),
        Invariant::Chi => uni(chromatic_polynomial(&record.graph()?), "x"),
        Invariant::Principal => {
            let g = record.graph()?;
            let n = params.colors.unwrap_or(g.n().saturating_sub(1));
            uni(principal_specialization(&g, n)?, "q")
        }
        Invariant::P => zpoly(
            pointed_p(&rooted()?)?,
            params.basis.unwrap_or(Basis::PowerSum),
        )?,
        Invariant::U | Invariant::Ur | Invariant::W => {
            let u = match invariant {
                Invariant::U => u_poly(&record.graph()?)?,
                Invariant::Ur => rooted_u(&rooted()?)?,
                _ => w_poly(&record.weighted()?)?,
            };
            Computed {
                json: u.to_json(),
                text: u.to_string(),
            }
        }
        Invariant::SpecKp => {
            let g = record.graph()?;
            let (k, p) = match (params.k, params.p) {
                (Some(k), Some(p)) => (k, p),
                (k, p) => {
                    let cert = irreducibility_certificate(&g)?;
                    (k.unwrap_or(cert.k), p.unwrap_or(cert.p as usize))
                }
            };
            uni(spec_kp(&g, k, p)?, "q")
        }
        Invariant::X2p => {
            let mode = if params.root_zero {
                RootMode::Zero
            } else {
                RootMode::NonZero
            };
            uni(
                x_2p(&rooted()?, params.p.ok_or_else(|| need("p"))?, mode)?,
                "q",
            )
        }
    })
}
