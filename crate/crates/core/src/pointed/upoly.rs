use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{check_subset_guard, EdgeSubset, Graph, RootedGraph, WeightedGraph};
use crate::poly::rat_big;
use crate::sym::{Basis, Partition, SymExpansion, ZPoly};

/// Edge bound for the subset sums and the W recursion.
pub const U_EDGE_LIMIT: usize = 25;

/// `x_λ y^j z^k`, where `x_i` is indexed by a part size, not a color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UMonomial {
    pub x: Partition,
    pub y: usize,
    pub z: usize,
}

/// Polynomial in part-size variables `x_1, x_2, ...` together with `y` and
/// `z`, with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UPoly {
    terms: BTreeMap<UMonomial, BigInt>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), 0, 0)
    }

    pub fn monomial(x: Partition, y: usize, z: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(UMonomial { x, y, z }, BigInt::one());
        p
    }

    /// Terms `(coeff, x parts, y exponent, z exponent)`.
    pub fn from_int_terms(terms: &[(i64, &[usize], usize, usize)]) -> Self {
        let mut p = Self::zero();
        for &(c, x, y, z) in terms {
            p.add_term(
                UMonomial {
                    x: Partition::from_parts(x),
                    y,
                    z,
                },
                c.into(),
            );
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &UMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: UMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let m = UMonomial {
                    x: a.x.union(&b.x),
                    y: a.y + b.y,
                    z: a.z + b.z,
                };
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// Whether any term involves `y`.
    pub fn has_y(&self) -> bool {
        self.terms.keys().any(|m| m.y > 0)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| json!({"x": m.x.parts(), "y": m.y, "z": m.z, "coeff": c.to_string()}))
            .collect();
        json!({"namespace": "part-size", "terms": terms})
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut body = String::new();
            let mut mults = m.x.multiplicities();
            mults.sort_unstable();
            for (part, mult) in mults {
                body += &power(&format!("x{part}"), mult);
            }
            body += &power("y", m.y);
            body += &power("z", m.z);
            let sign = if c.is_negative() { "-" } else { "+" };
            match i {
                0 if sign == "-" => write!(f, "-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            if body.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{a}{body}")?;
            }
        }
        Ok(())
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Adds `c · x_λ z^k (y - 1)^t`.
fn add_y_minus_one(out: &mut UPoly, x: &Partition, z: usize, t: usize, c: i64) {
    for j in 0..=t {
        let sign = if (t - j).is_multiple_of(2) { c } else { -c };
        out.add_term(
            UMonomial {
                x: x.clone(),
                y: j,
                z,
            },
            binomial(t, j) * sign,
        );
    }
}

/// `U_G = Σ_{S ⊆ E} x_{λ(G_S)} (y - 1)^{|S| - r(S)}`.
pub fn u_poly(g: &Graph) -> Result<UPoly> {
    let m = g.edge_count();
    check_subset_guard(m, U_EDGE_LIMIT)?;
    let edges = g.edges();
    let mut acc: FxHashMap<(Partition, usize), i64> = FxHashMap::default();
    for s in EdgeSubset::all(m) {
        let comps = g.subset_components(&edges, s);
        let rank = g.n() - comps.len();
        let lambda = Partition::new(comps.iter().map(|c| c.count_ones() as usize).collect())?;
        *acc.entry((lambda, s.len() - rank)).or_insert(0) += 1;
    }
    let mut out = UPoly::zero();
    for ((lambda, t), c) in acc {
        add_y_minus_one(&mut out, &lambda, 0, t, c);
    }
    Ok(out)
}

/// `U^r_{G,v} = Σ_{S ⊆ E} x_{λ_v^-(G_S)} z^{λ_v^+(G_S)} (y - 1)^{|S| - r(S)}`.
pub fn rooted_u(g: &RootedGraph) -> Result<UPoly> {
    let graph = g.graph();
    let m = graph.edge_count();
    check_subset_guard(m, U_EDGE_LIMIT)?;
    let edges = graph.edges();
    let mut acc: FxHashMap<(Partition, usize, usize), i64> = FxHashMap::default();
    for s in EdgeSubset::all(m) {
        let (k, rest) = g.rooted_split_with(&edges, s);
        let rank = graph.n() - rest.len() - 1;
        *acc.entry((rest, k, s.len() - rank)).or_insert(0) += 1;
    }
    let mut out = UPoly::zero();
    for ((lambda, k, t), c) in acc {
        add_y_minus_one(&mut out, &lambda, k, t, c);
    }
    Ok(out)
}

/// `W_{(G, ω)}` by deletion-contraction: a loop contributes a factor `y`, a
/// graph with no edges gives `Π_v x_{ω(v)}`, and any other edge `e` gives
/// `W(G - e) + W(G / e)`.
pub fn w_poly(g: &WeightedGraph) -> Result<UPoly> {
    if g.edges().len() > U_EDGE_LIMIT {
        return Err(Error::guard("edge count for the W recursion", U_EDGE_LIMIT));
    }
    let mut memo = FxHashMap::default();
    Ok(w_rec(g, &mut memo))
}

fn w_rec(g: &WeightedGraph, memo: &mut FxHashMap<WeightedGraph, UPoly>) -> UPoly {
    if let Some(w) = memo.get(g) {
        return w.clone();
    }
    let result = if let Some(i) = g.edges().iter().position(|&(u, v)| u == v) {
        w_rec(&g.delete_edge(i), memo).mul(&UPoly::monomial(Partition::empty(), 1, 0))
    } else if g.edges().is_empty() {
        let parts = g.weights().iter().map(|&w| w as usize).collect();
        UPoly::monomial(Partition::new(parts).expect("positive weights"), 0, 0)
    } else {
        w_rec(&g.delete_edge(0), memo).add(&w_rec(&g.contract_edge(0), memo))
    };
    memo.insert(g.clone(), result.clone());
    result
}

/// `(-1)^{len λ}` for the substitution `x_i -> -p_i`.
fn substituted_sign(x: &Partition) -> BigInt {
    if x.len().is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `X_G` from `U_G`: set `y = 0`, `x_i = -p_i`, and multiply by
/// `(-1)^{|V|}`, where `|V|` is read off the common `x`-weight.
pub fn x_from_u(u: &UPoly) -> Result<SymExpansion> {
    let mut out = SymExpansion::zero(Basis::PowerSum);
    let mut n = None;
    for (m, c) in u.terms().filter(|(m, _)| m.y == 0) {
        if m.z != 0 {
            return Err(Error::Invalid("unrooted U has a z term".into()));
        }
        let w = m.x.weight();
        if *n.get_or_insert(w) != w {
            return Err(Error::Invalid(format!(
                "mixed x-weights {} and {w}",
                n.unwrap_or(0)
            )));
        }
        let sign = substituted_sign(&m.x) * if w % 2 == 0 { 1 } else { -1 };
        out.add_term(m.x.clone(), rat_big(c * sign));
    }
    Ok(out)
}

/// `P_{G,v}` from `U^r_{G,v}`: set `y = 0`, `x_i = -p_i`, and multiply by
/// `(-1)^{n + 1} z^{-1}`.
pub fn p_from_rooted_u(ur: &UPoly, n: usize) -> Result<ZPoly> {
    let mut out = ZPoly::zero(Basis::PowerSum);
    for (m, c) in ur.terms().filter(|(m, _)| m.y == 0) {
        if m.z == 0 {
            return Err(Error::Invalid("rooted U term not divisible by z".into()));
        }
        let sign = substituted_sign(&m.x) * if n % 2 == 1 { 1 } else { -1 };
        out.add_term(m.z - 1, m.x.clone(), rat_big(c * sign));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::powersum_x;
    use crate::pointed::pointed_p;

    #[test]
    fn path_examples() {
        let p3 = Graph::path(3);
        let u =
            UPoly::from_int_terms(&[(1, &[1, 1, 1], 0, 0), (2, &[2, 1], 0, 0), (1, &[3], 0, 0)]);
        assert_eq!(u_poly(&p3).unwrap(), u);
        assert_eq!(u.to_string(), "x1^3 + 2x1x2 + x3");
        let w = WeightedGraph::new(3, vec![(0, 1), (1, 2)], vec![3, 1, 1]).unwrap();
        assert_eq!(
            w_poly(&w).unwrap(),
            UPoly::from_int_terms(&[
                (1, &[3, 1, 1], 0, 0),
                (1, &[3, 2], 0, 0),
                (1, &[4, 1], 0, 0),
                (1, &[5], 0, 0)
            ])
        );
        let mid = RootedGraph::new(p3.clone(), 1).unwrap();
        assert_eq!(
            rooted_u(&mid).unwrap(),
            UPoly::from_int_terms(&[(1, &[1, 1], 0, 1), (2, &[1], 0, 2), (1, &[], 0, 3)])
        );
    }

    #[test]
    fn cycle_has_y() {
        let c3 = Graph::cycle(3);
        let u = u_poly(&c3).unwrap();
        assert!(u.has_y());
        assert_eq!(u, w_poly(&WeightedGraph::unit(&c3)).unwrap());
        assert_eq!(
            u.coeff(&UMonomial {
                x: Partition::from_parts(&[3]),
                y: 1,
                z: 0
            }),
            1.into()
        );
    }

    #[test]
    fn recovery() {
        let p3 = Graph::path(3);
        assert_eq!(
            x_from_u(&u_poly(&p3).unwrap()).unwrap(),
            powersum_x(&p3).unwrap()
        );
        let single = Graph::path(1);
        assert_eq!(
            x_from_u(&u_poly(&single).unwrap()).unwrap(),
            SymExpansion::from_int_terms(Basis::PowerSum, &[(1, &[1])])
        );
        let paw = RootedGraph::new(
            Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap(),
            2,
        )
        .unwrap();
        assert_eq!(
            p_from_rooted_u(&rooted_u(&paw).unwrap(), 4).unwrap(),
            pointed_p(&paw).unwrap()
        );
        assert_eq!(
            x_from_u(&u_poly(paw.graph()).unwrap()).unwrap(),
            powersum_x(paw.graph()).unwrap()
        );
    }
}
