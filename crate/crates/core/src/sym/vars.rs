//! Passing between abstract symmetric functions and explicit polynomials in
//! `x_0, ..., x_N`.

use num_traits::Zero;

use super::{Basis, Partition, SymExpansion, ZPoly};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Rational};

/// Which color variables a symmetric function is expanded in. The output
/// always has the `N + 1` slots `x_0, ..., x_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarRange {
    /// `x_1, ..., x_N`; `x_0` does not occur.
    Positive(usize),
    /// `x_0, ..., x_N`.
    All(usize),
}

impl VarRange {
    pub fn n(self) -> usize {
        match self {
            VarRange::Positive(n) | VarRange::All(n) => n,
        }
    }

    fn slots(self) -> std::ops::Range<usize> {
        match self {
            VarRange::Positive(n) => 1..n + 1,
            VarRange::All(n) => 0..n + 1,
        }
    }
}

/// Calls `f` with every distinct placement of the parts of `lambda` into
/// the slots of `range` (other slots get exponent 0).
fn for_each_monomial(lambda: &Partition, range: VarRange, nvars: usize, f: &mut impl FnMut(&[u8])) {
    let slots: Vec<usize> = range.slots().collect();
    if lambda.len() > slots.len() {
        return;
    }
    let mut counts: Vec<(usize, usize)> = lambda.multiplicities();
    counts.push((0, slots.len() - lambda.len()));
    let mut exps = vec![0u8; nvars];
    fn go(
        i: usize,
        slots: &[usize],
        counts: &mut [(usize, usize)],
        exps: &mut [u8],
        f: &mut impl FnMut(&[u8]),
    ) {
        if i == slots.len() {
            f(exps);
            return;
        }
        for j in 0..counts.len() {
            if counts[j].1 == 0 {
                continue;
            }
            counts[j].1 -= 1;
            exps[slots[i]] = counts[j].0 as u8;
            go(i + 1, slots, counts, exps, f);
            counts[j].1 += 1;
        }
        exps[slots[i]] = 0;
    }
    go(0, &slots, &mut counts, &mut exps, f);
}

/// Adds `c · m_λ` (expanded over `range`) times `x_0^shift` into `out`.
fn add_monomial_sym(
    out: &mut MultiPoly,
    lambda: &Partition,
    c: &Rational,
    range: VarRange,
    shift: usize,
) -> Result<()> {
    let nvars = out.nvars();
    let shift = u8::try_from(shift).map_err(|_| Error::OutOfRange("exponent of x0".into()))?;
    let mut err = None;
    for_each_monomial(lambda, range, nvars, &mut |e| {
        let mut e = e.to_vec();
        match e[0].checked_add(shift) {
            Some(x) => e[0] = x,
            None => err = Some(Error::OutOfRange("exponent of x0".into())),
        }
        out.add_term(e, c.clone());
    });
    err.map_or(Ok(()), Err)
}

/// Explicit polynomial of a symmetric function in the variables of `range`.
///
/// For a homogeneous function of degree at most `N` this is injective.
pub fn expand_vars(x: &SymExpansion, range: VarRange) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(range.n() + 1);
    let m = x.convert(Basis::Monomial)?;
    for (l, c) in m.terms() {
        add_monomial_sym(&mut out, l, c, range, 0)?;
    }
    Ok(out)
}

/// Explicit polynomial of an element of `Λ[z]` with `z -> x_0`; the
/// symmetric coefficients are expanded over `range`.
pub fn expand_zpoly(x: &ZPoly, range: VarRange) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(range.n() + 1);
    let m = x.convert(Basis::Monomial)?;
    for (k, s) in m.z_terms() {
        for (l, c) in s.terms() {
            add_monomial_sym(&mut out, l, c, range, k)?;
        }
    }
    Ok(out)
}

fn check_symmetric(p: &MultiPoly, slots: std::ops::Range<usize>) -> Result<()> {
    let s: Vec<usize> = slots.collect();
    for w in s.windows(2) {
        if p.transpose(w[0], w[1]) != *p {
            return Err(Error::NotSymmetric(format!(
                "not invariant under swapping x{} and x{}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

fn dominant_partition(e: &[u8]) -> Option<Partition> {
    if e.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Some(Partition::from_sorted(
        e.iter()
            .take_while(|&&x| x > 0)
            .map(|&x| x as usize)
            .collect(),
    ))
}

/// Monomial expansion of a polynomial symmetric in the variables of `range`.
///
/// Each `m_λ` coefficient is read from the monomial with weakly decreasing
/// exponents. For `VarRange::Positive` the polynomial must not involve
/// `x_0`. The result is faithful when the degree is at most `N`.
pub fn collect_symmetric(p: &MultiPoly, range: VarRange) -> Result<SymExpansion> {
    if p.nvars() != range.n() + 1 {
        return Err(Error::VariableMismatch(p.nvars(), range.n() + 1));
    }
    if let VarRange::Positive(_) = range {
        if p.terms().any(|(e, _)| e[0] != 0) {
            return Err(Error::NotSymmetric(
                "x0 occurs in a polynomial over x1..xN".into(),
            ));
        }
    }
    check_symmetric(p, range.slots())?;
    let start = range.slots().start;
    let mut out = SymExpansion::zero(Basis::Monomial);
    for (e, c) in p.terms() {
        if let Some(l) = dominant_partition(&e[start..]) {
            out.add_term(l, c.clone());
        }
    }
    Ok(out)
}

/// Inverse of [`expand_zpoly`] with `x_i` playing the role of `z`: the
/// polynomial must be symmetric in the remaining variables.
pub fn collect_rooted(p: &MultiPoly, i: usize) -> Result<ZPoly> {
    let nvars = p.nvars();
    if i >= nvars {
        return Err(Error::OutOfRange(format!("variable x{i} of {nvars}")));
    }
    // Move x_i to slot 0 so the others are x_1..x_N.
    let q = if i == 0 { p.clone() } else { p.transpose(0, i) };
    check_symmetric(&q, 1..nvars)?;
    let mut out = ZPoly::zero(Basis::Monomial);
    for (e, c) in q.terms() {
        if let Some(l) = dominant_partition(&e[1..]) {
            if !c.is_zero() {
                out.add_term(e[0] as usize, l, c.clone());
            }
        }
    }
    Ok(out)
}
