use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chromatic::{x0_zpoly, x_sym, xne0_zpoly};
use crate::error::{Error, Result};
use crate::graph::{bits, chromatic_polynomial, Graph, RootedGraph};
use crate::poly::{rat, rat_big, Rational, UniPoly};
use crate::sym::{Basis, SymExpansion, ZPoly};

/// Largest total number of specialized variables.
const VARIABLE_LIMIT: usize = 64;

/// Whether the root takes color 0 (`X_0`) or avoids it (`X_{≠0}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootMode {
    Zero,
    NonZero,
}

fn falling(k: usize, a: usize) -> BigInt {
    if a > k {
        return BigInt::zero();
    }
    (0..a).fold(BigInt::one(), |acc, i| acc * (k - i))
}

/// `f(q, ..., q, 1, ..., 1)` with `k` copies of `q` and `p` copies of `1`.
///
/// Works in the augmented monomial basis, where
/// `m̃_λ(q^k, 1^p) = Σ_{A ⊆ parts} (k)_{|A|} (p)_{ℓ-|A|} q^{Σ_A λ_j}`.
pub fn specialize_sym(f: &SymExpansion, k: usize, p: usize) -> Result<UniPoly> {
    let f = f.convert(Basis::AugmentedMonomial)?;
    let mut coeffs: Vec<Rational> = vec![Rational::zero(); f.max_weight() + 1];
    for (lambda, c) in f.terms() {
        let parts = lambda.parts();
        let l = parts.len();
        if l > k + p {
            continue;
        }
        for a in 0u64..1 << l {
            let size = a.count_ones() as usize;
            let w = falling(k, size) * falling(p, l - size);
            if !w.is_zero() {
                let deg: usize = bits(a).map(|j| parts[j]).sum();
                coeffs[deg] += c * rat_big(w);
            }
        }
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Specializes a canonical rooted invariant: `z -> q` (or `1`), then `k`
/// further variables to `q` and `p` to `1`.
pub fn specialize_zpoly(x: &ZPoly, z_to_q: bool, k: usize, p: usize) -> Result<UniPoly> {
    let mut out = UniPoly::zero();
    for (j, c) in x.z_terms() {
        let s = specialize_sym(c, k, p)?;
        out = &out + &if z_to_q { s.shift(j) } else { s };
    }
    Ok(out)
}

/// `X_G` with `x_1..x_k = q`, `x_{k+1}..x_{k+p} = 1` and all other
/// variables `0`.
pub fn spec_kp(g: &Graph, k: usize, p: usize) -> Result<UniPoly> {
    if k + p > VARIABLE_LIMIT {
        return Err(Error::guard("specialized variable count", VARIABLE_LIMIT));
    }
    specialize_sym(&x_sym(g)?, k, p)
}

/// Coefficient of `q^j` in [`spec_kp`] as `Σ_{|S| = j} χ_{G|S}(k) χ_{G|S^c}(p)`.
pub fn aj_formula(g: &Graph, k: usize, p: usize, j: usize) -> BigInt {
    let full = g.vertex_mask();
    let (kq, pq) = (rat(k as i64), rat(p as i64));
    let mut total = BigInt::zero();
    for s in subsets_of_size(g.n(), j) {
        let a = chromatic_polynomial(&g.induced(s)).eval(&kq);
        let b = chromatic_polynomial(&g.induced(full & !s)).eval(&pq);
        total += (a * b).to_integer();
    }
    total
}

fn subsets_of_size(n: usize, j: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |s| s.count_ones() as usize == j)
}

/// `X_0` or `X_{≠0}` with `x_0 = x_1 = q`, `x_2..x_{p+1} = 1`.
pub fn x_2p(g: &RootedGraph, p: usize, mode: RootMode) -> Result<UniPoly> {
    if p + 2 > VARIABLE_LIMIT {
        return Err(Error::guard("specialized variable count", VARIABLE_LIMIT));
    }
    let x = match mode {
        RootMode::Zero => x0_zpoly(g)?,
        RootMode::NonZero => xne0_zpoly(g)?,
    };
    specialize_zpoly(&x, true, 1, p)
}

/// Coefficient of `q^j` in [`x_2p`], summed over disjoint independent sets
/// `S_0` (color 0) and `S_1` (color 1) with `|S_0 ∪ S_1| = j`, the root in
/// `S_0` exactly in [`RootMode::Zero`], times `χ_{G|U}(p)` for the rest `U`.
pub fn aj2_formula(g: &RootedGraph, p: usize, j: usize, mode: RootMode) -> BigInt {
    let graph = g.graph();
    let root = 1u64 << g.root();
    let pq = rat(p as i64);
    let mut total = BigInt::zero();
    for both in subsets_of_size(graph.n(), j) {
        // S_0 ranges over subsets of `both`.
        let mut s0 = both;
        loop {
            let s1 = both & !s0;
            let root_ok = match mode {
                RootMode::Zero => s0 & root != 0,
                RootMode::NonZero => s0 & root == 0,
            };
            if root_ok && graph.is_independent(s0) && graph.is_independent(s1) {
                let u = graph.vertex_mask() & !both;
                total += chromatic_polynomial(&graph.induced(u))
                    .eval(&pq)
                    .to_integer();
            }
            if s0 == 0 {
                break;
            }
            s0 = (s0 - 1) & both;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{brute_force, Mode};
    use crate::poly::{specialize_uni, Target};

    fn targets(q: usize, ones: usize) -> Vec<Target> {
        let mut t = vec![Target::QPow(1); q];
        t.extend(std::iter::repeat_n(Target::Const(rat(1)), ones));
        t
    }

    #[test]
    fn spec_kp_agrees_with_coloring_count() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        // x_0 is unused by X_G at positive variables, so send it to 0.
        let assignment = [vec![Target::Const(Rational::zero())], targets(3, 2)].concat();
        let brute = specialize_uni(&brute_force(&g, 5, Mode::All).unwrap(), &assignment).unwrap();
        assert_eq!(spec_kp(&g, 3, 2).unwrap(), brute);
    }

    #[test]
    fn p3_coefficients() {
        let p3 = Graph::path(3);
        let f = spec_kp(&p3, 2, 3).unwrap();
        assert_eq!(f.coeff(3), rat(2));
        assert_eq!(f.coeff(0), rat(12));
        for j in 0..=3 {
            assert_eq!(f.coeff(j), rat_big(aj_formula(&p3, 2, 3, j)));
        }
    }

    #[test]
    fn x_2p_small_cases() {
        let v = RootedGraph::new(Graph::path(1), 0).unwrap();
        assert_eq!(
            x_2p(&v, 2, RootMode::NonZero).unwrap(),
            UniPoly::from_ints(&[2, 1])
        );
        let end = RootedGraph::new(Graph::path(3), 0).unwrap();
        for mode in [RootMode::Zero, RootMode::NonZero] {
            let f = x_2p(&end, 2, mode).unwrap();
            assert_eq!(f.degree(), Some(3));
            assert!(f.is_monic());
            for j in 0..=3 {
                assert_eq!(f.coeff(j), rat_big(aj2_formula(&end, 2, j, mode)));
            }
        }
    }
}
