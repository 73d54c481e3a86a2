//! Per-degree transition matrices between the power-sum / elementary bases
//! and the monomial basis.
//!
//! Row `λ` of the forward matrix holds the monomial coefficients of `p_λ`
//! (or `e_λ`). It is filled by peeling off the largest part: the coefficient
//! of `m_μ` in a symmetric function equals the coefficient of the single
//! monomial `x^μ`, so
//!
//! * `[x^μ] p_k F = Σ_{i: μ_i >= k} [x^{μ - k·ε_i}] F`
//! * `[x^μ] e_k F = Σ_{|S| = k} [x^{μ - 1_S}] F`
//!
//! and the right-hand sides are read from the already built smaller degree.
//! The reverse direction is the exact matrix inverse.

use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::{Basis, Partition};
use crate::error::{Error, Result};
use crate::poly::Rational;

/// Largest homogeneous degree converted unless a caller raises the bound.
pub const DEFAULT_DEGREE_BOUND: usize = 12;

pub(crate) struct Table {
    pub parts: Vec<Partition>,
    pub index: FxHashMap<Partition, usize>,
    /// `to_m[λ][μ]`: coefficient of `m_μ` in `b_λ`.
    pub to_m: Vec<Vec<Rational>>,
    /// `from_m[μ][λ]`: coefficient of `b_λ` in `m_μ`.
    pub from_m: Vec<Vec<Rational>>,
}

type Cache = RwLock<FxHashMap<(Basis, usize), Arc<Table>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(FxHashMap::default()))
}

/// Table for `basis` (power-sum or elementary) in `degree`.
pub(crate) fn table(basis: Basis, degree: usize) -> Arc<Table> {
    assert!(matches!(basis, Basis::PowerSum | Basis::Elementary));
    if let Some(t) = cache().read().unwrap().get(&(basis, degree)) {
        return t.clone();
    }
    let built = Arc::new(build(basis, degree));
    cache()
        .write()
        .unwrap()
        .entry((basis, degree))
        .or_insert(built)
        .clone()
}

pub(crate) fn check_degree(degree: usize, bound: usize) -> Result<()> {
    if degree > bound {
        return Err(Error::DegreeTooLarge { degree, bound });
    }
    Ok(())
}

fn build(basis: Basis, d: usize) -> Table {
    let parts = Partition::all(d);
    let index: FxHashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let size = parts.len();
    let mut to_m = vec![vec![Rational::zero(); size]; size];
    if d == 0 {
        to_m[0][0] = Rational::one();
    } else {
        for (li, lambda) in parts.iter().enumerate() {
            let k = lambda.parts()[0];
            let rest = Partition::from_sorted(lambda.parts()[1..].to_vec());
            let smaller = table(basis, d - k);
            let row = &smaller.to_m[smaller.index[&rest]];
            let lookup = |nu: Vec<usize>| -> Rational {
                let nu = Partition::new(nu.into_iter().filter(|&x| x > 0).collect()).unwrap();
                row[smaller.index[&nu]].clone()
            };
            for (mi, mu) in parts.iter().enumerate() {
                let mu = mu.parts();
                let mut acc = Rational::zero();
                match basis {
                    Basis::PowerSum => {
                        for i in 0..mu.len() {
                            if mu[i] >= k {
                                let mut nu = mu.to_vec();
                                nu[i] -= k;
                                acc += lookup(nu);
                            }
                        }
                    }
                    Basis::Elementary => {
                        if mu.len() >= k {
                            for_each_subset(mu.len(), k, &mut |sel| {
                                let mut nu = mu.to_vec();
                                for &i in sel {
                                    nu[i] -= 1;
                                }
                                acc += lookup(nu);
                            });
                        }
                    }
                    _ => unreachable!(),
                }
                to_m[li][mi] = acc;
            }
        }
    }
    let from_m = invert(&to_m).expect("transition matrix is invertible");
    Table {
        parts,
        index,
        to_m,
        from_m,
    }
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n - (k - cur.len()) + 1 {
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Gauss-Jordan inverse over `Q`; `None` if singular.
pub(crate) fn invert(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn row(basis: Basis, lambda: &[usize]) -> Vec<(Vec<usize>, Rational)> {
        let p = Partition::from_parts(lambda);
        let t = table(basis, p.weight());
        t.to_m[t.index[&p]]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (t.parts[i].parts().to_vec(), c.clone()))
            .collect()
    }

    #[test]
    fn small_power_sums() {
        assert_eq!(row(Basis::PowerSum, &[2]), vec![(vec![2], rat(1))]);
        assert_eq!(
            row(Basis::PowerSum, &[1, 1]),
            vec![(vec![2], rat(1)), (vec![1, 1], rat(2))]
        );
        // p_21 = m_3 + m_21
        assert_eq!(
            row(Basis::PowerSum, &[2, 1]),
            vec![(vec![3], rat(1)), (vec![2, 1], rat(1))]
        );
    }

    #[test]
    fn small_elementary() {
        assert_eq!(row(Basis::Elementary, &[2]), vec![(vec![1, 1], rat(1))]);
        // e_1^2 = m_2 + 2 m_11
        assert_eq!(
            row(Basis::Elementary, &[1, 1]),
            vec![(vec![2], rat(1)), (vec![1, 1], rat(2))]
        );
        // e_21 = m_21 + 3 m_111
        assert_eq!(
            row(Basis::Elementary, &[2, 1]),
            vec![(vec![2, 1], rat(1)), (vec![1, 1, 1], rat(3))]
        );
    }

    #[test]
    fn inverse_is_two_sided() {
        for basis in [Basis::PowerSum, Basis::Elementary] {
            let t = table(basis, 6);
            let n = t.parts.len();
            for i in 0..n {
                for j in 0..n {
                    let s: Rational = (0..n).map(|k| &t.to_m[i][k] * &t.from_m[k][j]).sum();
                    assert_eq!(s, if i == j { rat(1) } else { rat(0) });
                }
            }
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        assert!(invert(&[vec![rat(1), rat(2)], vec![rat(2), rat(4)]]).is_none());
    }
}
