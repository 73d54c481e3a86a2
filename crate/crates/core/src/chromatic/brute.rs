use num_traits::Zero;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::poly::{MultiPoly, Rational};

/// Maximum number of color assignments `(N+1)^n` brute force will visit.
pub const BRUTE_FORCE_LIMIT: u128 = 100_000_000;

/// Which colorings are summed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every proper coloring: `X_G`.
    All,
    /// The root gets `color`: `X_i(G_*)`.
    RootIs { root: usize, color: usize },
    /// The root avoids `color`: `X_{≠i}(G_*)`.
    RootIsNot { root: usize, color: usize },
}

impl Mode {
    pub fn x0(root: usize) -> Self {
        Mode::RootIs { root, color: 0 }
    }

    pub fn xne0(root: usize) -> Self {
        Mode::RootIsNot { root, color: 0 }
    }
}

/// `Σ_κ Π_v x_{κ(v)}` over proper colorings `κ: V -> {0..N}` allowed by `mode`.
///
/// Colorings are generated vertex by vertex, pruning a color as soon as it
/// clashes with an already colored neighbor.
pub fn brute_force(g: &Graph, n_colors_max: usize, mode: Mode) -> Result<MultiPoly> {
    let n = g.n();
    let nv = n_colors_max + 1;
    let steps = (nv as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if steps > BRUTE_FORCE_LIMIT {
        return Err(Error::guard(
            format!("brute force over ({nv})^{n} colorings"),
            BRUTE_FORCE_LIMIT,
        ));
    }
    if nv > 128 || n > u8::MAX as usize {
        return Err(Error::OutOfRange("color or vertex count".into()));
    }
    let (constrained, color, equal) = match mode {
        Mode::All => (usize::MAX, 0, true),
        Mode::RootIs { root, color } => (root, color, true),
        Mode::RootIsNot { root, color } => (root, color, false),
    };
    if constrained != usize::MAX && (constrained >= n || color >= nv) {
        return Err(Error::OutOfRange(format!(
            "root {constrained} / color {color}"
        )));
    }

    // Earlier neighbors of each vertex in the coloring order 0..n.
    let back: Vec<u64> = (0..n).map(|v| g.neighbors(v) & ((1u64 << v) - 1)).collect();
    let packed = nv <= 16;
    let mut state = State {
        back,
        nv,
        constrained,
        color,
        equal,
        col: vec![0; n],
        exps: vec![0; nv],
        key: 0,
        packed,
        counts_packed: FxHashMap::default(),
        counts_vec: FxHashMap::default(),
    };
    state.go(0);

    let mut out = MultiPoly::zero(nv);
    if packed {
        for (key, c) in state.counts_packed {
            let e = (0..nv).map(|i| (key >> (8 * i)) as u8).collect();
            out.add_term(e, Rational::from_integer(c.into()));
        }
    } else {
        for (e, c) in state.counts_vec {
            out.add_term(e, Rational::from_integer(c.into()));
        }
    }
    debug_assert!(out.terms().all(|(_, c)| !c.is_zero()));
    Ok(out)
}

struct State {
    back: Vec<u64>,
    nv: usize,
    constrained: usize,
    color: usize,
    equal: bool,
    col: Vec<usize>,
    exps: Vec<u8>,
    key: u128,
    packed: bool,
    counts_packed: FxHashMap<u128, u64>,
    counts_vec: FxHashMap<Vec<u8>, u64>,
}

impl State {
    fn go(&mut self, v: usize) {
        if v == self.col.len() {
            if self.packed {
                *self.counts_packed.entry(self.key).or_insert(0) += 1;
            } else {
                *self.counts_vec.entry(self.exps.clone()).or_insert(0) += 1;
            }
            return;
        }
        let mut blocked = 0u128;
        for w in bits(self.back[v]) {
            blocked |= 1 << self.col[w];
        }
        for c in 0..self.nv {
            if blocked >> c & 1 == 1 {
                continue;
            }
            if v == self.constrained && ((c == self.color) != self.equal) {
                continue;
            }
            self.col[v] = c;
            self.exps[c] += 1;
            if self.packed {
                self.key += 1 << (8 * c);
            }
            self.go(v + 1);
            self.exps[c] -= 1;
            if self.packed {
                self.key -= 1 << (8 * c);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::path(3)
    }

    #[test]
    fn path_all_colorings() {
        let x = brute_force(&p3(), 2, Mode::All).unwrap();
        let expected = MultiPoly::from_int_terms(
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
        );
        assert_eq!(x, expected);
    }

    #[test]
    fn path_rooted_at_endpoint_and_middle() {
        let end = brute_force(&p3(), 2, Mode::x0(0)).unwrap();
        assert_eq!(
            end,
            MultiPoly::from_int_terms(3, &[(2, &[1, 1, 1]), (1, &[2, 1, 0]), (1, &[2, 0, 1])])
        );
        let mid = brute_force(&p3(), 2, Mode::x0(1)).unwrap();
        assert_eq!(
            mid,
            MultiPoly::from_int_terms(3, &[(2, &[1, 1, 1]), (1, &[1, 2, 0]), (1, &[1, 0, 2])])
        );
    }

    #[test]
    fn modes_partition_the_colorings() {
        let g = Graph::cycle(4);
        let all = brute_force(&g, 3, Mode::All).unwrap();
        for c in 0..=3 {
            let a = brute_force(&g, 3, Mode::RootIs { root: 2, color: c }).unwrap();
            let b = brute_force(&g, 3, Mode::RootIsNot { root: 2, color: c }).unwrap();
            assert_eq!(&a + &b, all);
        }
    }

    #[test]
    fn wide_color_sets_use_vector_keys() {
        let x = brute_force(&Graph::path(2), 20, Mode::All).unwrap();
        // x_i x_j for i != j, each ordered pair once: 2 per unordered pair
        assert_eq!(x.len(), 21 * 20 / 2);
        assert!(x
            .terms()
            .all(|(_, c)| *c == Rational::from_integer(2.into())));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            brute_force(&Graph::path(12), 9, Mode::All),
            Err(Error::Guard { .. })
        ));
    }
}
