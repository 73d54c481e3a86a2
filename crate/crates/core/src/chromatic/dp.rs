use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::poly::{Rational, UniPoly};

/// Commutative ring operations needed by [`tree_dp`].
pub trait Ring: Clone {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Dense polynomial with `i128` coefficients; the fast path for sweeps whose
/// coefficients are coloring counts. Arithmetic panics on overflow.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenseIntPoly(pub Vec<i128>);

impl DenseIntPoly {
    pub fn monomial(c: i128, degree: usize) -> Self {
        let mut v = vec![0; degree + 1];
        v[degree] = c;
        DenseIntPoly(v).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::from_bigints(self.0.iter().map(|&c| c.into()))
    }
}

impl Ring for DenseIntPoly {
    fn zero() -> Self {
        DenseIntPoly(Vec::new())
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        DenseIntPoly(
            (0..n)
                .map(|i| {
                    let a = self.0.get(i).copied().unwrap_or(0);
                    let b = other.0.get(i).copied().unwrap_or(0);
                    a.checked_add(b).expect("i128 overflow")
                })
                .collect(),
        )
        .trimmed()
    }
    fn sub(&self, other: &Self) -> Self {
        let neg = DenseIntPoly(other.0.iter().map(|&c| -c).collect());
        self.add(&neg)
    }
    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Self::zero();
        }
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                let t = a.checked_mul(b).expect("i128 overflow");
                out[i + j] = out[i + j].checked_add(t).expect("i128 overflow");
            }
        }
        DenseIntPoly(out).trimmed()
    }
}

/// Restriction on the color of the root vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootConstraint {
    Free,
    Is(usize),
    IsNot(usize),
}

impl RootConstraint {
    fn allows(self, c: usize) -> bool {
        match self {
            RootConstraint::Free => true,
            RootConstraint::Is(i) => c == i,
            RootConstraint::IsNot(i) => c != i,
        }
    }
}

/// `Σ_κ Π_v values[κ(v)]` over proper colorings of the tree `t` with colors
/// `0..values.len()`, subject to `constraint` on the color of `root`.
///
/// Computed leaves-up: `f(v, c) = values[c] · Π_{w child} (Σ_d f(w, d) - f(w, c))`.
pub fn tree_dp<R: Ring>(
    t: &Graph,
    root: usize,
    values: &[R],
    constraint: RootConstraint,
) -> Result<R> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if root >= t.n() {
        return Err(Error::OutOfRange(format!("root {root}")));
    }
    let k = values.len();
    // BFS order from the root; parents precede children.
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; t.n()];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for w in bits(t.neighbors(v)) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut f: Vec<Vec<R>> = vec![Vec::new(); t.n()];
    let mut total: Vec<R> = vec![R::zero(); t.n()];
    for &v in order.iter().rev() {
        let mut row: Vec<R> = values.to_vec();
        for w in bits(t.neighbors(v)) {
            if w == parent[v] || parent[w] != v {
                continue;
            }
            for c in 0..k {
                row[c] = row[c].mul(&total[w].sub(&f[w][c]));
            }
        }
        total[v] = row.iter().fold(R::zero(), |a, b| a.add(b));
        f[v] = row;
    }
    Ok(f[root]
        .iter()
        .enumerate()
        .filter(|&(c, _)| constraint.allows(c))
        .fold(R::zero(), |a, (_, b)| a.add(b)))
}

/// [`tree_dp`] over [`UniPoly`] with no root constraint.
pub fn tree_chromatic_dp(t: &Graph, values: &[UniPoly]) -> Result<UniPoly> {
    tree_dp(t, 0, values, RootConstraint::Free)
}

/// [`tree_dp`] with color `c` weighted by `q^{exponents[c]}`, in `i128`.
pub fn tree_dp_dense(
    t: &Graph,
    root: usize,
    exponents: &[usize],
    constraint: RootConstraint,
) -> Result<DenseIntPoly> {
    let values: Vec<DenseIntPoly> = exponents
        .iter()
        .map(|&e| DenseIntPoly::monomial(1, e))
        .collect();
    tree_dp(t, root, &values, constraint)
}
