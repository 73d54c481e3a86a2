use crate::chromatic::{brute_force, tree_dp_dense, DenseIntPoly, Mode, Ring, RootConstraint};
use crate::error::Result;
use crate::graph::{Graph, RootedGraph};
use crate::poly::{rat, rat_frac, specialize_uni, Target, UniPoly};

/// Which specialization at `(q, q, 1, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    /// `f_0(G_*) = X_0(G_*; q, q, 1, 1)`.
    F0,
    /// `f_{≠0}(G_*) = X_{≠0}(G_*; q, q, 1, 1)`.
    Fne0,
    /// `f_G = X_G(q, q, 1, 1)`.
    FG,
}

const QQ11: [usize; 4] = [1, 1, 0, 0];

fn qq11_targets() -> [Target; 4] {
    [
        Target::QPow(1),
        Target::QPow(1),
        Target::Const(rat(1)),
        Target::Const(rat(1)),
    ]
}

/// The `(q, q, 1, 1)` specialization; trees use the coloring DP, other
/// graphs brute force.
pub fn f_specialize(g: &RootedGraph, which: Which) -> Result<UniPoly> {
    let r = g.root();
    if g.graph().is_tree() {
        let c = match which {
            Which::F0 => RootConstraint::Is(0),
            Which::Fne0 => RootConstraint::IsNot(0),
            Which::FG => RootConstraint::Free,
        };
        return Ok(tree_dp_dense(g.graph(), r, &QQ11, c)?.to_unipoly());
    }
    let mode = match which {
        Which::F0 => Mode::x0(r),
        Which::Fne0 => Mode::xne0(r),
        Which::FG => Mode::All,
    };
    specialize_uni(&brute_force(g.graph(), 3, mode)?, &qq11_targets())
}

/// `f_i` (`exclude = false`) or `f_{≠i}` (`exclude = true`) at
/// `(q, q, 1, 1)` by brute force.
pub fn fi_brute(g: &RootedGraph, i: usize, exclude: bool) -> Result<UniPoly> {
    let root = g.root();
    let mode = if exclude {
        Mode::RootIsNot { root, color: i }
    } else {
        Mode::RootIs { root, color: i }
    };
    specialize_uni(&brute_force(g.graph(), 3, mode)?, &qq11_targets())
}

fn rev_dense(f: &DenseIntPoly, n: usize) -> DenseIntPoly {
    let mut c = f.0.clone();
    c.resize(n + 1, 0);
    c.reverse();
    DenseIntPoly::zero().add(&DenseIntPoly(c))
}

/// `f_0(T_*)` of a rooted tree in `i128` arithmetic by
/// `f_0(T_*) = q Π_j f_{≠0}(T_{j*})` and `f_{≠0} = f_0 + 2 rev_n(f_0)`.
pub fn f0_tree_dense(t: &RootedGraph) -> Result<DenseIntPoly> {
    let mut acc = DenseIntPoly::monomial(1, 1);
    for sub in t.principal_subtrees()? {
        let f0 = f0_tree_dense(&sub)?;
        let rev = rev_dense(&f0, sub.n());
        let fne0 = f0.add(&rev).add(&rev);
        acc = acc.mul(&fne0);
    }
    Ok(acc)
}

/// [`f0_tree_dense`] as a [`UniPoly`].
pub fn f0_tree(t: &RootedGraph) -> Result<UniPoly> {
    Ok(f0_tree_dense(t)?.to_unipoly())
}

/// Principal specialization `X_G(1, q, q^2, ..., q^N)`; trees use the
/// coloring DP, other graphs brute force.
pub fn principal_specialization(g: &Graph, n_colors_max: usize) -> Result<UniPoly> {
    let exponents: Vec<usize> = (0..=n_colors_max).collect();
    if g.is_tree() {
        return Ok(tree_dp_dense(g, 0, &exponents, RootConstraint::Free)?.to_unipoly());
    }
    let targets: Vec<Target> = exponents.iter().map(|&e| Target::QPow(e as u32)).collect();
    specialize_uni(&brute_force(g, n_colors_max, Mode::All)?, &targets)
}

/// Outcome of the five `(q, q, 1, 1)` symmetry identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X0Det2Report {
    /// `f_0 = f_1` and `f_2 = f_3 = rev_n(f_0)`.
    pub a: bool,
    /// `f_{≠0} = f_{≠1}` and `f_{≠2} = f_{≠3} = rev_n(f_{≠0})`.
    pub b: bool,
    /// `f_G = 2 f_0 + 2 rev_n(f_0)`.
    pub c: bool,
    /// `f_G = (2/3) f_{≠0} + (2/3) rev_n(f_{≠0})`.
    pub d: bool,
    /// `f_0 = f_G - f_{≠0} = (-1/3) f_{≠0} + (2/3) rev_n(f_{≠0})`.
    pub e: bool,
}

impl X0Det2Report {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e
    }
}

/// Checks the identities from brute-force values of every `f_i`, `f_{≠i}`.
pub fn x0det2_relations(g: &RootedGraph) -> Result<X0Det2Report> {
    let n = g.n();
    let f: Vec<UniPoly> = (0..4)
        .map(|i| fi_brute(g, i, false))
        .collect::<Result<_>>()?;
    let fne: Vec<UniPoly> = (0..4)
        .map(|i| fi_brute(g, i, true))
        .collect::<Result<_>>()?;
    let fg = specialize_uni(&brute_force(g.graph(), 3, Mode::All)?, &qq11_targets())?;
    let rev0 = f[0].rev(n)?;
    let revne0 = fne[0].rev(n)?;
    let two = rat(2);
    Ok(X0Det2Report {
        a: f[0] == f[1] && f[2] == f[3] && f[2] == rev0,
        b: fne[0] == fne[1] && fne[2] == fne[3] && fne[2] == revne0,
        c: fg == (&f[0] + &rev0).scale(&two),
        d: fg == (&fne[0] + &revne0).scale(&rat_frac(2, 3)),
        e: f[0] == &fg - &fne[0]
            && f[0] == &fne[0].scale(&rat_frac(-1, 3)) + &revne0.scale(&rat_frac(2, 3)),
    })
}
