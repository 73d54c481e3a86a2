use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;

use super::report::{instance_rng, Checks, Collector, Instance};
use super::search::{search_collision, CollisionKind};
use crate::chromatic::{
    apply_transposition, brute_force, coeff_zk, pointing_check, powersum_x, powersum_x0,
    recover_x_from_xne0, x0_deletion_contraction, x0_from_xne0, x0_tree_recursion, x0_zpoly,
    xne0_from_x0, xne0_zpoly, Mode, RootMembership,
};
use crate::enumerate::{
    free_trees, posets, rooted_trees, small_graphs, small_rooted_graphs, Poset,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedGraph, WeightedGraph};
use crate::pointed::{
    ans_paw_check, internal_spanning_trees, internal_spanning_trees_ordered,
    internal_trees_by_activity, p_from_rooted_u, phi, pointed_p, pointed_positivity, psi, rooted_u,
    u_poly, w_poly, x_from_u, UPoly,
};
use crate::poly::{specialize_uni, MultiPoly, Target, UniPoly};
use crate::special::{
    aj2_formula, aj_formula, eisenstein, f0_tree, f0_tree_dense, f_specialize, fi_brute,
    irreducibility_certificate, linear_coeff_parity, principal_specialization, spec_kp,
    x0det2_relations, x_2p, RootMode, Which,
};
use crate::sym::{collect_rooted, collect_symmetric, expand_zpoly, Basis, VarRange, ZPoly};

fn rooted_graphs_upto(max_n: usize, connected: bool) -> Result<Vec<RootedGraph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(small_rooted_graphs(n, connected)?);
    }
    Ok(out)
}

fn graphs_upto(max_n: usize, connected: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(small_graphs(n, connected)?);
    }
    Ok(out)
}

fn rooted_trees_upto(max_n: usize) -> Result<Vec<RootedGraph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(rooted_trees(n)?.map(|t| t.to_rooted_graph()));
    }
    Ok(out)
}

fn free_trees_upto(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(free_trees(n)?);
    }
    Ok(out)
}

/// Records one global check that no two instances share a value.
fn distinct<K: Ord + std::fmt::Debug>(
    c: &mut Collector,
    name: &'static str,
    values: Vec<(String, K)>,
) {
    let mut groups: BTreeMap<K, Vec<String>> = BTreeMap::new();
    for (line, v) in values {
        groups.entry(v).or_default().push(line);
    }
    let mut clashes = groups.into_iter().filter(|(_, g)| g.len() > 1).peekable();
    match clashes.peek() {
        None => c.global(name, true, "", String::new),
        Some((value, lines)) => {
            let (value, lines) = (format!("{value:?}"), lines.join(" | "));
            c.global(name, false, &lines, || format!("shared value {value}"));
        }
    }
}

fn shift_vars(p: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(
        p.nvars() + 1,
        p.terms().map(|(e, c)| {
            let mut v = vec![0];
            v.extend_from_slice(e);
            (v, c.clone())
        }),
    )
}

pub(super) fn identities(c: &mut Collector) -> Result<()> {
    let gs = rooted_graphs_upto(c.max_n(), false)?;
    c.sweep(gs, |g, ck| {
        let (n, r, graph) = (g.n(), g.root(), g.graph());
        let x = brute_force(graph, n, Mode::All)?;
        let x0 = brute_force(graph, n, Mode::x0(r))?;
        let xne0 = brute_force(graph, n, Mode::xne0(r))?;
        let (mut reln, mut reln2) = (true, xne0_from_x0(&x0) == xne0);
        for k in 0..=n {
            let xk = brute_force(graph, n, Mode::RootIs { root: r, color: k })?;
            let xnek = brute_force(graph, n, Mode::RootIsNot { root: r, color: k })?;
            reln &= &xk + &xnek == x;
            reln2 &=
                xk == apply_transposition(&x0, 0, k) && xnek == apply_transposition(&xne0, 0, k);
        }
        ck.check("reln", reln, || "X != X_k + X_{≠k} for some color k".into());
        ck.check("reln2", reln2, || {
            "X_k or X_{≠k} is not the transposed X_0 or X_{≠0}".into()
        });
        ck.equal("x0-det", &x0_from_xne0(&xne0, n)?, &x0);
        ck.equal("recover-x", &recover_x_from_xne0(&xne0, n)?, &x);
        let report = x0det2_relations(g)?;
        ck.check("x0-det2", report.all(), || format!("{report:?}"));
        let (x0z, xne0z) = (collect_rooted(&x0, 0)?, collect_rooted(&xne0, 0)?);
        let mut zk = true;
        for k in 0..=n {
            zk &= x0z.z_coeff(k) == coeff_zk(g, k, RootMembership::RootIn)?;
            zk &= xne0z.z_coeff(k) == coeff_zk(g, k, RootMembership::RootOut)?;
        }
        ck.check("coeff-zk", zk, || {
            "independent-set sums differ from the x_0^k coefficients".into()
        });
        ck.equal(
            "stan-p",
            &collect_symmetric(&x, VarRange::All(n))?,
            &powersum_x(graph)?.convert(Basis::Monomial)?,
        );
        ck.equal(
            "p-exp",
            &expand_zpoly(&powersum_x0(g)?, VarRange::All(n))?,
            &x0,
        );
        ck.equal(
            "z-zero",
            &xne0.set_zero(0),
            &shift_vars(&brute_force(graph, n - 1, Mode::All)?),
        );
        ck.check("pointing", pointing_check(graph, n)?, || {
            "Σ_r X_0(G_r) != x_0 ∂X/∂x_0".into()
        });
        let homogeneous = x.is_homogeneous(n) && x0.is_homogeneous(n) && xne0.is_homogeneous(n);
        ck.check("homogeneous", homogeneous, || {
            format!("not homogeneous of degree {n}")
        });
        Ok(())
    });
    Ok(())
}

pub(super) fn power_sum(c: &mut Collector) -> Result<()> {
    let gs = rooted_graphs_upto(c.max_n(), false)?;
    c.sweep(gs, |g, ck| {
        let (n, r, graph) = (g.n(), g.root(), g.graph());
        let p = powersum_x(graph)?;
        ck.equal(
            "x-from-p",
            &collect_symmetric(&brute_force(graph, n, Mode::All)?, VarRange::All(n))?,
            &p.convert(Basis::Monomial)?,
        );
        ck.check("integral-p", p.is_integral(), || format!("{p}"));
        ck.equal(
            "x0-from-p",
            &expand_zpoly(&powersum_x0(g)?, VarRange::All(n))?,
            &brute_force(graph, n, Mode::x0(r))?,
        );
        ck.equal(
            "x0-canonical",
            &expand_zpoly(&x0_zpoly(g)?, VarRange::Positive(n))?,
            &brute_force(graph, n, Mode::x0(r))?,
        );
        ck.equal(
            "xne0-from-p",
            &expand_zpoly(&xne0_zpoly(g)?, VarRange::Positive(n))?,
            &brute_force(graph, n, Mode::xne0(r))?,
        );
        Ok(())
    });
    Ok(())
}

pub(super) fn deletion_contraction(c: &mut Collector) -> Result<()> {
    let trees = rooted_trees_upto(c.max_n())?;
    c.sweep(trees, |t, ck| {
        let n = t.n();
        let brute = brute_force(t.graph(), n, Mode::x0(t.root()))?;
        let tree = x0_tree_recursion(t, n)?;
        let dc = x0_deletion_contraction(t, n)?;
        ck.check("three-way-trees", brute == tree && tree == dc, || {
            format!("brute {brute} / tree {tree} / dc {dc}")
        });
        Ok(())
    });
    let gs = rooted_graphs_upto(c.max_n().saturating_sub(2), true)?;
    c.sweep(gs, |g, ck| {
        let n = g.n();
        ck.equal(
            "dc-graphs",
            &x0_deletion_contraction(g, n)?,
            &brute_force(g.graph(), n, Mode::x0(g.root()))?,
        );
        Ok(())
    });
    Ok(())
}

fn random_relabel(g: &RootedGraph, seed: u64) -> RootedGraph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut instance_rng(seed, &g.to_line()));
    g.relabel(&perm)
}

pub(super) fn distinguish_rooted(c: &mut Collector) -> Result<()> {
    let trees = rooted_trees_upto(c.max_n())?;
    let seed = c.seed();
    let values = c.sweep(trees, |t, ck| {
        let f = f0_tree_dense(t)?;
        ck.equal(
            "relabel-invariant",
            &f0_tree_dense(&random_relabel(t, seed))?,
            &f,
        );
        if t.n() <= 8 {
            ck.equal(
                "fast-path-vs-dp",
                &f.to_unipoly(),
                &f_specialize(t, Which::F0)?,
            );
        }
        if t.n() <= 6 {
            ck.equal(
                "fast-path-vs-brute",
                &f.to_unipoly(),
                &fi_brute(t, 0, false)?,
            );
        }
        Ok(f.0)
    });
    if !c.restricted() {
        distinct(c, "pairwise-distinct-f0", values);
    }
    Ok(())
}

pub(super) fn principal_conjecture(c: &mut Collector) -> Result<()> {
    let trees = free_trees_upto(c.max_n())?;
    let values = c.sweep(trees, |t, ck| {
        let n = t.n();
        let f = principal_specialization(t, n - 1)?;
        if n <= 6 {
            let targets: Vec<Target> = (0..n as u32).map(Target::QPow).collect();
            ck.equal(
                "dp-vs-brute",
                &f,
                &specialize_uni(&brute_force(t, n - 1, Mode::All)?, &targets)?,
            );
        }
        Ok((n, f.to_integers()?))
    });
    if !c.restricted() {
        distinct(c, "pairwise-distinct-principal", values);
    }
    Ok(())
}

const TREE_PRIMES: [u64; 4] = [2, 3, 5, 7];

pub(super) fn eisenstein_trees(c: &mut Collector) -> Result<()> {
    let trees = rooted_trees_upto(c.max_n())?;
    c.sweep(trees, |t, ck| {
        let n = t.n();
        for p in TREE_PRIMES {
            let f = x_2p(t, p as usize, RootMode::NonZero)?;
            ck.check(
                "monic-degree-n",
                f.is_monic() && f.degree() == Some(n),
                || format!("p = {p}: {f}"),
            );
            let report = eisenstein(&f, p)?;
            ck.check("eisenstein", report.satisfied, || {
                format!("p = {p}: {f}: {report:?}")
            });
            let g = x_2p(t, p as usize, RootMode::Zero)?;
            ck.check(
                "monic-degree-n-root0",
                g.is_monic() && g.degree() == Some(n),
                || format!("p = {p}: {g}"),
            );
        }
        Ok(())
    });
    Ok(())
}

fn coefficients_match(f: &UniPoly, n: usize, a: impl Fn(usize) -> BigInt) -> Result<bool> {
    let coeffs = f.to_integers()?;
    Ok(
        (0..=n).all(|j| coeffs.get(j).cloned().unwrap_or_default() == a(j))
            && coeffs.len() <= n + 1,
    )
}

pub(super) fn eisenstein_bipartite(c: &mut Collector) -> Result<()> {
    let max_n = c.max_n();
    let bipartite: Vec<RootedGraph> = rooted_graphs_upto(max_n, true)?
        .into_iter()
        .filter(|g| g.graph().is_bipartite())
        .collect();
    c.sweep(bipartite, |g, ck| {
        let n = g.n();
        let c1 = crate::graph::chromatic_polynomial(g.graph())
            .coeff(1)
            .to_integer();
        for p in TREE_PRIMES {
            if p != 2 && (&c1 % p).bits() == 0 {
                continue;
            }
            let f = x_2p(g, p as usize, RootMode::NonZero)?;
            ck.check(
                "monic-degree-n",
                f.is_monic() && f.degree() == Some(n),
                || format!("p = {p}: {f}"),
            );
            let report = eisenstein(&f, p)?;
            ck.check("eisenstein", report.satisfied, || {
                format!("p = {p}: {f}: {report:?}")
            });
        }
        Ok(())
    });
    let connected = graphs_upto(max_n.saturating_sub(1), true)?;
    c.sweep(connected, |g, ck| {
        let cert = irreducibility_certificate(g)?;
        ck.check("certificate", cert.report.satisfied, || format!("{cert:?}"));
        let chi = g.chromatic_number();
        let mut pairs = vec![(cert.k, cert.p as usize)];
        pairs.extend(
            [(2, 3), (2, 5), (3, 2)]
                .into_iter()
                .filter(|&(k, _)| k >= chi),
        );
        let mut ok = true;
        for (k, p) in pairs {
            ok &= coefficients_match(&spec_kp(g, k, p)?, g.n(), |j| aj_formula(g, k, p, j))?;
        }
        ck.check("aj-formula", ok, || {
            "specialization differs from the subset formula".into()
        });
        Ok(())
    });
    let rooted = rooted_graphs_upto(max_n.saturating_sub(1), false)?;
    c.sweep(rooted, |g, ck| {
        let mut ok = true;
        for p in [2, 3] {
            for mode in [RootMode::Zero, RootMode::NonZero] {
                ok &=
                    coefficients_match(&x_2p(g, p, mode)?, g.n(), |j| aj2_formula(g, p, j, mode))?;
            }
        }
        ck.check("aj2-formula", ok, || {
            "specialization differs from the independent-pair formula".into()
        });
        Ok(())
    });
    Ok(())
}

pub(super) fn parity(c: &mut Collector) -> Result<()> {
    let gs = graphs_upto(c.max_n(), false)?;
    c.sweep(gs, |g, ck| {
        ck.check("linear-coefficient-parity", linear_coeff_parity(g), || {
            "parity of c_1 is wrong".into()
        });
        Ok(())
    });
    Ok(())
}

const EDGE_ORDERS: usize = 5;

pub(super) fn pointed(c: &mut Collector) -> Result<()> {
    let gs = rooted_graphs_upto(c.max_n(), false)?;
    let seed = c.seed();
    c.sweep(gs, |g, ck| {
        let n = g.n();
        let x0 = collect_rooted(&brute_force(g.graph(), n, Mode::x0(g.root()))?, 0)?;
        let zp = pointed_p(g)?.shift_z(1);
        ck.equal("x0-is-phi-zp", &phi(&zp)?.convert(Basis::Monomial)?, &x0);
        ck.equal("zp-is-psi-x0", &psi(&x0)?, &zp);
        ck.check("negated-z-positive", pointed_positivity(g)?, || {
            "negative monomial coefficient".into()
        });
        let h = g.graph();
        if h.is_connected() {
            let base = internal_spanning_trees(h)?;
            let mut ok = base.by_involution as i64 == base.by_signed_sum && base.by_involution >= 1;
            ok &= !h.is_tree() || base.by_involution == 1;
            let mut rng = instance_rng(seed, &g.to_line());
            for _ in 0..EDGE_ORDERS {
                let mut rank: Vec<usize> = (0..h.edge_count()).collect();
                rank.shuffle(&mut rng);
                ok &= internal_spanning_trees_ordered(h, &rank)? == base;
                ok &= internal_trees_by_activity(h, &rank)? == base.by_involution;
            }
            ck.check("internal-trees", ok, || format!("{base:?}"));
        }
        Ok(())
    });
    Ok(())
}

pub(super) fn ans_paw(c: &mut Collector) -> Result<()> {
    let gs = rooted_graphs_upto(c.max_n(), true)?;
    c.sweep(gs, |g, ck| {
        let mut failed = Vec::new();
        for k in 0..=g.n() {
            if !ans_paw_check(g, k)? {
                failed.push(k);
            }
        }
        ck.check("coefficient-of-minus-z-power", failed.is_empty(), || {
            format!("fails for k in {failed:?}")
        });
        Ok(())
    });
    Ok(())
}

pub(super) fn u_polynomials(c: &mut Collector) -> Result<()> {
    let max_n = c.max_n();
    let gs = graphs_upto(max_n, true)?;
    c.sweep(gs, |g, ck| {
        let u = u_poly(g)?;
        ck.equal("u-equals-w", &w_poly(&WeightedGraph::unit(g))?, &u);
        ck.equal("x-from-u", &x_from_u(&u)?, &powersum_x(g)?);
        if g.is_tree() {
            ck.check("tree-has-no-y", !u.has_y(), || format!("{u}"));
        }
        Ok(())
    });
    let rooted = rooted_graphs_upto(max_n, true)?;
    c.sweep(rooted, |g, ck| {
        let ur: UPoly = rooted_u(g)?;
        ck.equal(
            "p-from-rooted-u",
            &p_from_rooted_u(&ur, g.n())?,
            &pointed_p(g)?,
        );
        Ok(())
    });
    Ok(())
}

/// A poset with a distinguished element.
struct RootedPoset {
    poset: Poset,
    root: usize,
}

impl Instance for RootedPoset {
    fn line(&self) -> String {
        format!("root {}; {}", self.root, self.poset.to_record().to_line())
    }
}

pub(super) fn epositivity(c: &mut Collector) -> Result<()> {
    let mut instances = Vec::new();
    for n in 1..=c.max_n() {
        for poset in posets(n)? {
            for root in 0..n {
                let rest = ((1u64 << n) - 1) & !(1 << root);
                if poset.induced(rest).is_31_free() {
                    instances.push(RootedPoset {
                        poset: poset.clone(),
                        root,
                    });
                }
            }
        }
    }
    c.sweep(instances, |i, ck| {
        let g = RootedGraph::new(i.poset.incomparability_graph(), i.root)?;
        let x0 = x0_zpoly(&g)?;
        ck.check("x0-e-positive", x0.is_e_positive()?, || {
            format!("{}", x0.convert(Basis::Elementary).unwrap_or(x0.clone()))
        });
        Ok(())
    });
    Ok(())
}

fn mono(nvars: usize, terms: &[(i64, &[u8])]) -> MultiPoly {
    MultiPoly::from_int_terms(nvars, terms)
}

fn mtilde(terms: &[(usize, i64, &[usize])]) -> ZPoly {
    ZPoly::from_int_terms(Basis::AugmentedMonomial, terms)
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges)
}

/// A named worked example, serialized as its name.
struct Example(&'static str);

impl Instance for Example {
    fn line(&self) -> String {
        self.0.to_string()
    }
}

const EXAMPLES: [&str; 9] = [
    "path-x",
    "path-x0",
    "path-xne0",
    "path-dc",
    "path-pointing",
    "u-examples",
    "pointed-transform",
    "f0-collision",
    "collisions",
];

pub(super) fn worked_examples(c: &mut Collector) -> Result<()> {
    let examples = EXAMPLES.iter().map(|&e| Example(e)).collect();
    c.sweep(examples, |e, ck| example(e.0, ck));
    Ok(())
}

fn example(name: &str, ck: &mut Checks) -> Result<()> {
    let p3 = Graph::path(3);
    let end = RootedGraph::new(p3.clone(), 0)?;
    let other_end = RootedGraph::new(p3.clone(), 2)?;
    let mid = RootedGraph::new(p3.clone(), 1)?;
    // Exponent vectors are over (x_0, x_1, x_2).
    let x0_end = mono(3, &[(2, &[1, 1, 1]), (1, &[2, 1, 0]), (1, &[2, 0, 1])]);
    let x0_mid = mono(3, &[(2, &[1, 1, 1]), (1, &[1, 2, 0]), (1, &[1, 0, 2])]);
    match name {
        "path-x" => {
            let x = mono(
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
            ck.equal("path-x", &brute_force(&p3, 2, Mode::All)?, &x);
        }
        "path-x0" => {
            ck.equal(
                "path-x0-endpoint",
                &brute_force(&p3, 2, Mode::x0(0))?,
                &x0_end,
            );
            ck.equal(
                "path-x0-other-endpoint",
                &brute_force(&p3, 2, Mode::x0(2))?,
                &x0_end,
            );
            ck.equal(
                "path-x0-middle",
                &brute_force(&p3, 2, Mode::x0(1))?,
                &x0_mid,
            );
        }
        "path-xne0" => {
            let xne0_end = mono(
                3,
                &[
                    (4, &[1, 1, 1]),
                    (1, &[1, 2, 0]),
                    (1, &[1, 0, 2]),
                    (1, &[0, 2, 1]),
                    (1, &[0, 1, 2]),
                ],
            );
            let xne0_mid = mono(
                3,
                &[
                    (4, &[1, 1, 1]),
                    (1, &[2, 1, 0]),
                    (1, &[2, 0, 1]),
                    (1, &[0, 1, 2]),
                    (1, &[0, 2, 1]),
                ],
            );
            ck.equal(
                "path-xne0-endpoint",
                &brute_force(&p3, 2, Mode::xne0(0))?,
                &xne0_end,
            );
            ck.equal(
                "path-xne0-other-endpoint",
                &brute_force(&p3, 2, Mode::xne0(2))?,
                &xne0_end,
            );
            ck.equal(
                "path-xne0-middle",
                &brute_force(&p3, 2, Mode::xne0(1))?,
                &xne0_mid,
            );
        }
        "path-dc" => {
            let deleted = RootedGraph::new(graph(3, &[(1, 2)])?, 0)?;
            let contracted = RootedGraph::new(Graph::path(2), 0)?;
            let deleted_x0 = mono(3, &[(2, &[2, 1, 0]), (2, &[2, 0, 1]), (2, &[1, 1, 1])]);
            let contracted_x0 = mono(3, &[(1, &[1, 1, 0]), (1, &[1, 0, 1])]);
            ck.equal(
                "path-dc-deleted",
                &brute_force(deleted.graph(), 2, Mode::x0(0))?,
                &deleted_x0,
            );
            ck.equal(
                "path-dc-contracted",
                &brute_force(contracted.graph(), 2, Mode::x0(0))?,
                &contracted_x0,
            );
            ck.equal(
                "path-dc-step",
                &(&deleted_x0 - &contracted_x0.mul_var(0)),
                &x0_end,
            );
            ck.equal(
                "path-dc-recursion",
                &x0_deletion_contraction(&end, 2)?,
                &x0_end,
            );
        }
        "path-pointing" => {
            let sum = [&end, &mid, &other_end]
                .iter()
                .map(|g| brute_force(g.graph(), 2, Mode::x0(g.root())))
                .collect::<Result<Vec<_>>>()?;
            let total = &(&sum[0] + &sum[1]) + &sum[2];
            let expected = mono(
                3,
                &[
                    (6, &[1, 1, 1]),
                    (2, &[2, 1, 0]),
                    (2, &[2, 0, 1]),
                    (1, &[1, 2, 0]),
                    (1, &[1, 0, 2]),
                ],
            );
            ck.equal("path-pointing-sum", &total, &expected);
            ck.equal(
                "path-pointing-derivative",
                &brute_force(&p3, 2, Mode::All)?.euler_derivative(0),
                &expected,
            );
        }
        "u-examples" => {
            let u = UPoly::from_int_terms(&[
                (1, &[1, 1, 1], 0, 0),
                (2, &[2, 1], 0, 0),
                (1, &[3], 0, 0),
            ]);
            ck.equal("u-path", &u_poly(&p3)?, &u);
            let weighted = WeightedGraph::new(3, vec![(0, 1), (1, 2)], vec![3, 1, 1])?;
            let w = UPoly::from_int_terms(&[
                (1, &[3, 1, 1], 0, 0),
                (1, &[3, 2], 0, 0),
                (1, &[4, 1], 0, 0),
                (1, &[5], 0, 0),
            ]);
            ck.equal("w-weighted-path", &w_poly(&weighted)?, &w);
            let ur = UPoly::from_int_terms(&[(1, &[1, 1], 0, 1), (2, &[1], 0, 2), (1, &[], 0, 3)]);
            ck.equal("rooted-u-middle", &rooted_u(&mid)?, &ur);
        }
        "pointed-transform" => {
            let zp = ZPoly::from_int_terms(
                Basis::PowerSum,
                &[
                    (1, 1, &[1, 1, 1, 1]),
                    (1, -2, &[2, 1, 1]),
                    (1, 1, &[3, 1]),
                    (2, -2, &[1, 1, 1]),
                    (2, 2, &[2, 1]),
                    (2, -1, &[3]),
                    (3, 3, &[1, 1]),
                    (4, -3, &[1]),
                    (5, 1, &[]),
                ],
            );
            let x0 = ZPoly::from_int_terms(
                Basis::PowerSum,
                &[
                    (1, 1, &[1, 1, 1, 1]),
                    (1, -2, &[2, 1, 1]),
                    (1, 1, &[3, 1]),
                    (2, 2, &[1, 1, 1]),
                    (2, -2, &[2, 1]),
                    (3, 1, &[1, 1]),
                ],
            );
            ck.equal("phi-of-zp", &phi(&zp)?, &x0);
            ck.equal("psi-of-x0", &psi(&x0)?, &zp);
        }
        "f0-collision" => {
            let f = UniPoly::from_ints(&[
                2, 104, 1700, 11452, 37804, 67036, 67036, 37804, 11452, 1700, 104, 2,
            ]);
            let found = search_collision(CollisionKind::FUnrooted, 11)?;
            let hit = found.iter().any(|col| col.invariant == f.to_json("q"));
            ck.check("f-collision-11", hit, || {
                format!("{} collisions, none with {f}", found.len())
            });
            ck.equal(
                "f0-single-edge",
                &f0_tree(&RootedGraph::new(Graph::path(2), 0)?)?,
                &UniPoly::from_ints(&[0, 2, 1]),
            );
        }
        "collisions" => {
            let x = mtilde(&[
                (0, 2, &[2, 2, 1]),
                (0, 4, &[2, 1, 1, 1]),
                (0, 1, &[1, 1, 1, 1, 1]),
            ]);
            let found = search_collision(CollisionKind::XUnrooted, 5)?;
            let hit = found.iter().any(|col| col.invariant == x.to_json());
            ck.check("x-collision-5", hit, || {
                format!("{} collisions, none with {x}", found.len())
            });
            let x0 = mtilde(&[
                (1, 2, &[2, 1, 1]),
                (1, 1, &[1, 1, 1, 1]),
                (2, 2, &[2, 1]),
                (2, 2, &[1, 1, 1]),
            ]);
            let found = search_collision(CollisionKind::X0Rooted, 5)?;
            let hit = found.iter().any(|col| col.invariant == x0.to_json());
            ck.check("x0-collision-5", hit, || {
                format!("{} collisions, none with {x0}", found.len())
            });
        }
        other => {
            return Err(Error::Unknown {
                kind: "example",
                name: other.to_string(),
            })
        }
    }
    Ok(())
}
