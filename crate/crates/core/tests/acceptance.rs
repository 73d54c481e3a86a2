//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Sweep criteria run the registered verification suites at their default
//! sizes and also confirm the expected instance counts, so a suite that
//! silently skipped work would fail here. Collision and enumeration
//! criteria compare against values written out in this file.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rooted_chromatic::enumerate::{
    free_tree_canonical, free_trees, free_trees_naive, rooted_trees, rooted_trees_naive,
};
use rooted_chromatic::harness::{search_collision, verify, CollisionKind, Options, Report};
use rooted_chromatic::poly::UniPoly;
use rooted_chromatic::sym::{Basis, ZPoly};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn run_suite(name: &str) -> Result<Report, String> {
    let report = verify(name, &Options::default()).map_err(|e| format!("{name}: {e}"))?;
    if !report.passed() || !report.guard_breaches.is_empty() {
        let first = report.failures.iter().chain(&report.guard_breaches).next();
        return Err(format!(
            "{name}: {} failures, {} guard breaches; first: {first:?}",
            report.failures.len(),
            report.guard_breaches.len()
        ));
    }
    Ok(report)
}

/// Total of the named check, which must exist and be fully passed.
fn check_total(report: &Report, check: &str) -> Result<usize, String> {
    let c = report
        .checks
        .iter()
        .find(|c| c.name == check)
        .ok_or_else(|| format!("{}: no check named {check}", report.suite))?;
    if c.passed != c.total {
        return Err(format!(
            "{}: {check} passed {}/{}",
            report.suite, c.passed, c.total
        ));
    }
    Ok(c.total)
}

fn expect_total(report: &Report, check: &str, expected: usize) -> Result<(), String> {
    let total = check_total(report, check)?;
    if total != expected {
        return Err(format!(
            "{}: {check} ran on {total} instances, expected {expected}",
            report.suite
        ));
    }
    Ok(())
}

fn worked_examples() -> Outcome {
    let r = run_suite("worked-examples")?;
    let checks = [
        "path-x",
        "path-x0-endpoint",
        "path-x0-other-endpoint",
        "path-x0-middle",
        "path-xne0-endpoint",
        "path-xne0-middle",
        "path-dc-deleted",
        "path-dc-contracted",
        "path-dc-step",
        "path-dc-recursion",
        "path-pointing-sum",
        "path-pointing-derivative",
        "u-path",
        "w-weighted-path",
        "rooted-u-middle",
        "phi-of-zp",
        "psi-of-x0",
    ];
    for c in checks {
        expect_total(&r, c, 1)?;
    }
    Ok(format!(
        "{} worked examples reproduced exactly",
        checks.len()
    ))
}

fn three_way() -> Outcome {
    let r = run_suite("deletion-contraction")?;
    // Rooted trees with at most 8 vertices; connected rooted graphs with at most 6.
    expect_total(&r, "three-way-trees", 200)?;
    expect_total(&r, "dc-graphs", 481)?;
    Ok("200 rooted trees (three oracles), 481 connected rooted graphs (two oracles)".into())
}

fn identities() -> Outcome {
    let r = run_suite("identities")?;
    let names = [
        "reln",
        "reln2",
        "x0-det",
        "x0-det2",
        "coeff-zk",
        "stan-p",
        "p-exp",
        "pointing",
        "z-zero",
        "homogeneous",
    ];
    for c in names {
        expect_total(&r, c, 663)?;
    }
    Ok(format!(
        "{} identities on all 663 rooted graphs with n <= 6",
        names.len()
    ))
}

fn distinguish_rooted() -> Outcome {
    let r = run_suite("distinguish-rooted")?;
    expect_total(&r, "relabel-invariant", 7813)?;
    expect_total(&r, "pairwise-distinct-f0", 1)?;
    Ok("f_0 pairwise distinct over 7813 rooted trees with n <= 12".into())
}

fn irreducibility() -> Outcome {
    let trees = run_suite("eisenstein-trees")?;
    // Four primes for each of the 1205 rooted trees with at most 10 vertices.
    expect_total(&trees, "eisenstein", 4 * 1205)?;
    expect_total(&trees, "monic-degree-n", 4 * 1205)?;
    let bip = run_suite("eisenstein-bipartite")?;
    expect_total(&bip, "certificate", 143)?;
    check_total(&bip, "eisenstein")?;
    check_total(&bip, "aj-formula")?;
    check_total(&bip, "aj2-formula")?;
    let parity = run_suite("parity")?;
    expect_total(&parity, "linear-coefficient-parity", 1252)?;
    Ok("143 certificates, 1205 trees x 4 primes, parity on 1252 graphs".into())
}

fn principal() -> Outcome {
    let r = run_suite("principal-conjecture")?;
    expect_total(&r, "pairwise-distinct-principal", 1)?;
    if r.instances != 2288 {
        return Err(format!("{} free trees, expected 2288", r.instances));
    }
    Ok("principal specializations distinct over 2288 free trees with n <= 13".into())
}

fn collisions() -> Outcome {
    let f = UniPoly::from_ints(&[
        2, 104, 1700, 11452, 37804, 67036, 67036, 37804, 11452, 1700, 104, 2,
    ]);
    let found = search_collision(CollisionKind::FUnrooted, 11).map_err(|e| e.to_string())?;
    if !found.iter().any(|c| c.invariant == f.to_json("q")) {
        return Err(format!(
            "no 11-vertex tree pair with f = {}",
            f.display("q")
        ));
    }
    let x = ZPoly::from_int_terms(
        Basis::AugmentedMonomial,
        &[
            (0, 2, &[2, 2, 1]),
            (0, 4, &[2, 1, 1, 1]),
            (0, 1, &[1, 1, 1, 1, 1]),
        ],
    );
    let found_x = search_collision(CollisionKind::XUnrooted, 5).map_err(|e| e.to_string())?;
    if !found_x.iter().any(|c| c.invariant == x.to_json()) {
        return Err(format!("no 5-vertex graph pair with X = {x}"));
    }
    let x0 = ZPoly::from_int_terms(
        Basis::AugmentedMonomial,
        &[
            (1, 2, &[2, 1, 1]),
            (1, 1, &[1, 1, 1, 1]),
            (2, 2, &[2, 1]),
            (2, 2, &[1, 1, 1]),
        ],
    );
    let found_x0 = search_collision(CollisionKind::X0Rooted, 5).map_err(|e| e.to_string())?;
    if !found_x0.iter().any(|c| c.invariant == x0.to_json()) {
        return Err(format!("no 5-vertex rooted pair with X_0 = {x0}"));
    }
    Ok(format!(
        "found f ({} pairs at n = 11), X ({} at n = 5), X_0 ({} at n = 5)",
        found.len(),
        found_x.len(),
        found_x0.len()
    ))
}

fn pointed_u() -> Outcome {
    let pointed = run_suite("pointed")?;
    expect_total(&pointed, "x0-is-phi-zp", 663)?;
    expect_total(&pointed, "negated-z-positive", 663)?;
    expect_total(&pointed, "internal-trees", 481)?;
    let paw = run_suite("ans-paw")?;
    expect_total(&paw, "coefficient-of-minus-z-power", 481)?;
    let u = run_suite("u-polynomials")?;
    expect_total(&u, "u-equals-w", 143)?;
    expect_total(&u, "x-from-u", 143)?;
    expect_total(&u, "p-from-rooted-u", 481)?;
    Ok("transforms, positivity, internal trees, U = W and recovery on n <= 6".into())
}

fn epositivity() -> Outcome {
    let r = run_suite("epositivity")?;
    let total = check_total(&r, "x0-e-positive")?;
    Ok(format!(
        "{total} (poset, root) pairs with n <= 6 give e-positive X_0"
    ))
}

const ROOTED: [usize; 12] = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766];
const FREE: [usize; 13] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301];

fn enumeration() -> Outcome {
    for (i, &want) in ROOTED.iter().enumerate() {
        let got = rooted_trees(i + 1).map_err(|e| e.to_string())?.count();
        if got != want {
            return Err(format!(
                "{got} rooted trees on {} vertices, expected {want}",
                i + 1
            ));
        }
    }
    for (i, &want) in FREE.iter().enumerate() {
        let got = free_trees(i + 1).map_err(|e| e.to_string())?.count();
        if got != want {
            return Err(format!(
                "{got} free trees on {} vertices, expected {want}",
                i + 1
            ));
        }
    }
    for n in 1..=8 {
        let fast: BTreeSet<_> = rooted_trees(n).map_err(|e| e.to_string())?.collect();
        let naive: BTreeSet<_> = rooted_trees_naive(n)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        if fast != naive {
            return Err(format!(
                "rooted trees on {n} vertices differ from naive generation"
            ));
        }
        let canon =
            |g: &rooted_chromatic::graph::Graph| free_tree_canonical(g).map_err(|e| e.to_string());
        let fast: BTreeSet<_> = free_trees(n)
            .map_err(|e| e.to_string())?
            .map(|g| canon(&g))
            .collect::<Result<_, _>>()?;
        let naive: BTreeSet<_> = free_trees_naive(n)
            .map_err(|e| e.to_string())?
            .iter()
            .map(canon)
            .collect::<Result<_, _>>()?;
        if fast != naive {
            return Err(format!(
                "free trees on {n} vertices differ from naive generation"
            ));
        }
    }
    Ok("rooted n <= 12 and free n <= 13 match; naive agreement for n <= 8".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked examples", worked_examples),
        ("three-way oracle agreement", three_way),
        ("identity suite", identities),
        ("f_0 distinguishes rooted trees", distinguish_rooted),
        ("irreducibility certificates", irreducibility),
        ("principal specialization conjecture", principal),
        ("collision reproductions", collisions),
        ("pointed and U suite", pointed_u),
        ("refined e-positivity conjecture", epositivity),
        ("enumeration counts", enumeration),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {:2} {name} ({secs:.1}s): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:2} {name} ({secs:.1}s): {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
