//! Verification suites, collision searches and invariant computation
//! behind the command-line interface.
//!
//! A suite sweeps an exhaustive family of small instances, runs exact
//! checks on each in parallel and folds the outcomes in input order, so a
//! [`Report`] depends only on the suite, `max_n` and the seed.

mod compute;
mod report;
mod search;
mod suites;

pub use compute::{compute, ComputeParams, Computed, Invariant};
pub use report::{CheckSummary, Failure, Report};
pub use search::{search_collision, Collision, CollisionKind};

use report::Collector;

use crate::error::{Error, Result};

/// Settings shared by every suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Largest instance size; the suite default when `None`.
    pub max_n: Option<usize>,
    /// Worker threads; 0 picks one per core.
    pub jobs: usize,
    pub seed: u64,
    /// Restricts the run to the instance with this text line.
    pub only: Option<String>,
}

type SuiteFn = fn(&mut Collector) -> Result<()>;

/// A registered suite with its default and largest accepted `max_n`.
pub struct Suite {
    pub name: &'static str,
    pub default_max_n: usize,
    pub limit: usize,
    pub about: &'static str,
    run: SuiteFn,
}

pub const SUITES: [Suite; 13] = [
    Suite {
        name: "identities",
        default_max_n: 6,
        limit: 7,
        about: "color-permutation, coefficient and power-sum identities on all rooted graphs",
        run: suites::identities,
    },
    Suite {
        name: "power-sum",
        default_max_n: 6,
        limit: 7,
        about: "power-sum expansions of X, X_0 and X_≠0 against brute force",
        run: suites::power_sum,
    },
    Suite {
        name: "deletion-contraction",
        default_max_n: 8,
        limit: 9,
        about: "brute force, tree recursion and deletion-contraction agree",
        run: suites::deletion_contraction,
    },
    Suite {
        name: "distinguish-rooted",
        default_max_n: 12,
        limit: 20,
        about: "f_0 separates non-isomorphic rooted trees",
        run: suites::distinguish_rooted,
    },
    Suite {
        name: "principal-conjecture",
        default_max_n: 13,
        limit: 18,
        about: "principal specializations separate non-isomorphic trees",
        run: suites::principal_conjecture,
    },
    Suite {
        name: "eisenstein-trees",
        default_max_n: 10,
        limit: 20,
        about: "X_≠0 at (q, q, 1^p) is monic and Eisenstein on rooted trees",
        run: suites::eisenstein_trees,
    },
    Suite {
        name: "eisenstein-bipartite",
        default_max_n: 7,
        limit: 7,
        about: "Eisenstein certificates on bipartite and connected graphs, coefficient formulas",
        run: suites::eisenstein_bipartite,
    },
    Suite {
        name: "parity",
        default_max_n: 7,
        limit: 7,
        about: "the linear coefficient of χ_G is odd iff G is connected and bipartite",
        run: suites::parity,
    },
    Suite {
        name: "pointed",
        default_max_n: 6,
        limit: 7,
        about: "pointed function transforms, positivity and internal spanning trees",
        run: suites::pointed,
    },
    Suite {
        name: "ans-paw",
        default_max_n: 6,
        limit: 7,
        about: "coefficients of (-z)^k in the pointed function",
        run: suites::ans_paw,
    },
    Suite {
        name: "u-polynomials",
        default_max_n: 6,
        limit: 7,
        about: "U, W and rooted U polynomials and recovery of X and P",
        run: suites::u_polynomials,
    },
    Suite {
        name: "epositivity",
        default_max_n: 6,
        limit: 6,
        about: "X_0 of incomparability graphs is e-positive when P - r is (3+1)-free",
        run: suites::epositivity,
    },
    Suite {
        name: "worked-examples",
        default_max_n: 11,
        limit: 11,
        about: "worked examples and collision reproductions",
        run: suites::worked_examples,
    },
];

pub fn suite(name: &str) -> Result<&'static Suite> {
    SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::Unknown {
            kind: "suite",
            name: name.to_string(),
        })
}

/// Runs the named suite.
pub fn verify(name: &str, opts: &Options) -> Result<Report> {
    let s = suite(name)?;
    let max_n = opts.max_n.unwrap_or(s.default_max_n);
    if max_n > s.limit {
        return Err(Error::guard(format!("max-n for suite {name}"), s.limit));
    }
    let mut c = Collector::new(s.name, max_n, opts)?;
    (s.run)(&mut c)?;
    if let (Some(line), 0) = (&opts.only, c.report.instances) {
        return Err(Error::Invalid(format!(
            "no instance of suite {name} matches {line:?}"
        )));
    }
    Ok(c.report)
}
