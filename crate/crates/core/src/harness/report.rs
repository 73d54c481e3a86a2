use std::fmt::{Debug, Write};
use std::hash::Hasher;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHasher;
use serde::Serialize;

use super::Options;
use crate::error::{Error, Result};

const DETAIL_LIMIT: usize = 600;

/// Pass counts for one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub passed: usize,
    pub total: usize,
}

/// A failed check or a resource guard breach on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub instance: String,
    pub detail: String,
    pub reproduce: String,
}

/// Outcome of one verification suite. Contains no timing, so equal
/// inputs give byte-identical JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub max_n: usize,
    pub seed: u64,
    pub instances: usize,
    pub checks: Vec<CheckSummary>,
    pub failures: Vec<Failure>,
    pub guard_breaches: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// 0 on success, 1 on any failure, 3 when only guards were hit.
    pub fn exit_code(&self) -> i32 {
        if !self.failures.is_empty() {
            1
        } else if !self.guard_breaches.is_empty() {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report is serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "suite {} (max-n {}, seed {}): {} instances",
            self.suite, self.max_n, self.seed, self.instances
        )
        .unwrap();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let mark = if c.passed == c.total { "ok" } else { "FAIL" };
            writeln!(
                s,
                "  {:width$}  {:>7}/{:<7} {mark}",
                c.name, c.passed, c.total
            )
            .unwrap();
        }
        for (label, list) in [("failure", &self.failures), ("guard", &self.guard_breaches)] {
            for f in list {
                writeln!(s, "{label} [{}] {}: {}", f.check, f.instance, f.detail).unwrap();
                writeln!(s, "  reproduce: {}", f.reproduce).unwrap();
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            s,
            "{verdict}: {} failures, {} guard breaches",
            self.failures.len(),
            self.guard_breaches.len()
        )
        .unwrap();
        s
    }
}

/// Something a suite sweeps over, serialized as one text line.
pub(crate) trait Instance: Sync {
    fn line(&self) -> String;
}

impl Instance for crate::graph::Graph {
    fn line(&self) -> String {
        self.to_line()
    }
}

impl Instance for crate::graph::RootedGraph {
    fn line(&self) -> String {
        self.to_line()
    }
}

/// Collapses whitespace around `;` so equivalent lines compare equal.
pub(crate) fn normalize(line: &str) -> String {
    line.split(';')
        .map(|part| part.split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|p| !p.is_empty())
        .collect::<Vec<_>>()
        .join("; ")
}

/// A random source determined by the seed and the instance alone, so
/// results do not depend on scheduling or on `--only`.
pub(crate) fn instance_rng(seed: u64, line: &str) -> ChaCha8Rng {
    let mut h = FxHasher::default();
    h.write(line.as_bytes());
    ChaCha8Rng::seed_from_u64(seed ^ h.finish())
}

/// Check results for one instance.
#[derive(Default)]
pub(crate) struct Checks {
    results: Vec<(&'static str, Option<String>)>,
}

fn clip(mut s: String) -> String {
    if s.len() > DETAIL_LIMIT {
        let mut cut = DETAIL_LIMIT;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str("...");
    }
    s
}

impl Checks {
    pub fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.results
            .push((name, if ok { None } else { Some(clip(detail())) }));
    }

    pub fn equal<T: PartialEq + Debug>(&mut self, name: &'static str, left: &T, right: &T) {
        self.check(name, left == right, || format!("{left:?} != {right:?}"));
    }
}

/// Accumulates a [`Report`] across the sweeps of one suite.
pub(crate) struct Collector<'a> {
    opts: &'a Options,
    pool: rayon::ThreadPool,
    only: Option<String>,
    pub report: Report,
}

impl<'a> Collector<'a> {
    pub fn new(suite: &str, max_n: usize, opts: &'a Options) -> Result<Self> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
        Ok(Collector {
            opts,
            pool,
            only: opts.only.as_deref().map(normalize),
            report: Report {
                suite: suite.to_string(),
                max_n,
                seed: opts.seed,
                instances: 0,
                checks: Vec::new(),
                failures: Vec::new(),
                guard_breaches: Vec::new(),
            },
        })
    }

    pub fn max_n(&self) -> usize {
        self.report.max_n
    }

    pub fn seed(&self) -> u64 {
        self.opts.seed
    }

    /// Whether the run is restricted to a single instance.
    pub fn restricted(&self) -> bool {
        self.only.is_some()
    }

    fn command(&self) -> String {
        format!(
            "rooted-chromatic verify {} --max-n {} --seed {}",
            self.report.suite, self.report.max_n, self.opts.seed
        )
    }

    fn reproduce(&self, line: &str) -> String {
        format!("{} --only '{line}'", self.command())
    }

    fn summary(&mut self, name: &str) -> &mut CheckSummary {
        let i = match self.report.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.report.checks.push(CheckSummary {
                    name: name.to_string(),
                    passed: 0,
                    total: 0,
                });
                self.report.checks.len() - 1
            }
        };
        &mut self.report.checks[i]
    }

    /// Runs `f` on every instance in parallel and folds the outcomes in
    /// input order. Returns the instance lines and values of the instances
    /// whose evaluation did not error.
    pub fn sweep<I, T, F>(&mut self, instances: Vec<I>, f: F) -> Vec<(String, T)>
    where
        I: Instance,
        T: Send,
        F: Fn(&I, &mut Checks) -> Result<T> + Sync,
    {
        let only = self.only.clone();
        let selected: Vec<(String, I)> = instances
            .into_iter()
            .map(|i| (i.line(), i))
            .filter(|(line, _)| only.as_ref().is_none_or(|o| normalize(line) == *o))
            .collect();
        let outcomes: Vec<(Checks, Result<T>)> = self.pool.install(|| {
            selected
                .par_iter()
                .map(|(_, inst)| {
                    let mut checks = Checks::default();
                    let r = f(inst, &mut checks);
                    (checks, r)
                })
                .collect()
        });
        let mut values = Vec::new();
        for ((line, _), (checks, r)) in selected.into_iter().zip(outcomes) {
            self.report.instances += 1;
            for (name, failure) in checks.results {
                let s = self.summary(name);
                s.total += 1;
                match failure {
                    None => s.passed += 1,
                    Some(detail) => {
                        let reproduce = self.reproduce(&line);
                        self.report.failures.push(Failure {
                            check: name.to_string(),
                            instance: line.clone(),
                            detail,
                            reproduce,
                        });
                    }
                }
            }
            match r {
                Ok(v) => values.push((line, v)),
                Err(e) => {
                    let failure = Failure {
                        check: "error".into(),
                        instance: line.clone(),
                        detail: e.to_string(),
                        reproduce: self.reproduce(&line),
                    };
                    if matches!(e, Error::Guard { .. }) {
                        self.report.guard_breaches.push(failure);
                    } else {
                        self.report.failures.push(failure);
                    }
                }
            }
        }
        values
    }

    /// Records a check over the whole sweep, such as pairwise
    /// distinctness.
    pub fn global(
        &mut self,
        name: &'static str,
        ok: bool,
        instance: &str,
        detail: impl FnOnce() -> String,
    ) {
        let s = self.summary(name);
        s.total += 1;
        if ok {
            s.passed += 1;
        } else {
            let failure = Failure {
                check: name.to_string(),
                instance: instance.to_string(),
                detail: clip(detail()),
                reproduce: self.command(),
            };
            self.report.failures.push(failure);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_instance_lines() {
        assert_eq!(
            normalize(" root 1 ;3  2;0 1; 1 2 "),
            "root 1; 3 2; 0 1; 1 2"
        );
    }

    #[test]
    fn clips_long_details() {
        assert_eq!(clip("é".repeat(400)).len(), DETAIL_LIMIT + 3);
    }
}
