use rooted_chromatic::graph::GraphRecord;
use rooted_chromatic::harness::{compute, verify, ComputeParams, Invariant, Options, SUITES};
use rooted_chromatic::Error;

fn opts(max_n: usize, jobs: usize, seed: u64) -> Options {
    Options {
        max_n: Some(max_n),
        jobs,
        seed,
        only: None,
    }
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(matches!(
        verify("nope", &Options::default()),
        Err(Error::Unknown { .. })
    ));
}

#[test]
fn every_suite_guards_its_limit() {
    for s in &SUITES {
        let err = verify(s.name, &opts(s.limit + 1, 1, 0)).unwrap_err();
        assert!(matches!(err, Error::Guard { .. }), "{}: {err}", s.name);
    }
}

#[test]
fn every_suite_passes_at_small_size() {
    for s in SUITES.iter().filter(|s| s.name != "worked-examples") {
        let report = verify(s.name, &opts(4, 1, 7)).unwrap();
        assert!(report.passed(), "{}: {:?}", s.name, report.failures);
        assert_eq!(report.exit_code(), 0);
        assert!(report.instances > 0, "{}", s.name);
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    for name in ["pointed", "identities", "principal-conjecture"] {
        let a = verify(name, &opts(5, 1, 11)).unwrap().to_json();
        let b = verify(name, &opts(5, 4, 11)).unwrap().to_json();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn seeds_change_sampling_not_verdicts() {
    let a = verify("pointed", &opts(5, 1, 1)).unwrap();
    let b = verify("pointed", &opts(5, 1, 2)).unwrap();
    assert!(a.passed() && b.passed());
    assert_eq!(a.instances, b.instances);
}

#[test]
fn only_selects_one_instance() {
    let line = "root 2; 3 2; 0 2; 1 2".to_string();
    let report = verify(
        "identities",
        &Options {
            only: Some(line),
            ..opts(3, 1, 0)
        },
    )
    .unwrap();
    assert_eq!(report.instances, 1);
    assert!(report.passed());
}

#[test]
fn compute_reports_bad_parameters() {
    let record = GraphRecord::parse("3 2\n0 1\n1 2\n").unwrap();
    assert!(Invariant::parse("nope").is_err());
    let x2p = compute(
        &record,
        Invariant::parse("x-2p").unwrap(),
        &ComputeParams::default(),
    );
    assert!(x2p.is_err());
}
