use invariable::verify::{run, Suite, VerifyConfig};

fn check(suite: Suite, config: VerifyConfig) {
    let report = run(suite, config).unwrap();
    for c in &report.checks {
        assert!(
            c.passed(),
            "{}: {} failures of {}; first: {:?}",
            c.name,
            c.failures,
            c.cases,
            c.counterexample
        );
    }
}

#[test]
fn every_suite_passes_with_default_seed() {
    for suite in Suite::ALL {
        check(suite, VerifyConfig { seed: 0, count: 40 });
    }
}

#[test]
fn randomised_suites_pass_for_other_seeds() {
    for seed in [1, 7, 12345] {
        for suite in [Suite::Coset, Suite::Alpha, Suite::Beta, Suite::Gamma] {
            check(suite, VerifyConfig { seed, count: 25 });
        }
    }
}
