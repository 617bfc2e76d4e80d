//! Full acceptance grid: one test per criterion, each printing a single
//! pass/fail summary line. `FISHERPOLY_TOL_OVERRIDE` tightens or loosens
//! every tolerance at once.

use fisherpoly::suite::{self, CriterionOutcome, SuiteOptions};

fn opts() -> SuiteOptions {
    SuiteOptions {
        quick: false,
        tol_override: suite::tol_override_from_env(),
    }
}

fn check(outcome: CriterionOutcome) {
    println!("{}", outcome.summary());
    assert!(
        outcome.passed(),
        "{}\nfailures:\n{}",
        outcome.summary(),
        outcome.failures.join("\n")
    );
}

#[test]
fn criterion_1_sum_equals_closed_form() {
    check(suite::criterion_sum_vs_closed(&opts()));
}

#[test]
fn criterion_2_oracle_agreement() {
    check(suite::criterion_oracle_agreement(&opts()));
}

#[test]
fn criterion_3_hypergeometric_form() {
    check(suite::criterion_hypergeometric(&opts()));
}

#[test]
fn criterion_4_lemma2_integrals() {
    check(suite::criterion_lemma2(&opts()));
}

#[test]
fn criterion_5_lemma1_pointwise() {
    check(suite::criterion_lemma1_pointwise(&opts()));
}

#[test]
fn criterion_6_structural_identities() {
    check(suite::criterion_structural(&opts()));
}

#[test]
fn criterion_7_orthonormality_and_norms() {
    check(suite::criterion_orthonormality(&opts()));
}

#[test]
fn criterion_8_large_n_scale() {
    check(suite::criterion_scale(&opts()));
}

#[test]
fn criterion_9_frozen_spot_values() {
    check(suite::criterion_spot_values(&opts()));
}
