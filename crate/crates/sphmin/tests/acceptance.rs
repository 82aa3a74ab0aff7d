//! Acceptance suite: one test per criterion, each printing its
//! pass/fail line.  Run with `cargo test --test acceptance --
//! --nocapture` to see the lines for passing criteria too.

use sphmin::suite;

fn check(result: suite::CriterionResult) {
    println!("{}", result.line());
    assert!(result.pass, "{}", result.line());
}

#[test]
fn c1_displayed_lift_matrices() {
    check(suite::criterion_1());
}

#[test]
fn c2_displayed_minors() {
    check(suite::criterion_2());
}

#[test]
fn c3_constant_alternating_sum() {
    check(suite::criterion_3());
}

#[test]
fn c4_action_tables() {
    check(suite::criterion_4());
}

#[test]
fn c5_combinatorial_claims() {
    check(suite::criterion_5());
}

#[test]
fn c6_numeric_exchange_identity() {
    check(suite::criterion_6());
}

#[test]
fn c7_property_suite() {
    check(suite::criterion_7());
}

#[test]
fn c8_star_diagrams() {
    check(suite::criterion_8());
}
