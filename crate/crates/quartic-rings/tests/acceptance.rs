//! Acceptance suite: every release-gating identity at the pinned
//! desk-scale bounds from `bounds.conf`, all in exact arithmetic with
//! tolerance zero.
//!
//! Run with `cargo test -p quartic-rings --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use quartic_rings::enumerate::{cubic_count, quartic_count};
use quartic_rings::report::CheckReport;
use quartic_rings::resolvent::stabilizer_scan;
use quartic_rings::suites::{self, SuiteParams};

fn params() -> SuiteParams {
    // the pinned bounds file, exactly as checked in
    SuiteParams::default()
}

fn gate(number: u32, name: &str, expected_cases: Option<u64>, report: &CheckReport) {
    if report.pass() {
        println!(
            "criterion {number:02} {name}: PASS ({} cases, exact, tolerance 0)",
            report.cases
        );
    } else {
        println!(
            "criterion {number:02} {name}: FAIL ({} of {} cases)",
            report.failures.len(),
            report.cases
        );
        for f in report.failures.iter().take(5) {
            println!("  {} -- {}", f.input, f.detail);
        }
        panic!("criterion {number:02} {name} failed");
    }
    if let Some(expected) = expected_cases {
        assert_eq!(
            report.cases, expected,
            "criterion {number:02} {name} ran an unexpected number of cases"
        );
    }
}

#[test]
fn criterion_01_discriminant_chain() {
    let p = params();
    let report = suites::discriminant_chain(&p);
    gate(
        1,
        "discriminant-chain",
        Some(quartic_count(p.quartic_box)),
        &report,
    );
}

#[test]
fn criterion_02_ring_validity() {
    let p = params();
    let report = suites::ring_axioms(&p);
    let expected = quartic_count(p.quartic_box) + cubic_count(p.cubic_box);
    gate(2, "ring-axioms", Some(expected), &report);
}

#[test]
fn criterion_03_equivariance() {
    let p = params();
    let report = suites::equivariance(&p);
    // 121 words of length <= 4 over three generators
    gate(
        3,
        "equivariance",
        Some(quartic_count(p.quartic_box) * 121),
        &report,
    );
}

#[test]
fn criterion_04_rho_homomorphism() {
    let p = params();
    let report = suites::rho_homomorphism(&p);
    gate(4, "rho-homomorphism", None, &report);
    assert!(
        report.cases > 1000,
        "expected every pair from the entry box"
    );
}

#[test]
fn criterion_05_stabilizer_completeness() {
    let p = params();
    let report = stabilizer_scan(p.stab_bound);
    gate(5, "stab-scan", None, &report);
    assert!(report.cases > 0, "the scan must find stabilizer elements");
}

#[test]
fn criterion_06_pullback_inverse() {
    let p = params();
    let report = suites::pullback_inverse(&p);
    let expected = quartic_count(p.quartic_box) * (2 * p.shift_range as u64 + 1) + 1;
    gate(6, "pullback-inverse", Some(expected), &report);
}

#[test]
fn criterion_07_psi_prime_determinant() {
    let p = params();
    let report = suites::psi_prime_det(&p);
    gate(
        7,
        "psi-prime-det",
        Some(quartic_count(p.quartic_box)),
        &report,
    );
}

#[test]
fn criterion_08_cubic_round_trip() {
    let p = params();
    let report = suites::cubic_roundtrip(&p);
    gate(
        8,
        "cubic-roundtrip",
        Some(cubic_count(p.cubic_box)),
        &report,
    );
}

#[test]
fn criterion_09_resolvent_axioms() {
    let p = params();
    let report = suites::resolvent_axioms(&p);
    // per form: one condition-(2) case plus the full coordinate-box square
    let pairs = {
        let n = (2 * p.coord_box as u64 + 1).pow(3);
        n * n
    };
    let expected = quartic_count(p.quartic_box) * (pairs + 1);
    gate(9, "resolvent-axioms", Some(expected), &report);
}

#[test]
fn criterion_10_monogenicity() {
    let p = params();
    let report = suites::monogenicity(&p);
    let family = (2 * p.family_bound as u64 + 1).pow(3);
    gate(
        10,
        "monogenicity",
        Some(quartic_count(p.quartic_box) + family),
        &report,
    );
}

#[test]
fn criterion_11_disc_oracle() {
    let p = params();
    let report = suites::disc_oracle(&p);
    // forms with nonzero leading coefficient
    let box_side = 2 * p.quartic_box as u64 + 1;
    let expected = (box_side - 1) * box_side.pow(4);
    gate(11, "disc-oracle", Some(expected), &report);
}

#[test]
fn criterion_12_reduce_to_a0() {
    let p = params();
    let report = suites::reduce_a0(&p);
    gate(12, "reduce-a0", Some(p.reduce_trials), &report);
}
