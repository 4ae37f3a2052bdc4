//! Module-level invariants beyond the acceptance gate, at the pinned bounds:
//! action laws, invariance of I/J/disc, equivariance of the cubic
//! construction, orbit canonicalization, exact psi_prime equivariance,
//! fractional-shear injectivity, and batch validation of orbit certificates.

use quartic_rings::enumerate::quartic_at;
use quartic_rings::suites::{self, SuiteParams};
use quartic_rings::witness::{check_witness, orbit_witness};
use quartic_rings::words::GenLetter;

fn params() -> SuiteParams {
    SuiteParams::default()
}

fn assert_suite(name: &str) {
    let report = suites::run_suite(name, &params()).unwrap();
    assert!(
        report.pass(),
        "suite {name}: {} failures, first: {:?}",
        report.failures.len(),
        report.failures.first()
    );
}

#[test]
fn action_laws_hold() {
    assert_suite("action-laws");
}

#[test]
fn invariants_are_fixed_by_the_action() {
    assert_suite("invariant-actions");
}

#[test]
fn cubic_construction_is_equivariant() {
    assert_suite("cubic-equivariance");
}

#[test]
fn canonicalization_is_constant_on_orbits() {
    assert_suite("canonicalize-orbits");
}

#[test]
fn psi_prime_is_exactly_equivariant() {
    assert_suite("psi-prime-equivariance");
}

#[test]
fn fractional_shears_do_not_merge_classes() {
    assert_suite("n13-injectivity");
}

#[test]
fn cubic_disc_equals_ring_disc_exhaustively() {
    use quartic_rings::enumerate::cubics;
    use quartic_rings::forms::disc_cubic;
    use quartic_rings::rings::{cubic_ring_from_bcf, disc_ring};
    let p = params();
    let mut count = 0u64;
    for f in cubics(p.cubic_box) {
        assert_eq!(disc_ring(&cubic_ring_from_bcf(&f)), disc_cubic(&f), "{f:?}");
        count += 1;
    }
    assert_eq!(count, 2401);
}

#[test]
fn batch_of_length_four_word_certificates_validates() {
    // deterministic pseudo-random words and box-2 forms
    let letters = [
        GenLetter::Swap,
        GenLetter::Reflect,
        GenLetter::Shear,
        GenLetter::ShearInv,
    ];
    let mut state = 0x2458_71a3_u64;
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) as usize
    };
    for _ in 0..40 {
        let word: Vec<GenLetter> = (0..4).map(|_| letters[next() % 4]).collect();
        let f = quartic_at(2, (next() % 3125) as u64);
        let w = orbit_witness(&f, &word);
        let report = check_witness(&w);
        assert!(
            report.pass(),
            "word {word:?} on {f:?}: {:?}",
            report.failures
        );
    }
}
