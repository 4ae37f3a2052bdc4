#![no_main]

use libfuzzer_sys::fuzz_target;
use quartic_rings::forms::{det_cubic_of_pair, disc_cubic, disc_quartic, BinaryQuarticForm};
use quartic_rings::resolvent::{psi, pullback};
use quartic_rings::rings::{
    disc_ring, is_monogenized_based, quartic_ring_from_bqf, verify_ring_axioms,
};

// These identities hold for every integral quartic form, not just the
// desk-scale boxes, so arbitrary coefficients are fair game.
fuzz_target!(|coeffs: [i32; 5]| {
    let f = BinaryQuarticForm::from_i64(coeffs.map(i64::from));

    let pair = psi(&f);
    assert_eq!(pullback(&pair.b), f);

    let cubic = det_cubic_of_pair(&pair);
    assert!(is_monogenized_based(&cubic));

    let d = disc_quartic(&f);
    assert_eq!(disc_cubic(&cubic), d);

    let ring = quartic_ring_from_bqf(&f);
    assert_eq!(disc_ring(&ring), d);
    assert!(verify_ring_axioms(&ring).pass());
});
