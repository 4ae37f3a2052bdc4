#![no_main]

use libfuzzer_sys::fuzz_target;
use quartic_rings::forms::{disc_cubic, BinaryCubicForm};
use quartic_rings::rings::{
    bcf_from_cubic_ring, canonicalize_monogenized, cubic_ring_from_bcf, disc_ring,
    verify_ring_axioms,
};

fuzz_target!(|coeffs: [i32; 4]| {
    let f = BinaryCubicForm::from_i64(coeffs.map(i64::from));
    let ring = cubic_ring_from_bcf(&f);
    assert!(verify_ring_axioms(&ring).pass());
    assert_eq!(
        bcf_from_cubic_ring(&ring).expect("built tables are rings"),
        f
    );
    assert_eq!(disc_ring(&ring), disc_cubic(&f));

    if coeffs[0] == -1 {
        let (canon, _) = canonicalize_monogenized(&f).expect("leading -1");
        let (again, n) = canonicalize_monogenized(&canon).expect("leading -1");
        assert_eq!(again, canon);
        assert_eq!(n, 0.into());
    }
});
