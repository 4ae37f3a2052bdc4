#![no_main]

use libfuzzer_sys::fuzz_target;
use quartic_rings::witness::{check_witness, parse_witness, print_witness};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = parse_witness(text) {
        let printed = print_witness(&w);
        assert_eq!(parse_witness(&printed).expect("printed witnesses parse"), w);
        // the checker must be total on parseable certificates, valid or not
        let _ = check_witness(&w);
    }
});
