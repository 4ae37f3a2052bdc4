#![no_main]

use libfuzzer_sys::fuzz_target;
use quartic_rings::serial::{parse_record, print_record};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(record) = parse_record(text) {
        // printing an accepted record and parsing it back is the identity
        let printed = print_record(&record);
        let reparsed = parse_record(&printed).expect("printed records parse");
        assert_eq!(reparsed, record);
        assert_eq!(print_record(&reparsed), printed);
    }
});
