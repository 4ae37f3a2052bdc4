#![no_main]

use libfuzzer_sys::fuzz_target;
use quartic_rings::words::{parse_word, word_product, word_string};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // cap the length so the product stays cheap
    let text = &text[..text.len().min(64)];
    if let Ok(word) = parse_word(text) {
        assert_eq!(word_string(&word), text);
        let g = word_product(&word);
        let det = g.det();
        assert!(det == 1.into() || det == (-1).into());
    }
});
