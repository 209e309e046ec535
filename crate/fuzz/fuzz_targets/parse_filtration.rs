#![no_main]

use grasstri::io::{parse_filtration, write_filtration};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_filtration(text) {
        let again = parse_filtration(&write_filtration(&f)).expect("written filtration parses");
        assert_eq!(again, f);
    }
});
