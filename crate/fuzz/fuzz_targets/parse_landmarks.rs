#![no_main]

use grasstri::io::{parse_landmarks, write_landmarks};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(indices) = parse_landmarks(text) {
        assert_eq!(parse_landmarks(&write_landmarks(&indices)).ok(), Some(indices));
    }
});
