#![no_main]

use grasstri::io::{parse_window_report, write_window_report};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = parse_window_report(text) {
        let again = parse_window_report(&write_window_report(&report)).expect("written report parses");
        assert_eq!(again, report);
    }
});
