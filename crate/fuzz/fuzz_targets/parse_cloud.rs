#![no_main]

use grasstri::io::{parse_cloud, write_cloud};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cloud) = parse_cloud(text) {
        let again = parse_cloud(&write_cloud(&cloud)).expect("written cloud parses");
        assert_eq!(again, cloud);
    }
});
