#![no_main]

//! Command-line value parsers: spaces, Betti targets, cell proportions and
//! landmark methods.

use grasstri::analysis::LandmarkMethod;
use grasstri::grassmann::{BettiProfile, Proportions, Space};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(space) = text.parse::<Space>() {
        assert_eq!(space.to_string().parse::<Space>().ok(), Some(space));
    }
    if let Ok(profile) = text.parse::<BettiProfile>() {
        assert_eq!(profile.to_string().parse::<BettiProfile>().ok(), Some(profile));
    }
    let _ = text.parse::<Proportions>();
    let _ = text.parse::<LandmarkMethod>();
});
