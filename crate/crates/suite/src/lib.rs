//! End-to-end acceptance runs for `grasstri`; see `tests/acceptance.rs`.
