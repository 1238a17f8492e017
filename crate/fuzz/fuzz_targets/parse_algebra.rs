//! Fuzz the algebra loader: raw structure-constant tables and nested
//! constructor specs. Must never panic or hang; bad input is an Err.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = banalg::json::parse_algebra(s);
    }
});
