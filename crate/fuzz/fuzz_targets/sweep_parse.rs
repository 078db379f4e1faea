#![no_main]

use aqc_cli::formats::{parse_range, SweepSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(values) = parse_range(text) {
        assert!(!values.is_empty() && values.iter().all(|v| v.is_finite()));
    }
    if let Ok(spec) = SweepSpec::from_json(text) {
        spec.validate().expect("parsed sweeps are valid");
    }
});
