#![no_main]

use aqc_cli::formats::CodeDescriptor;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(desc) = CodeDescriptor::from_json(text) {
        assert_eq!(CodeDescriptor::from_json(&desc.to_json()).expect("round trip"), desc);
    }
});
