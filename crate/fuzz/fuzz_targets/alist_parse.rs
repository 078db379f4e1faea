#![no_main]

use aqc_cli::formats::{read_alist, write_alist};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(h) = read_alist(text) {
        // anything accepted must survive a write/read round trip
        let again = read_alist(&write_alist(&h)).expect("written alist parses");
        assert_eq!(again, h);
    }
});
