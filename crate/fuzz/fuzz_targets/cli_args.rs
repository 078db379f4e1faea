#![no_main]

use aqc_cli::Cli;
use clap::Parser;
use libfuzzer_sys::fuzz_target;

// Argument parsing only; commands are not executed.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let args = std::iter::once("aqc").chain(text.split('\0'));
    let _ = Cli::try_parse_from(args);
});
