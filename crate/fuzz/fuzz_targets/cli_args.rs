#![no_main]

use libfuzzer_sys::fuzz_target;

// NUL-separated argv; parsing only, nothing is executed.
fuzz_target!(|data: &[u8]| {
    let args = std::iter::once("qbus".to_string())
        .chain(data.split(|&b| b == 0).map(|a| String::from_utf8_lossy(a).into_owned()));
    let _ = qbus::parse_args(args);
});
