#![no_main]

use libfuzzer_sys::fuzz_target;
use qbus_core::scenarios::ScenarioConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cfg) = ScenarioConfig::from_json_str(text) {
        let again = ScenarioConfig::from_json_str(&cfg.to_json_string()).expect("accepted config re-parses");
        assert_eq!(again, cfg);
    }
});
