#![no_main]

use libfuzzer_sys::fuzz_target;
use qbus_core::scenarios::{parse_preset_name, preset};

fuzz_target!(|data: &[u8]| {
    let name = String::from_utf8_lossy(data);
    match (parse_preset_name(&name), preset(&name)) {
        (Ok(_), Ok(cfgs)) => {
            for cfg in cfgs {
                cfg.validate().expect("presets validate");
            }
        }
        (Err(_), Err(_)) => {}
        (a, b) => panic!("name parser and preset table disagree on {name:?}: {a:?} / {}", b.is_ok()),
    }
});
