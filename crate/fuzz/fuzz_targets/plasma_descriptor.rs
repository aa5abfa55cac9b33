#![no_main]

use krasner_core::descriptor::parse_plasma;
use krasner_core::plasma::Plasma;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_plasma(s) {
        let json = serde_json::to_string(&p).unwrap();
        let back: Plasma = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert_eq!(parse_plasma(&json).unwrap(), p);
    }
});
