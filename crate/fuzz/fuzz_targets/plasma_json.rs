#![no_main]

use krasner_core::plasma::Plasma;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(x) = serde_json::from_slice::<Plasma>(data) {
        let json = serde_json::to_vec(&x).unwrap();
        assert_eq!(serde_json::from_slice::<Plasma>(&json).unwrap(), x);
    }
});
