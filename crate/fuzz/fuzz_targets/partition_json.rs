#![no_main]

use krasner_core::partitions::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(x) = serde_json::from_slice::<Partition>(data) {
        let json = serde_json::to_vec(&x).unwrap();
        assert_eq!(serde_json::from_slice::<Partition>(&json).unwrap(), x);
    }
});
