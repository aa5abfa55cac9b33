#![no_main]

use krasner_core::deloop::SimplexTuple;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = SimplexTuple::parse(s) {
        assert_eq!(SimplexTuple::parse(&t.to_string()).unwrap(), t);
        assert_eq!(SimplexTuple::from_morphism(t.n(), &t.to_morphism()).unwrap(), t);
        // entry 0 is the empty subset, which a morphism sends to 0
        if t.is_morphism() {
            assert_eq!(t.bits()[0], 0);
        }
    }
});
