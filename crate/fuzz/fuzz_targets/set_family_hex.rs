#![no_main]

use krasner_core::finset::SetFamily;
use libfuzzer_sys::fuzz_target;

// First byte: ambient size in the low bits, pointedness in the top bit.
fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let (n, pointed) = ((head & 0x0f) as usize, head & 0x80 != 0);
    if let Ok(fam) = SetFamily::from_hex(n, pointed, s) {
        assert_eq!(fam.to_hex(), s.to_ascii_lowercase());
        let json = serde_json::to_string(&fam).unwrap();
        assert_eq!(serde_json::from_str::<SetFamily>(&json).unwrap(), fam);
    }
});
