//! Replays the checked-in fuzz seeds through the same round-trip checks the
//! fuzz targets make, so the seeds stay meaningful without a fuzzing toolchain.

use std::fs;
use std::path::PathBuf;

use krasner_core::deloop::{SimplexTuple, SimplicialWindow};
use krasner_core::descriptor::parse_plasma;
use krasner_core::finset::{PointedMap, SetFamily};
use krasner_core::partitions::Partition;
use krasner_core::plasma::Plasma;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut paths: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds in {}", dir.display());
    paths.iter().map(|p| fs::read(p).unwrap()).collect()
}

/// Returns how many seeds parsed.
fn json_round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(target: &str) -> usize {
    let mut accepted = 0;
    for data in seeds(target) {
        if let Ok(x) = serde_json::from_slice::<T>(&data) {
            let json = serde_json::to_vec(&x).unwrap();
            assert_eq!(serde_json::from_slice::<T>(&json).unwrap(), x);
            accepted += 1;
        }
    }
    accepted
}

#[test]
fn plasma_descriptor_seeds() {
    let mut accepted = 0;
    for data in seeds("plasma_descriptor") {
        if let Ok(p) = parse_plasma(std::str::from_utf8(&data).unwrap()) {
            let json = serde_json::to_string(&p).unwrap();
            assert_eq!(parse_plasma(&json).unwrap(), p);
            accepted += 1;
        }
    }
    assert!(accepted >= 8);
}

#[test]
fn simplex_tuple_seeds() {
    let mut accepted = 0;
    for data in seeds("simplex_tuple") {
        if let Ok(t) = SimplexTuple::parse(std::str::from_utf8(&data).unwrap()) {
            assert_eq!(SimplexTuple::parse(&t.to_string()).unwrap(), t);
            assert_eq!(SimplexTuple::from_morphism(t.n(), &t.to_morphism()).unwrap(), t);
            accepted += 1;
        }
    }
    assert!(accepted >= 8);
}

#[test]
fn set_family_hex_seeds() {
    let mut accepted = 0;
    for data in seeds("set_family_hex") {
        let (&head, rest) = data.split_first().unwrap();
        let s = std::str::from_utf8(rest).unwrap();
        if let Ok(fam) = SetFamily::from_hex((head & 0x0f) as usize, head & 0x80 != 0, s) {
            assert_eq!(fam.to_hex(), s.to_ascii_lowercase());
            accepted += 1;
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn json_seeds() {
    assert!(json_round_trip::<Plasma>("plasma_json") >= 3);
    assert!(json_round_trip::<Partition>("partition_json") >= 3);
    assert!(json_round_trip::<PointedMap>("pointed_map_json") >= 3);
    assert!(json_round_trip::<SimplicialWindow>("simplicial_window_json") >= 3);
}
