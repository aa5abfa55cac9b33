//! Finite pointed sets `<n> = {0, 1, ..., n}` with basepoint `0`, pointed maps
//! between them, and bitmask subsets and families of subsets.
//!
//! Two bit conventions are used throughout the crate:
//!
//! * unpointed subsets of `{1..n}` store element `i` in bit `i - 1`;
//! * pointed subsets of `{0..n}` store element `i` in bit `i`.
//!
//! Converting an unpointed mask to the pointed convention is a left shift by
//! one.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted for subsets and families.
pub const MAX_AMBIENT: usize = 24;

/// The pointed set `<n> = {0, .., n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointedSet {
    pub n: usize,
}

impl PointedSet {
    pub fn new(n: usize) -> Self {
        PointedSet { n }
    }

    /// Number of elements including the basepoint.
    pub fn cardinality(self) -> usize {
        self.n + 1
    }
}

/// A basepoint-preserving map `<n> -> <m>`, stored as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PointedMap {
    n: usize,
    m: usize,
    table: Vec<u8>,
}

#[derive(Deserialize)]
struct RawPointedMap {
    n: usize,
    m: usize,
    table: Vec<u64>,
}

impl<'de> Deserialize<'de> for PointedMap {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPointedMap::deserialize(de)?;
        let table = raw
            .table
            .iter()
            .map(|&v| u8::try_from(v).map_err(|_| Error::Parse(format!("table entry {v} too large"))))
            .collect::<Result<Vec<u8>>>()
            .map_err(serde::de::Error::custom)?;
        PointedMap::new(raw.n, raw.m, table).map_err(serde::de::Error::custom)
    }
}

impl PointedMap {
    /// Builds a map from its table, checking the basepoint and range.
    pub fn new(n: usize, m: usize, table: Vec<u8>) -> Result<Self> {
        if n > MAX_AMBIENT || m > MAX_AMBIENT {
            return Err(Error::CeilingExceeded { what: "pointed set", n: n.max(m), max: MAX_AMBIENT });
        }
        if table.len() != n + 1 {
            return Err(Error::InvalidMap(format!("table has length {}, expected {}", table.len(), n + 1)));
        }
        if table[0] != 0 {
            return Err(Error::InvalidMap("basepoint not preserved".into()));
        }
        if let Some(&bad) = table.iter().find(|&&v| v as usize > m) {
            return Err(Error::InvalidMap(format!("value {bad} outside <{m}>")));
        }
        Ok(PointedMap { n, m, table })
    }

    pub fn identity(n: usize) -> Self {
        PointedMap { n, m: n, table: (0..=n as u8).collect() }
    }

    /// The fold map `<n> -> <1>` sending every non-basepoint element to 1.
    pub fn fold(n: usize) -> Self {
        let mut table = vec![1u8; n + 1];
        table[0] = 0;
        PointedMap { n, m: 1, table }
    }

    pub fn src(&self) -> PointedSet {
        PointedSet::new(self.n)
    }

    pub fn dst(&self) -> PointedSet {
        PointedSet::new(self.m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn apply(&self, k: usize) -> usize {
        self.table[k] as usize
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u32;
        self.table.iter().all(|&v| {
            let bit = 1u32 << v;
            let fresh = seen & bit == 0;
            seen |= bit;
            fresh
        })
    }

    pub fn is_surjective(&self) -> bool {
        let hit = self.table.iter().fold(0u32, |acc, &v| acc | (1 << v));
        hit == (1u32 << (self.m + 1)) - 1
    }

    /// Preimage of a pointed subset of `{0..m}` as a pointed subset of `{0..n}`.
    pub fn preimage_pointed(&self, mask: u32) -> u32 {
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &v)| mask >> v & 1 == 1)
            .fold(0, |acc, (k, _)| acc | 1 << k)
    }

    /// Preimage of an unpointed subset of `{1..m}` as an unpointed subset of `{1..n}`.
    pub fn preimage_unpointed(&self, mask: u32) -> u32 {
        self.preimage_pointed(mask << 1) >> 1
    }

    /// Image of a pointed subset of `{0..n}`.
    pub fn image_pointed(&self, mask: u32) -> u32 {
        self.table
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .fold(0, |acc, (_, &v)| acc | 1 << v)
    }
}

impl fmt::Display for PointedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>-><{}> [", self.n, self.m)?;
        for (i, v) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// `g ∘ f`.
pub fn compose(g: &PointedMap, f: &PointedMap) -> Result<PointedMap> {
    if f.m != g.n {
        return Err(Error::MapMismatch { left: g.n, right: f.m });
    }
    let table = f.table.iter().map(|&k| g.table[k as usize]).collect();
    Ok(PointedMap { n: f.n, m: g.m, table })
}

/// All pointed maps `<n> -> <m>` in lexicographic order of their tables.
pub fn enumerate_pointed_maps(n: usize, m: usize) -> Vec<PointedMap> {
    let total = (m + 1).pow(n as u32);
    let mut out = Vec::with_capacity(total);
    let mut table = vec![0u8; n + 1];
    loop {
        out.push(PointedMap { n, m, table: table.clone() });
        // odometer on positions n..1, position 1 most significant
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            if (table[pos] as usize) < m {
                table[pos] += 1;
                break;
            }
            table[pos] = 0;
            pos -= 1;
        }
    }
}

/// Preimage of an unpointed subset `A ⊆ {1..m}` under `φ: <n> -> <m>`.
pub fn preimage_subset(phi: &PointedMap, a: &Subset) -> Result<Subset> {
    if a.pointed || a.n != phi.m {
        return Err(Error::AmbientMismatch(format!(
            "subset over {} does not match codomain <{}>",
            a.ambient_label(),
            phi.m
        )));
    }
    Ok(Subset { n: phi.n, pointed: false, mask: phi.preimage_unpointed(a.mask) })
}

/// The characteristic map `χ_A: <n> -> <1>` of an unpointed subset.
pub fn characteristic_map(n: usize, mask: u32) -> PointedMap {
    let table = (0..=n).map(|k| if k > 0 && mask >> (k - 1) & 1 == 1 { 1 } else { 0 }).collect();
    PointedMap { n, m: 1, table }
}

/// A subset of `{1..n}` (unpointed) or `{0..n}` (pointed) as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subset {
    pub n: usize,
    pub pointed: bool,
    pub mask: u32,
}

impl Subset {
    pub fn new(n: usize, pointed: bool, mask: u32) -> Result<Self> {
        let width = n + pointed as usize;
        if n > MAX_AMBIENT {
            return Err(Error::CeilingExceeded { what: "subset ambient", n, max: MAX_AMBIENT });
        }
        if width < 32 && mask >> width != 0 {
            return Err(Error::AmbientMismatch(format!("mask {mask:#x} has bits above {width}")));
        }
        Ok(Subset { n, pointed, mask })
    }

    pub fn unpointed(n: usize, elements: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::AmbientMismatch(format!("{e} not in {{1..{n}}}")));
            }
            mask |= 1 << (e - 1);
        }
        Subset::new(n, false, mask)
    }

    pub fn elements(&self) -> Vec<usize> {
        let offset = if self.pointed { 0 } else { 1 };
        (0..32).filter(|b| self.mask >> b & 1 == 1).map(|b| b + offset).collect()
    }

    fn ambient_label(&self) -> String {
        if self.pointed {
            format!("<{}>", self.n)
        } else {
            format!("{{1..{}}}", self.n)
        }
    }
}

/// Renders a pointed mask as `{0,2,3}`.
pub fn fmt_pointed_mask(mask: u32) -> String {
    let items: Vec<String> = (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// A family of subsets of `{1..n}` or `{0..n}`, stored as a membership bitvector
/// indexed by subset mask.
///
/// The empty family and the family `{∅}` are different values: the latter has
/// bit 0 set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    pointed: bool,
    words: Vec<u64>,
}

impl SetFamily {
    pub fn empty(n: usize, pointed: bool) -> Result<Self> {
        let width = n + pointed as usize;
        if n > MAX_AMBIENT {
            return Err(Error::CeilingExceeded { what: "family ambient", n, max: MAX_AMBIENT });
        }
        let bits = 1usize << width;
        Ok(SetFamily { n, pointed, words: vec![0; bits.div_ceil(64)] })
    }

    /// Every subset of the ambient.
    pub fn full(n: usize, pointed: bool) -> Result<Self> {
        let mut fam = SetFamily::empty(n, pointed)?;
        for s in 0..fam.universe_len() as u32 {
            fam.insert(s);
        }
        Ok(fam)
    }

    /// Builds a family from a single word (ambients with at most 64 subsets).
    pub(crate) fn from_word(n: usize, pointed: bool, word: u64) -> Self {
        debug_assert!(n + pointed as usize <= 6);
        SetFamily { n, pointed, words: vec![word] }
    }

    pub fn from_masks(n: usize, pointed: bool, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut fam = SetFamily::empty(n, pointed)?;
        let len = fam.universe_len();
        for m in masks {
            if m as usize >= len {
                return Err(Error::AmbientMismatch(format!("subset mask {m:#x} outside ambient")));
            }
            fam.insert(m);
        }
        Ok(fam)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    /// Width of the ambient in bits (`n` or `n + 1`).
    pub fn width(&self) -> usize {
        self.n + self.pointed as usize
    }

    /// Number of subsets of the ambient, i.e. the bitvector length.
    pub fn universe_len(&self) -> usize {
        1 << self.width()
    }

    pub fn contains(&self, mask: u32) -> bool {
        let i = mask as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, mask: u32) {
        let i = mask as usize;
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, mask: u32) {
        let i = mask as usize;
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending mask order.
    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64u32).filter(move |b| w >> b & 1 == 1).map(move |b| wi as u32 * 64 + b)
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Little-endian hex encoding: byte `i` holds membership bits `8i..8i+7`.
    pub fn to_hex(&self) -> String {
        let nbytes = self.universe_len().div_ceil(8);
        let bytes: Vec<u8> = (0..nbytes).map(|i| (self.words[i / 8] >> (8 * (i % 8))) as u8).collect();
        hex::encode(bytes)
    }

    pub fn from_hex(n: usize, pointed: bool, s: &str) -> Result<Self> {
        let mut fam = SetFamily::empty(n, pointed)?;
        let bytes = hex::decode(s).map_err(|e| Error::Parse(format!("bad hex family: {e}")))?;
        let len = fam.universe_len();
        if bytes.len() != len.div_ceil(8) {
            return Err(Error::Parse(format!(
                "family over {len} subsets needs {} hex digits, got {}",
                2 * len.div_ceil(8),
                s.len()
            )));
        }
        for (i, &b) in bytes.iter().enumerate() {
            fam.words[i / 8] |= (b as u64) << (8 * (i % 8));
        }
        if len < 8 && bytes[0] >> len != 0 {
            return Err(Error::Parse("bits set beyond the ambient power set".into()));
        }
        Ok(fam)
    }
}

/// Families order by ambient, then by the bitvector read as a big integer.
impl Ord for SetFamily {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.pointed)
            .cmp(&(other.n, other.pointed))
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for SetFamily {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize, Deserialize)]
struct RawFamily {
    n: usize,
    pointed: bool,
    hex: String,
}

impl Serialize for SetFamily {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        RawFamily { n: self.n, pointed: self.pointed, hex: self.to_hex() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SetFamily {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFamily::deserialize(de)?;
        SetFamily::from_hex(raw.n, raw.pointed, &raw.hex).map_err(serde::de::Error::custom)
    }
}

/// Subsets of `{1..n}` as unpointed masks in graded-lexicographic order:
/// by size, then lexicographically by sorted element list.
pub fn graded_lex_order(n: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0..1u32 << n).collect();
    all.sort_by_key(|&m| {
        let elems: Vec<u32> = (0..n as u32).filter(|b| m >> b & 1 == 1).collect();
        (m.count_ones(), elems)
    });
    all
}

/// Subsets of `{0..width-1}` ordered by popcount, then numeric value.
pub(crate) fn popcount_order(width: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0..1u32 << width).collect();
    all.sort_by_key(|&m| (m.count_ones(), m));
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(n: usize, m: usize, t: &[u8]) -> PointedMap {
        PointedMap::new(n, m, t.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        let f = map(2, 1, &[0, 1, 1]);
        assert_eq!(compose(&PointedMap::identity(1), &f).unwrap(), f);
        let incl = map(1, 2, &[0, 1]);
        assert_eq!(compose(&PointedMap::fold(2), &incl).unwrap(), PointedMap::identity(1));
        let swap = map(2, 2, &[0, 2, 1]);
        assert_eq!(compose(&PointedMap::fold(2), &swap).unwrap(), PointedMap::fold(2));
    }

    #[test]
    fn compose_rejects_mismatch() {
        let f = map(2, 1, &[0, 1, 1]);
        assert!(matches!(compose(&f, &f), Err(Error::MapMismatch { .. })));
    }

    #[test]
    fn map_validation() {
        assert!(PointedMap::new(2, 1, vec![1, 0, 0]).is_err());
        assert!(PointedMap::new(2, 1, vec![0, 2, 0]).is_err());
        assert!(PointedMap::new(2, 1, vec![0, 1]).is_err());
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_pointed_maps(1, 1).len(), 2);
        assert_eq!(enumerate_pointed_maps(2, 1).len(), 4);
        assert_eq!(enumerate_pointed_maps(3, 2).len(), 27);
        assert_eq!(enumerate_pointed_maps(0, 4).len(), 1);
        let maps = enumerate_pointed_maps(3, 2);
        assert!(maps.windows(2).all(|w| w[0].table() < w[1].table()));
    }

    #[test]
    fn preimage_examples() {
        let a = Subset::unpointed(1, &[1]).unwrap();
        assert_eq!(preimage_subset(&PointedMap::fold(2), &a).unwrap().elements(), vec![1, 2]);
        let empty = Subset::new(2, false, 0).unwrap();
        let phi = map(2, 2, &[0, 2, 0]);
        assert_eq!(preimage_subset(&phi, &empty).unwrap().mask, 0);
        let two = Subset::unpointed(2, &[2]).unwrap();
        assert_eq!(preimage_subset(&phi, &two).unwrap().elements(), vec![1]);
        assert!(preimage_subset(&phi, &Subset::new(2, true, 1).unwrap()).is_err());
    }

    #[test]
    fn characteristic_examples() {
        assert_eq!(characteristic_map(3, 0).table(), &[0, 0, 0, 0]);
        assert_eq!(characteristic_map(3, 0b111), PointedMap::fold(3));
        assert_eq!(characteristic_map(2, 0b10).table(), &[0, 0, 1]);
    }

    #[test]
    fn family_hex_and_order() {
        let fam = SetFamily::from_masks(2, true, [0, 7]).unwrap();
        assert_eq!(fam.to_hex(), "81");
        assert_eq!(SetFamily::from_hex(2, true, "81").unwrap(), fam);
        assert!(SetFamily::from_hex(1, false, "10").is_err());
        let empty = SetFamily::empty(0, false).unwrap();
        let just_empty_set = SetFamily::from_masks(0, false, [0]).unwrap();
        assert_ne!(empty, just_empty_set);
        assert!(empty < just_empty_set);
        let big_a = SetFamily::from_masks(6, true, [0, 127]).unwrap();
        let big_b = SetFamily::from_masks(6, true, [0, 1]).unwrap();
        assert!(big_b < big_a);
    }

    #[test]
    fn graded_lex_matches_listing() {
        // ∅,{1},{2},{3},{1,2},{1,3},{2,3},{1,2,3}
        assert_eq!(graded_lex_order(3), vec![0, 1, 2, 4, 3, 5, 6, 7]);
    }
}
