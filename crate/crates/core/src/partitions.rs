//! Set partitions of `<n> = {0..n}` and the induced action of pointed maps.
//!
//! Blocks are pointed bitmasks kept sorted by their least element. A partition
//! with `k` blocks is interchangeable with a labeling `<n> -> {1..k}` that
//! numbers blocks in order of first appearance.

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinSystem;
use crate::error::{Error, Result};
use crate::finset::{PointedMap, SetFamily};

/// Largest `n` accepted by [`enumerate_partitions`].
pub const MAX_PARTITION_ENUMERATION: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<u32>,
}

impl Partition {
    /// Validates and canonicalizes a block list over `{0..n}`.
    pub fn from_blocks(n: usize, mut blocks: Vec<u32>) -> Result<Self> {
        if n > 24 {
            return Err(Error::CeilingExceeded { what: "partition ambient", n, max: 24 });
        }
        let full = (1u32 << (n + 1)) - 1;
        let mut seen = 0u32;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if b & !full != 0 {
                return Err(Error::InvalidPartition(format!("block {b:#x} leaves <{n}>")));
            }
            if b & seen != 0 {
                return Err(Error::InvalidPartition("blocks overlap".into()));
            }
            seen |= b;
        }
        if seen != full {
            return Err(Error::InvalidPartition("blocks do not cover the set".into()));
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(Partition { n, blocks })
    }

    /// The partition into singletons, the basepoint of `Part(<n>)`.
    pub fn singletons(n: usize) -> Self {
        Partition { n, blocks: (0..=n).map(|i| 1u32 << i).collect() }
    }

    /// Reads a labeling of `{0..n}`; equal labels share a block.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidPartition("labeling of an empty set".into()));
        }
        let mut blocks: Vec<(usize, u32)> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            match blocks.iter_mut().find(|(label, _)| *label == l) {
                Some((_, mask)) => *mask |= 1 << x,
                None => blocks.push((l, 1 << x)),
            }
        }
        Partition::from_blocks(labels.len() - 1, blocks.into_iter().map(|(_, m)| m).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The surjection `<n> -> {1..k}` numbering blocks by first appearance.
    pub fn labels(&self) -> Vec<usize> {
        (0..=self.n)
            .map(|x| 1 + self.blocks.iter().position(|b| b >> x & 1 == 1).expect("blocks cover"))
            .collect()
    }

    pub fn block_of(&self, x: usize) -> u32 {
        *self.blocks.iter().find(|b| *b >> x & 1 == 1).expect("blocks cover")
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.blocks {
            write!(f, "{}", crate::finset::fmt_pointed_mask(b))?;
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let lists: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|&b| (0..=self.n).filter(|x| b >> x & 1 == 1).collect())
            .collect();
        lists.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let lists = Vec::<Vec<usize>>::deserialize(de)?;
        let n = lists
            .iter()
            .flatten()
            .copied()
            .max()
            .ok_or_else(|| serde::de::Error::custom("partition with no elements"))?;
        if n > 24 {
            return Err(serde::de::Error::custom("partition ambient too large"));
        }
        let mut blocks = Vec::with_capacity(lists.len());
        for list in &lists {
            let mut mask = 0u32;
            for &x in list {
                if mask >> x & 1 == 1 {
                    return Err(serde::de::Error::custom(format!("element {x} repeated")));
                }
                mask |= 1 << x;
            }
            blocks.push(mask);
        }
        Partition::from_blocks(n, blocks).map_err(serde::de::Error::custom)
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        DisjointSets { parent: (0..len).collect() }
    }

    fn find(&mut self, i: usize) -> usize {
        let p = self.parent[i];
        if p == i {
            return i;
        }
        let root = self.find(p);
        self.parent[i] = root;
        root
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }

    /// Classes of the elements `range` as masks (relative to `range.start`).
    fn classes(&mut self, range: std::ops::Range<usize>) -> Vec<u32> {
        let start = range.start;
        let mut by_root: Vec<(usize, u32)> = Vec::new();
        for x in range {
            let r = self.find(x);
            match by_root.iter_mut().find(|(root, _)| *root == r) {
                Some((_, mask)) => *mask |= 1 << (x - start),
                None => by_root.push((r, 1 << (x - start))),
            }
        }
        by_root.into_iter().map(|(_, m)| m).collect()
    }
}

fn check_source(phi: &PointedMap, p: &Partition) -> Result<()> {
    if phi.n() != p.n {
        return Err(Error::AmbientMismatch(format!("map from <{}> applied to a partition of <{}>", phi.n(), p.n)));
    }
    Ok(())
}

/// `Part(φ)(P)`: the smallest equivalence relation on `<m>` containing the
/// image of `P`'s relation. Each image block `φ(P_i)` is glued together;
/// points outside the image stay singletons.
pub fn part_map(phi: &PointedMap, p: &Partition) -> Result<Partition> {
    check_source(phi, p)?;
    let mut sets = DisjointSets::new(phi.m() + 1);
    for &block in &p.blocks {
        let image = phi.image_pointed(block);
        let first = image.trailing_zeros() as usize;
        for y in (first + 1..=phi.m()).filter(|y| image >> y & 1 == 1) {
            sets.union(first, y);
        }
    }
    Partition::from_blocks(phi.m(), sets.classes(0..phi.m() + 1))
}

/// `Part(φ)(P)` computed as the pushout of the labeling `π: <n> ↠ {1..k}`
/// along `φ`: the coequalizer of `{1..k} ⊔ <m>` identifying `π(x)` with `φ(x)`.
pub fn part_map_pushout(phi: &PointedMap, p: &Partition) -> Result<Partition> {
    check_source(phi, p)?;
    let labels = p.labels();
    let k = p.num_blocks();
    // nodes 0..k are the labels 1..k, nodes k..k+m+1 are the points of <m>
    let mut sets = DisjointSets::new(k + phi.m() + 1);
    for (x, &label) in labels.iter().enumerate() {
        sets.union(label - 1, k + phi.apply(x));
    }
    Partition::from_blocks(phi.m(), sets.classes(k..k + phi.m() + 1))
}

/// `Σ(P)`: all unions of blocks, a σ-algebra and hence a Dynkin system.
pub fn sigma_embedding(p: &Partition) -> Result<DynkinSystem> {
    let k = p.num_blocks();
    let masks = (0..1u64 << k).map(|choice| {
        p.blocks
            .iter()
            .enumerate()
            .filter(|(i, _)| choice >> i & 1 == 1)
            .fold(0u32, |acc, (_, &b)| acc | b)
    });
    DynkinSystem::new(SetFamily::from_masks(p.n, true, masks)?)
}

/// All partitions of `{0..n}`, in lexicographic order of their
/// restricted-growth strings.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n > MAX_PARTITION_ENUMERATION {
        return Err(Error::CeilingExceeded { what: "partition enumeration", n, max: MAX_PARTITION_ENUMERATION });
    }
    let len = n + 1;
    let mut out = Vec::new();
    // rgs[i] <= 1 + max(rgs[..i]), rgs[0] = 0
    let mut rgs = vec![0usize; len];
    let mut maxes = vec![0usize; len];
    loop {
        let labels: Vec<usize> = rgs.iter().map(|&r| r + 1).collect();
        out.push(Partition::from_labels(&labels)?);
        let mut i = len - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            if rgs[i] <= maxes[i - 1] {
                rgs[i] += 1;
                maxes[i] = maxes[i - 1].max(rgs[i]);
                for j in i + 1..len {
                    rgs[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Whether every image block `φ(P_i)` that meets a block `Q` of the result
/// lies inside `Q`.
pub fn satisfies_suction(phi: &PointedMap, p: &Partition, result: &Partition) -> bool {
    p.blocks.iter().all(|&b| {
        let image = phi.image_pointed(b);
        result.blocks.iter().all(|&q| image & q == 0 || image & !q == 0)
    })
}
