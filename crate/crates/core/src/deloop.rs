//! The delooping of a window: level `n` is `X(<n>)`, faces and degeneracies
//! come from the simplicial circle.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finset::{graded_lex_order, PointedMap};
use crate::gammaset::{GammaSetWindow, NaturalMap};
use crate::partitions::{self, Partition};
use crate::plasma::{self, EnumOptions, PlasmaMorphism};

pub const TUPLE_MAX_LEVEL: usize = 5;

/// `d_i: <n> -> <n-1>`: `k ↦ k` for `k <= i`, `k ↦ k-1` otherwise, and
/// anything landing outside `{1..n-1}` goes to 0.
pub fn face_map(n: usize, i: usize) -> Result<PointedMap> {
    if n == 0 || i > n {
        return Err(Error::IndexOutOfRange { what: "face index", index: i, limit: n });
    }
    let table = (0..=n)
        .map(|k| {
            let v = if k <= i { k } else { k - 1 };
            if (1..n).contains(&v) { v as u8 } else { 0 }
        })
        .collect();
    PointedMap::new(n, n - 1, table)
}

/// `s_i: <n> -> <n+1>`: `k ↦ k` for `k <= i`, `k ↦ k+1` otherwise.
pub fn degeneracy_map(n: usize, i: usize) -> Result<PointedMap> {
    if i > n {
        return Err(Error::IndexOutOfRange { what: "degeneracy index", index: i, limit: n });
    }
    let table = (0..=n).map(|k| if k <= i { k as u8 } else { k as u8 + 1 }).collect();
    PointedMap::new(n, n + 1, table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialLevel {
    pub n: usize,
    /// Digit tuples `X(χ_A)(x)` over `A` in graded-lexicographic order.
    pub elements: Vec<String>,
    /// Source-native rendering of each element.
    pub native: Vec<String>,
    /// `faces[i][x]` is `d_i x`; empty at level 0.
    pub faces: Vec<Vec<u32>>,
    /// `degeneracies[i][x]` is `s_i x`; empty at the top level.
    pub degeneracies: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWindow")]
pub struct SimplicialWindow {
    pub source: String,
    pub levels: Vec<SimplicialLevel>,
}

#[derive(Deserialize)]
struct RawWindow {
    source: String,
    levels: Vec<SimplicialLevel>,
}

impl TryFrom<RawWindow> for SimplicialWindow {
    type Error = Error;
    fn try_from(raw: RawWindow) -> Result<Self> {
        let w = SimplicialWindow { source: raw.source, levels: raw.levels };
        w.validate()?;
        Ok(w)
    }
}

/// A simplicial identity that failed on a specific simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityViolation {
    pub identity: String,
    pub level: usize,
    pub simplex: usize,
    pub lhs: u32,
    pub rhs: u32,
}

fn copy_table(t: &[u32]) -> Vec<u32> {
    t.to_vec()
}

/// `BX` on the levels of the window.
pub fn deloop(x: &GammaSetWindow) -> Result<SimplicialWindow> {
    let top = x.top();
    let levels = (0..=top)
        .map(|n| {
            let size = x.level_size(n);
            let elements = (0..size)
                .map(|e| Ok(x.simplex_digits(n, e)?.into_iter().map(crate::gammaset::digit).collect()))
                .collect::<Result<Vec<String>>>()?;
            let native = (0..size).map(|e| x.describe(n, e)).collect();
            let faces = if n == 0 {
                Vec::new()
            } else {
                (0..=n).map(|i| Ok(copy_table(&x.action_table(&face_map(n, i)?)?))).collect::<Result<_>>()?
            };
            let degeneracies = if n == top {
                Vec::new()
            } else {
                (0..=n).map(|i| Ok(copy_table(&x.action_table(&degeneracy_map(n, i)?)?))).collect::<Result<_>>()?
            };
            Ok(SimplicialLevel { n, elements, native, faces, degeneracies })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialWindow { source: x.kind().to_string(), levels })
}

impl SimplicialWindow {
    /// Checks the shape: level indices, `n+1` faces and degeneracies per level
    /// (none below level 1 or at the top), and every table entry in range.
    pub fn validate(&self) -> Result<()> {
        if self.levels.is_empty() {
            return Err(Error::Parse("simplicial window with no levels".into()));
        }
        let top = self.levels.len() - 1;
        let sizes = self.level_sizes();
        for (n, level) in self.levels.iter().enumerate() {
            let bad = |msg: String| Err(Error::Parse(format!("level {n}: {msg}")));
            if level.n != n {
                return bad(format!("labelled {}", level.n));
            }
            if level.native.len() != sizes[n] {
                return bad(format!("{} native names for {} elements", level.native.len(), sizes[n]));
            }
            let expect_faces = if n == 0 { 0 } else { n + 1 };
            let expect_degens = if n == top { 0 } else { n + 1 };
            if level.faces.len() != expect_faces || level.degeneracies.len() != expect_degens {
                return bad(format!("{} faces and {} degeneracies", level.faces.len(), level.degeneracies.len()));
            }
            let tables = level.faces.iter().map(|t| (t, n.wrapping_sub(1))).chain(level.degeneracies.iter().map(|t| (t, n + 1)));
            for (t, target) in tables {
                if t.len() != sizes[n] || t.iter().any(|&v| v as usize >= sizes[target]) {
                    return bad("operator table out of shape".into());
                }
            }
        }
        Ok(())
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.elements.len()).collect()
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.levels[n].faces[i][x] as usize
    }

    pub fn degeneracy(&self, n: usize, i: usize, x: usize) -> usize {
        self.levels[n].degeneracies[i][x] as usize
    }

    /// Simplices at level `n` not in the image of any degeneracy.
    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        let mut hit = vec![false; self.levels[n].elements.len()];
        if n > 0 {
            for s in &self.levels[n - 1].degeneracies {
                for &v in s {
                    hit[v as usize] = true;
                }
            }
        }
        (0..hit.len()).filter(|&x| !hit[x]).collect()
    }

    /// Every instance of the simplicial identities inside the window.
    /// Returns the number of instances checked.
    pub fn check_identities(&self) -> std::result::Result<u64, IdentityViolation> {
        let top = self.top();
        let mut jobs: Vec<(usize, u8, usize, usize)> = Vec::new();
        for n in 0..=top {
            for j in 0..=n {
                for i in 0..=n {
                    if n >= 2 && i < j {
                        jobs.push((n, 0, i, j));
                    }
                    if n + 2 <= top && i <= j {
                        jobs.push((n, 1, i, j));
                    }
                }
                if n < top {
                    for i in 0..=n + 1 {
                        jobs.push((n, 2, i, j));
                    }
                }
            }
        }
        let results: Vec<std::result::Result<u64, IdentityViolation>> =
            jobs.par_iter().map(|&(n, kind, i, j)| self.check_instance(n, kind, i, j)).collect();
        let mut total = 0;
        for r in results {
            total += r?;
        }
        Ok(total)
    }

    fn check_instance(&self, n: usize, kind: u8, i: usize, j: usize) -> std::result::Result<u64, IdentityViolation> {
        let size = self.levels[n].elements.len();
        for x in 0..size {
            let (name, lhs, rhs) = match kind {
                0 => (
                    format!("d{i} d{j} = d{} d{i}", j - 1),
                    self.face(n - 1, i, self.face(n, j, x)),
                    self.face(n - 1, j - 1, self.face(n, i, x)),
                ),
                1 => (
                    format!("s{i} s{j} = s{} s{i}", j + 1),
                    self.degeneracy(n + 1, i, self.degeneracy(n, j, x)),
                    self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, x)),
                ),
                _ => {
                    let lhs = self.face(n + 1, i, self.degeneracy(n, j, x));
                    if i < j {
                        (format!("d{i} s{j} = s{} d{i}", j - 1), lhs, self.degeneracy(n - 1, j - 1, self.face(n, i, x)))
                    } else if i == j || i == j + 1 {
                        (format!("d{i} s{j} = id"), lhs, x)
                    } else {
                        (format!("d{i} s{j} = s{j} d{}", i - 1), lhs, self.degeneracy(n - 1, j, self.face(n, i - 1, x)))
                    }
                }
            };
            if lhs != rhs {
                return Err(IdentityViolation { identity: name, level: n, simplex: x, lhs: lhs as u32, rhs: rhs as u32 });
            }
        }
        Ok(size as u64)
    }
}

/// Checks that per-level bijections commute with every face and degeneracy.
pub fn is_simplicial_isomorphism(a: &SimplicialWindow, b: &SimplicialWindow, eta: &NaturalMap) -> bool {
    if a.level_sizes() != b.level_sizes() || eta.components.len() != a.levels.len() {
        return false;
    }
    let bijective = eta.components.iter().zip(b.level_sizes()).all(|(c, size)| {
        let mut seen = vec![false; size];
        c.len() == size && c.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    });
    bijective
        && a.levels.iter().enumerate().all(|(n, lvl)| {
            let c = &eta.components;
            let faces_ok = lvl.faces.iter().enumerate().all(|(i, d)| {
                (0..d.len()).all(|x| c[n - 1][d[x] as usize] == b.levels[n].faces[i][c[n][x] as usize])
            });
            let degens_ok = lvl.degeneracies.iter().enumerate().all(|(i, s)| {
                (0..s.len()).all(|x| c[n + 1][s[x] as usize] == b.levels[n].degeneracies[i][c[n][x] as usize])
            });
            faces_ok && degens_ok
        })
}

/// The five 2-simplex types of `B(ĤK)`, keyed by `(d₂, d₀, d₁)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TriangleLabel {
    A,
    B,
    C,
    D,
    E,
}

impl TriangleLabel {
    pub fn from_edges(edges: (usize, usize, usize)) -> Result<Self> {
        Ok(match edges {
            (0, 0, 0) => TriangleLabel::A,
            (0, 1, 1) => TriangleLabel::B,
            (1, 0, 1) => TriangleLabel::C,
            (1, 1, 0) => TriangleLabel::D,
            (1, 1, 1) => TriangleLabel::E,
            other => return Err(Error::UnrecognizedSimplex(other)),
        })
    }

    pub fn letter(self) -> char {
        match self {
            TriangleLabel::A => 'A',
            TriangleLabel::B => 'B',
            TriangleLabel::C => 'C',
            TriangleLabel::D => 'D',
            TriangleLabel::E => 'E',
        }
    }
}

impl fmt::Display for TriangleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Label of a single 2-simplex by its edges `(d₂, d₀, d₁)`.
pub fn classify_2simplex(w: &SimplicialWindow, x: usize) -> Result<TriangleLabel> {
    if w.top() < 2 {
        return Err(Error::LevelMismatch("no 2-simplices below level 2".into()));
    }
    TriangleLabel::from_edges((w.face(2, 2, x), w.face(2, 0, x), w.face(2, 1, x)))
}

/// Labels of every 2-simplex, in level order.
pub fn classify_2simplices(w: &SimplicialWindow) -> Result<Vec<TriangleLabel>> {
    (0..w.level_sizes().get(2).copied().unwrap_or(0)).map(|x| classify_2simplex(w, x)).collect()
}

/// Labels of the faces `d₀..d₃` of a 3-simplex.
pub fn face_labels(w: &SimplicialWindow, x: usize) -> Result<[TriangleLabel; 4]> {
    if w.top() < 3 {
        return Err(Error::LevelMismatch("no 3-simplices below level 3".into()));
    }
    let mut out = [TriangleLabel::A; 4];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = classify_2simplex(w, w.face(3, i, x))?;
    }
    Ok(out)
}

/// A 0/1 string of length `2^n` indexed by the subsets of `{1..n}` in
/// graded-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimplexTuple {
    n: usize,
    bits: Vec<u8>,
}

impl SimplexTuple {
    pub fn new(n: usize, bits: Vec<u8>) -> Result<Self> {
        if n > TUPLE_MAX_LEVEL + 1 || bits.len() != 1 << n || bits.iter().any(|&b| b > 1) {
            return Err(Error::MalformedTuple(format!("{} entries at level {n}", bits.len())));
        }
        Ok(SimplexTuple { n, bits })
    }

    /// Accepts `01011010` or `(01011010)`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        let bits = body
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::MalformedTuple(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        if !bits.len().is_power_of_two() {
            return Err(Error::MalformedTuple(format!("length {} is not a power of two", bits.len())));
        }
        SimplexTuple::new(bits.len().trailing_zeros() as usize, bits)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// The table `mask ↦ value` this tuple lists in graded-lex order.
    pub fn to_morphism(&self) -> PlasmaMorphism {
        let mut table = vec![0u8; self.bits.len()];
        for (pos, a) in graded_lex_order(self.n).into_iter().enumerate() {
            table[a as usize] = self.bits[pos];
        }
        PlasmaMorphism::new(table)
    }

    pub fn from_morphism(n: usize, f: &PlasmaMorphism) -> Result<Self> {
        if f.table().len() != 1 << n {
            return Err(Error::MalformedTuple(format!("table of length {} at level {n}", f.table().len())));
        }
        SimplexTuple::new(n, graded_lex_order(n).into_iter().map(|a| f.table()[a as usize]).collect())
    }

    /// Whether the tuple is a plasma morphism `𝒫(n) → K`.
    pub fn is_morphism(&self) -> bool {
        plasma::powerset_plasma(self.n)
            .map(|p| plasma::is_plasma_morphism(self.to_morphism().table(), &p, &plasma::krasner()))
            .unwrap_or(false)
    }
}

impl fmt::Display for SimplexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for SimplexTuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SimplexTuple::parse(s)
    }
}

impl TryFrom<String> for SimplexTuple {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        SimplexTuple::parse(&s)
    }
}

impl From<SimplexTuple> for String {
    fn from(t: SimplexTuple) -> String {
        t.to_string()
    }
}

/// The `n`-simplices of `B(ĤK)` as tuples, sorted.
pub fn simplex_tuples(n: usize) -> Result<Vec<SimplexTuple>> {
    if n > TUPLE_MAX_LEVEL {
        return Err(Error::CeilingExceeded { what: "simplex tuple level", n, max: TUPLE_MAX_LEVEL });
    }
    let p = plasma::powerset_plasma(n)?;
    let mut out = plasma::enumerate_morphisms(&p, &plasma::krasner(), EnumOptions::default())?
        .iter()
        .map(|f| SimplexTuple::from_morphism(n, f))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `K`-addition on 0/1 values.
fn k_sum(a: u8, b: u8) -> &'static [u8] {
    match (a, b) {
        (0, 0) => &[0],
        (1, 1) => &[0, 1],
        _ => &[1],
    }
}

/// With `x₀..x₇` indexed by `∅,{1},{2},{3},{1,2},{1,3},{2,3},{1,2,3}`:
/// `x₇ ∈ (x₄+x₃) ∩ (x₅+x₂) ∩ (x₁+x₆)`.
pub fn check_associator(t: &SimplexTuple) -> Result<bool> {
    if t.n != 3 {
        return Err(Error::MalformedTuple(format!("associator needs level 3, got {}", t.n)));
    }
    let x = &t.bits;
    Ok([(4, 3), (5, 2), (1, 6)].iter().all(|&(i, j)| k_sum(x[i], x[j]).contains(&x[7])))
}

/// Merge the blocks of `i` and `i+1`, delete `i+1`, and shift larger elements down.
pub fn merge_delete_decrement(n: usize, i: usize, p: &Partition) -> Result<Partition> {
    if i == 0 || i >= n || p.n() != n {
        return Err(Error::IndexOutOfRange { what: "inner face index", index: i, limit: n });
    }
    let (bi, bj) = (p.block_of(i), p.block_of(i + 1));
    let low = (1u32 << (i + 1)) - 1;
    let blocks = p
        .blocks()
        .iter()
        .filter(|&&b| b != bj || bi == bj)
        .map(|&b| if b == bi { b | bj } else { b })
        .map(|b| (b & low) | (b >> (i + 2) << (i + 1)))
        .filter(|&b| b != 0)
        .collect();
    Partition::from_blocks(n - 1, blocks)
}

/// `Part(d_i)(P)` for an inner face, cross-checked against
/// [`merge_delete_decrement`].
pub fn face_action_on_partitions(n: usize, i: usize, p: &Partition) -> Result<Partition> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { what: "inner face index", index: i, limit: n });
    }
    let via_map = partitions::part_map(&face_map(n, i)?, p)?;
    let direct = merge_delete_decrement(n, i, p)?;
    if via_map != direct {
        return Err(Error::InvalidPartition(format!("face d{i} gives {via_map} but merging gives {direct}")));
    }
    Ok(via_map)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
    Tuples,
}

impl FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            "tuples" => Ok(ExportFormat::Tuples),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

pub fn export(w: &SimplicialWindow, format: ExportFormat) -> Result<Vec<u8>> {
    match format {
        ExportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(w).map_err(|e| Error::Parse(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
        ExportFormat::Dot => Ok(to_dot(w).into_bytes()),
        ExportFormat::Tuples => {
            let mut out = String::new();
            for lvl in &w.levels {
                out.push_str(&format!("# level {}\n", lvl.n));
                let mut lines = lvl.elements.clone();
                lines.sort();
                for l in lines {
                    out.push_str(&l);
                    out.push('\n');
                }
            }
            Ok(out.into_bytes())
        }
    }
}

/// Vertices, non-degenerate edges from `d₁` to `d₀`, and one record per
/// 2-simplex listing its faces.
fn to_dot(w: &SimplicialWindow) -> String {
    let mut out = String::from("digraph delooping {\n");
    for (v, name) in w.levels[0].elements.iter().enumerate() {
        out.push_str(&format!("  v{v} [label=\"{name}\"];\n"));
    }
    if w.top() >= 1 {
        for e in w.nondegenerate(1) {
            let (src, dst) = (w.face(1, 1, e), w.face(1, 0, e));
            out.push_str(&format!("  v{src} -> v{dst} [label=\"{}\"];\n", w.levels[1].elements[e]));
        }
    }
    if w.top() >= 2 {
        for (t, name) in w.levels[2].elements.iter().enumerate() {
            let kind = classify_2simplex(w, t).map(|l| l.to_string()).unwrap_or_else(|_| "?".into());
            let faces: Vec<String> = (0..3).map(|i| format!("d{i}={}", w.levels[1].elements[w.face(2, i, t)])).collect();
            out.push_str(&format!("  t{t} [shape=record, label=\"{{{kind}|{name}|{}}}\"];\n", faces.join("|")));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gammaset::{dynk_window, h_hat, part_window};

    #[test]
    fn structure_maps() {
        assert_eq!(face_map(2, 1).unwrap().table(), &[0, 1, 1]);
        assert_eq!(face_map(2, 0).unwrap().table(), &[0, 0, 1]);
        assert_eq!(face_map(2, 2).unwrap().table(), &[0, 1, 0]);
        assert_eq!(degeneracy_map(1, 0).unwrap().table(), &[0, 2]);
        assert!(face_map(0, 0).is_err());
        assert!(face_map(2, 3).is_err());
        assert!(degeneracy_map(2, 3).is_err());
    }

    #[test]
    fn krasner_delooping() {
        let w = deloop(&h_hat(&plasma::krasner(), 3, EnumOptions::default()).unwrap()).unwrap();
        assert_eq!(w.level_sizes(), vec![1, 2, 5, 19]);
        assert_eq!(w.nondegenerate(1).len(), 1);
        assert!(w.check_identities().is_ok());
        let mut labels = classify_2simplices(&w).unwrap();
        labels.sort();
        assert_eq!(labels, vec![TriangleLabel::A, TriangleLabel::B, TriangleLabel::C, TriangleLabel::D, TriangleLabel::E]);
    }

    #[test]
    fn partition_delooping() {
        let w = deloop(&part_window(3).unwrap()).unwrap();
        assert_eq!(w.level_sizes(), vec![1, 2, 5, 15]);
        assert!(w.check_identities().is_ok());
        assert!(deloop(&dynk_window(3).unwrap()).unwrap().check_identities().is_ok());
    }

    #[test]
    fn tuples_and_associators() {
        let t = simplex_tuples(3).unwrap();
        assert_eq!(t.len(), 19);
        assert!(t.iter().all(|x| check_associator(x).unwrap() && x.is_morphism()));
        let parsed = SimplexTuple::parse("(01011010)").unwrap();
        assert_eq!(parsed.to_string(), "01011010");
        assert!(SimplexTuple::parse("0101101").is_err());
        assert!(SimplexTuple::parse("0121").is_err());
        assert!(check_associator(&SimplexTuple::parse("0110").unwrap()).is_err());
    }

    #[test]
    fn inner_faces_on_partitions() {
        let p = Partition::singletons(2);
        assert_eq!(face_action_on_partitions(2, 1, &p).unwrap(), Partition::singletons(1));
        let q = Partition::from_labels(&[1, 1, 2]).unwrap();
        assert_eq!(face_action_on_partitions(2, 1, &q).unwrap(), Partition::from_labels(&[1, 1]).unwrap());
        assert_eq!(face_action_on_partitions(3, 2, &Partition::singletons(3)).unwrap(), Partition::singletons(2));
        assert!(face_action_on_partitions(2, 0, &p).is_err());
    }

    #[test]
    fn exports() {
        let w = deloop(&h_hat(&plasma::krasner(), 2, EnumOptions::default()).unwrap()).unwrap();
        let json = export(&w, ExportFormat::Json).unwrap();
        let back: SimplicialWindow = serde_json::from_slice(&json).unwrap();
        assert_eq!(back, w);
        let dot = String::from_utf8(export(&w, ExportFormat::Dot).unwrap()).unwrap();
        assert_eq!(dot.lines().filter(|l| l.trim_start().starts_with('v') && !l.contains("->")).count(), 1);
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 1);
        assert_eq!(dot.lines().filter(|l| l.contains("shape=record")).count(), 5);
        assert!("svg".parse::<ExportFormat>().is_err());
    }
}
