//! Finite plasmas: a carrier `{0..c-1}` with a commutative hyperoperation
//! `x ⋆ y ⊆ carrier` and a weak identity `e` with `x ∈ x ⋆ e`.
//!
//! Hyperoperation values are bitmasks over the carrier; an empty mask is a
//! legal value (the empty family). Carriers are capped at [`MAX_CARRIER`]
//! elements so a value fits in a `u128` and an element fits in a `u8`.

use serde::{Deserialize, Serialize};

use crate::dynkin;
use crate::error::{Error, Result};
use crate::finset::PointedMap;

pub const MAX_CARRIER: usize = 128;

/// Default cap on backtracking nodes for generic morphism enumeration.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// Default size ceiling for isomorphism search.
pub const DEFAULT_ISO_CEILING: usize = 10;

pub type Mask = u128;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Plasma {
    size: usize,
    identity: usize,
    table: Vec<Vec<Mask>>,
}

#[derive(Deserialize)]
struct RawPlasma {
    size: usize,
    identity: usize,
    table: Vec<Vec<Mask>>,
}

impl<'de> Deserialize<'de> for Plasma {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPlasma::deserialize(de)?;
        Plasma::new(raw.size, raw.identity, raw.table).map_err(serde::de::Error::custom)
    }
}

impl Plasma {
    /// Validates commutativity and the weak identity law.
    pub fn new(size: usize, identity: usize, table: Vec<Vec<Mask>>) -> Result<Self> {
        if size == 0 || size > MAX_CARRIER {
            return Err(Error::InvalidPlasma(format!("carrier size {size} not in 1..={MAX_CARRIER}")));
        }
        if identity >= size {
            return Err(Error::InvalidPlasma(format!("identity {identity} outside carrier")));
        }
        if table.len() != size || table.iter().any(|row| row.len() != size) {
            return Err(Error::InvalidPlasma("table is not size x size".into()));
        }
        let universe = carrier_mask(size);
        for (x, row) in table.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                if v & !universe != 0 {
                    return Err(Error::InvalidPlasma(format!("{x}⋆{y} leaves the carrier")));
                }
                if v != table[y][x] {
                    return Err(Error::InvalidPlasma(format!("{x}⋆{y} ≠ {y}⋆{x}")));
                }
            }
            if row[identity] >> x & 1 == 0 {
                return Err(Error::InvalidPlasma(format!("{x} ∉ {x}⋆{identity}")));
            }
        }
        Ok(Plasma { size, identity, table })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `x ⋆ y` as a carrier bitmask.
    pub fn op(&self, x: usize, y: usize) -> Mask {
        self.table[x][y]
    }

    pub fn table(&self) -> &[Vec<Mask>] {
        &self.table
    }

    /// Relabels so the identity sits at index 0 by swapping it with 0.
    pub fn canonicalize(&self) -> Plasma {
        if self.identity == 0 {
            return self.clone();
        }
        let e = self.identity;
        let swap = |x: usize| if x == 0 { e } else if x == e { 0 } else { x };
        let swap_mask = |m: Mask| elements(m).fold(0, |acc, x| acc | 1 << swap(x));
        let table = (0..self.size)
            .map(|x| (0..self.size).map(|y| swap_mask(self.table[swap(x)][swap(y)])).collect())
            .collect();
        Plasma { size: self.size, identity: 0, table }
    }
}

fn carrier_mask(size: usize) -> Mask {
    if size == 128 {
        Mask::MAX
    } else {
        (1 << size) - 1
    }
}

pub(crate) fn elements(mask: Mask) -> impl Iterator<Item = usize> {
    (0..128).filter(move |b| mask >> b & 1 == 1)
}

/// The Krasner hyperfield's additive plasma: `1 + 1 = {0, 1}`.
pub fn krasner() -> Plasma {
    Plasma { size: 2, identity: 0, table: vec![vec![0b01, 0b10], vec![0b10, 0b11]] }
}

/// The free plasma on one point: like [`krasner`] but `1 + 1` is empty.
pub fn free_plasma_on_point() -> Plasma {
    Plasma { size: 2, identity: 0, table: vec![vec![0b01, 0b10], vec![0b10, 0]] }
}

/// The power-set plasma on `{1..n}`: disjoint subsets add to their union,
/// overlapping subsets add to the empty family.
pub fn powerset_plasma(n: usize) -> Result<Plasma> {
    if n > 7 {
        return Err(Error::CeilingExceeded { what: "power-set plasma", n, max: 7 });
    }
    let size = 1usize << n;
    let table = (0..size)
        .map(|a| (0..size).map(|b| if a & b == 0 { 1 << (a | b) } else { 0 }).collect())
        .collect();
    Ok(Plasma { size, identity: 0, table })
}

/// The wedge `P ∨ Q` with both identities identified, together with the two
/// inclusion tables. Carrier order is `[identity, P∖{e}, Q∖{e}]`.
pub fn coproduct(p: &Plasma, q: &Plasma) -> Result<(Plasma, PlasmaMorphism, PlasmaMorphism)> {
    let size = p.size + q.size - 1;
    if size > MAX_CARRIER {
        return Err(Error::CeilingExceeded { what: "coproduct carrier", n: size, max: MAX_CARRIER });
    }
    let relabel = |src: &Plasma, offset: usize| -> Vec<u8> {
        let mut next = offset;
        (0..src.size)
            .map(|x| {
                if x == src.identity {
                    0
                } else {
                    next += 1;
                    next as u8
                }
            })
            .collect()
    };
    let ip = relabel(p, 0);
    let iq = relabel(q, p.size - 1);
    let mut table = vec![vec![0 as Mask; size]; size];
    for (src, inc) in [(p, &ip), (q, &iq)] {
        for x in 0..src.size {
            for y in 0..src.size {
                let image = elements(src.table[x][y]).fold(0, |acc, z| acc | 1 << inc[z]);
                table[inc[x] as usize][inc[y] as usize] = image;
            }
        }
    }
    let plasma = Plasma::new(size, 0, table)?;
    Ok((plasma, PlasmaMorphism::new(ip), PlasmaMorphism::new(iq)))
}

/// `∨ₖK` in canonical order: identity 0, summand `j` is element `j`.
pub fn wedge_of_krasner(k: usize) -> Result<Plasma> {
    let mut acc = krasner();
    if k == 0 {
        return Plasma::new(1, 0, vec![vec![1]]);
    }
    for _ in 1..k {
        acc = coproduct(&acc, &krasner())?.0;
    }
    Ok(acc)
}

/// The one-element plasma.
pub fn trivial_plasma() -> Plasma {
    Plasma { size: 1, identity: 0, table: vec![vec![1]] }
}

/// A function between carriers, checked against a pair of plasmas where
/// needed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlasmaMorphism {
    table: Vec<u8>,
}

impl PlasmaMorphism {
    pub fn new(table: Vec<u8>) -> Self {
        PlasmaMorphism { table }
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x] as usize
    }

    pub fn image_of(&self, mask: Mask) -> Mask {
        elements(mask).fold(0, |acc, x| acc | 1 << self.table[x])
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &PlasmaMorphism) -> PlasmaMorphism {
        PlasmaMorphism { table: f.table.iter().map(|&x| self.table[x as usize]).collect() }
    }
}

/// True iff `f(e) = e'` and `f(x ⋆ y) ⊆ f(x) ⊞ f(y)` for all pairs.
pub fn is_plasma_morphism(table: &[u8], p: &Plasma, q: &Plasma) -> bool {
    if table.len() != p.size || table.iter().any(|&v| v as usize >= q.size) {
        return false;
    }
    if table[p.identity] as usize != q.identity {
        return false;
    }
    let f = |x: usize| table[x] as usize;
    (0..p.size).all(|x| {
        (x..p.size).all(|y| {
            let image = elements(p.table[x][y]).fold(0 as Mask, |acc, z| acc | 1 << f(z));
            image & !q.table[f(x)][f(y)] == 0
        })
    })
}

/// `A ↦ φ⁻¹(A)`, the plasma morphism `𝒫(m) → 𝒫(n)` induced by `φ: <n> -> <m>`.
pub fn powerset_contravariant_map(phi: &PointedMap) -> Result<PlasmaMorphism> {
    if phi.n() > 7 || phi.m() > 7 {
        return Err(Error::CeilingExceeded { what: "power-set plasma", n: phi.n().max(phi.m()), max: 7 });
    }
    let table = (0..1u32 << phi.m()).map(|a| phi.preimage_unpointed(a) as u8).collect();
    Ok(PlasmaMorphism::new(table))
}

/// How [`enumerate_morphisms`] searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Use the KZ-system search when the source is a power-set plasma and the
    /// target is `K` or `∨ₖK`, generic backtracking otherwise.
    Auto,
    Generic,
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub budget: u64,
    pub strategy: Strategy,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { budget: DEFAULT_BUDGET, strategy: Strategy::Auto }
    }
}

/// If `p` is literally `powerset_plasma(d)`, returns `d`.
pub fn powerset_dimension(p: &Plasma) -> Option<usize> {
    if !p.size.is_power_of_two() {
        return None;
    }
    let d = p.size.trailing_zeros() as usize;
    (powerset_plasma(d).ok()? == *p).then_some(d)
}

/// If `q` is literally `wedge_of_krasner(k)` for some `k ≥ 1`, returns `k`.
pub fn krasner_wedge_rank(q: &Plasma) -> Option<usize> {
    let k = q.size.checked_sub(1)?;
    (k >= 1 && wedge_of_krasner(k).ok()? == *q).then_some(k)
}

/// All plasma morphisms `p → q`, sorted lexicographically by table.
pub fn enumerate_morphisms(p: &Plasma, q: &Plasma, opts: EnumOptions) -> Result<Vec<PlasmaMorphism>> {
    if opts.strategy == Strategy::Auto {
        if let (Some(d), Some(k)) = (powerset_dimension(p), krasner_wedge_rank(q)) {
            return Ok(powerset_to_wedge_morphisms(d, k));
        }
    }
    generic_morphisms(p, q, opts.budget)
}

/// Morphisms `𝒫(d) → ∨ₖK` assembled from KZ-systems, one copy of the nonzero
/// `K`-valued morphisms per summand.
fn powerset_to_wedge_morphisms(d: usize, k: usize) -> Vec<PlasmaMorphism> {
    let kernels = dynkin::enumerate_kz(d).expect("dimension bounded by the power-set ceiling");
    let size = 1usize << d;
    let mut out = vec![PlasmaMorphism::new(vec![0; size])];
    for kz in &kernels {
        if kz.family().len() == size {
            continue;
        }
        for j in 1..=k as u8 {
            let table = (0..size as u32).map(|a| if kz.family().contains(a) { 0 } else { j }).collect();
            out.push(PlasmaMorphism::new(table));
        }
    }
    out.sort();
    out
}

fn generic_morphisms(p: &Plasma, q: &Plasma, budget: u64) -> Result<Vec<PlasmaMorphism>> {
    // assignment order: identity first, then the remaining elements ascending
    let order: Vec<usize> = std::iter::once(p.identity).chain((0..p.size).filter(|&x| x != p.identity)).collect();
    let mut pos = vec![0usize; p.size];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    // each pair constraint becomes checkable once x, y and all of x⋆y are assigned
    let mut ready: Vec<Vec<(usize, usize)>> = vec![Vec::new(); p.size];
    for x in 0..p.size {
        for y in x..p.size {
            let last = elements(p.table[x][y]).map(|z| pos[z]).chain([pos[x], pos[y]]).max().unwrap();
            ready[last].push((x, y));
        }
    }
    struct Search<'a> {
        p: &'a Plasma,
        q: &'a Plasma,
        order: Vec<usize>,
        ready: Vec<Vec<(usize, usize)>>,
        table: Vec<u8>,
        out: Vec<PlasmaMorphism>,
        nodes: u64,
        budget: u64,
    }
    impl Search<'_> {
        fn go(&mut self, depth: usize) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            if depth == self.order.len() {
                self.out.push(PlasmaMorphism::new(self.table.clone()));
                return Ok(());
            }
            let x = self.order[depth];
            let candidates: Vec<usize> = if depth == 0 { vec![self.q.identity] } else { (0..self.q.size).collect() };
            for v in candidates {
                self.table[x] = v as u8;
                let ok = self.ready[depth].iter().all(|&(a, b)| {
                    let fa = self.table[a] as usize;
                    let fb = self.table[b] as usize;
                    let image = elements(self.p.table[a][b]).fold(0 as Mask, |acc, z| acc | 1 << self.table[z]);
                    image & !self.q.table[fa][fb] == 0
                });
                if ok {
                    self.go(depth + 1)?;
                }
            }
            Ok(())
        }
    }
    let mut search = Search {
        p,
        q,
        order,
        ready,
        table: vec![0; p.size],
        out: Vec::new(),
        nodes: 0,
        budget,
    };
    search.go(0)?;
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// Finds an identity-preserving bijection `f` with `f(x ⋆ y) = f(x) ⊞ f(y)`,
/// the first in lexicographic order, or `None`.
pub fn are_isomorphic(p: &Plasma, q: &Plasma, ceiling: usize) -> Result<Option<Vec<u8>>> {
    if p.size > ceiling || q.size > ceiling {
        return Err(Error::CeilingExceeded { what: "isomorphism search", n: p.size.max(q.size), max: ceiling });
    }
    if p.size != q.size {
        return Ok(None);
    }
    let sig = |pl: &Plasma, x: usize| {
        let mut row: Vec<u32> = (0..pl.size).map(|y| pl.table[x][y].count_ones()).collect();
        row.sort_unstable();
        (x == pl.identity, pl.table[x][x].count_ones(), pl.table[x][x] >> x & 1, row)
    };
    let sp: Vec<_> = (0..p.size).map(|x| sig(p, x)).collect();
    let sq: Vec<_> = (0..q.size).map(|x| sig(q, x)).collect();
    let order: Vec<usize> = std::iter::once(p.identity).chain((0..p.size).filter(|&x| x != p.identity)).collect();
    let mut pos = vec![0usize; p.size];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let mut ready: Vec<Vec<(usize, usize)>> = vec![Vec::new(); p.size];
    for x in 0..p.size {
        for y in x..p.size {
            let last = elements(p.table[x][y]).map(|z| pos[z]).chain([pos[x], pos[y]]).max().unwrap();
            ready[last].push((x, y));
        }
    }

    let search = IsoSearch { p, q, order: &order, ready: &ready, sp: &sp, sq: &sq };
    let mut f = vec![0u8; p.size];
    let mut used = vec![false; q.size];
    Ok(search.go(0, &mut f, &mut used).then_some(f))
}

type Signature = (bool, u32, u128, Vec<u32>);

struct IsoSearch<'a> {
    p: &'a Plasma,
    q: &'a Plasma,
    order: &'a [usize],
    ready: &'a [Vec<(usize, usize)>],
    sp: &'a [Signature],
    sq: &'a [Signature],
}

impl IsoSearch<'_> {
    fn go(&self, depth: usize, f: &mut Vec<u8>, used: &mut Vec<bool>) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for v in 0..self.q.size {
            if used[v] || self.sp[x] != self.sq[v] {
                continue;
            }
            f[x] = v as u8;
            let ok = self.ready[depth].iter().all(|&(a, b)| {
                let target = self.q.table[f[a] as usize][f[b] as usize];
                let image = elements(self.p.table[a][b]).fold(0 as Mask, |acc, z| acc | 1 << f[z]);
                image == target
            });
            if ok {
                used[v] = true;
                if self.go(depth + 1, f, used) {
                    return true;
                }
                used[v] = false;
            }
        }
        false
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The quotient of `𝔽_p` by its unit group: carrier `{0-coset, unit-coset}`
/// with coset sums taken over all representatives.
pub fn quotient_plasma_prime_field(p: u64) -> Result<Plasma> {
    if p > 97 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let coset = |r: u64| -> Vec<u64> { if r == 0 { vec![0] } else { (1..p).collect() } };
    let class = |x: u64| usize::from(!x.is_multiple_of(p));
    let table = (0..2u64)
        .map(|r| {
            (0..2u64)
                .map(|s| {
                    let mut mask: Mask = 0;
                    for u in coset(r) {
                        for v in coset(s) {
                            mask |= 1 << class(u + v);
                        }
                    }
                    mask
                })
                .collect()
        })
        .collect();
    Plasma::new(2, 0, table)
}

/// Where a morphism `𝒫(n) → ∨ₖK` lands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WedgeFactor {
    Zero,
    Summand(usize),
}

/// The summand of `∨ₖK` containing the image of `f`.
pub fn factor_wedge_morphism(f: &PlasmaMorphism, n: usize, k: usize) -> Result<WedgeFactor> {
    let src = powerset_plasma(n)?;
    let dst = wedge_of_krasner(k)?;
    if !is_plasma_morphism(f.table(), &src, &dst) {
        return Err(Error::NotAMorphism(format!("{:?} is not a morphism 𝒫({n}) → ∨{k}K", f.table())));
    }
    let mut summand = None;
    for &v in f.table() {
        if v == 0 {
            continue;
        }
        match summand {
            None => summand = Some(v as usize),
            Some(s) if s == v as usize => {}
            Some(s) => {
                return Err(Error::NotAMorphism(format!("image meets summands {s} and {v}")));
            }
        }
    }
    Ok(summand.map_or(WedgeFactor::Zero, WedgeFactor::Summand))
}

/// Collapses a morphism into `∨ₖK` onto the `K`-valued morphism of its summand.
pub fn project_to_krasner(f: &PlasmaMorphism) -> PlasmaMorphism {
    PlasmaMorphism::new(f.table().iter().map(|&v| u8::from(v != 0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{compose, enumerate_pointed_maps};

    fn set(xs: &[usize]) -> Mask {
        xs.iter().fold(0, |acc, &x| acc | 1 << x)
    }

    #[test]
    fn krasner_table() {
        let k = krasner();
        assert_eq!(k.op(0, 0), set(&[0]));
        assert_eq!(k.op(1, 1), set(&[0, 1]));
        assert_eq!(k.op(0, 1), set(&[1]));
    }

    #[test]
    fn powerset_examples() {
        let p = powerset_plasma(2).unwrap();
        assert_eq!(p.op(0b01, 0b10), set(&[0b11]));
        assert_eq!(p.op(0b01, 0b01), 0);
        for a in 0..4 {
            assert_eq!(p.op(a, 0), set(&[a]));
        }
    }

    #[test]
    fn constructor_rejects_bad_tables() {
        assert!(Plasma::new(2, 0, vec![vec![1, 2], vec![1, 3]]).is_err());
        assert!(Plasma::new(2, 0, vec![vec![1, 0], vec![0, 3]]).is_err());
        assert!(Plasma::new(2, 2, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(Plasma::new(2, 0, vec![vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn coproduct_examples() {
        let (kk, ip, iq) = coproduct(&krasner(), &krasner()).unwrap();
        assert_eq!(kk.size(), 3);
        assert_eq!(kk.op(1, 2), 0);
        assert_eq!(kk.op(1, 1), set(&[0, 1]));
        assert_eq!(kk.op(2, 2), set(&[0, 2]));
        for x in 0..3 {
            assert!(kk.op(x, 0) >> x & 1 == 1);
        }
        assert!(is_plasma_morphism(ip.table(), &krasner(), &kk));
        assert!(is_plasma_morphism(iq.table(), &krasner(), &kk));
        assert_eq!(iq.table(), &[0, 2]);
    }

    #[test]
    fn canonicalize_moves_identity() {
        let p = Plasma::new(2, 1, vec![vec![3, 1], vec![1, 2]]).unwrap();
        let c = p.canonicalize();
        assert_eq!(c.identity(), 0);
        assert_eq!(c, krasner());
    }

    #[test]
    fn morphism_checks() {
        let p2 = powerset_plasma(2).unwrap();
        let k = krasner();
        assert!(is_plasma_morphism(&[0, 0, 1, 1], &p2, &k));
        assert!(!is_plasma_morphism(&[1, 0, 1, 1], &p2, &k));
        let kk = wedge_of_krasner(2).unwrap();
        assert!(!is_plasma_morphism(&[0, 1, 2, 0], &p2, &kk));
        assert!(!is_plasma_morphism(&[0, 1, 2, 1], &p2, &kk));
        assert!(!is_plasma_morphism(&[0, 1, 2, 2], &p2, &kk));
    }

    #[test]
    fn hom_set_sizes_into_krasner() {
        let k = krasner();
        for (n, expected) in [(1, 2), (2, 5), (3, 19)] {
            let p = powerset_plasma(n).unwrap();
            let generic = enumerate_morphisms(&p, &k, EnumOptions { strategy: Strategy::Generic, ..Default::default() }).unwrap();
            let fast = enumerate_morphisms(&p, &k, EnumOptions::default()).unwrap();
            assert_eq!(generic.len(), expected);
            assert_eq!(generic, fast);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let p = powerset_plasma(3).unwrap();
        let opts = EnumOptions { budget: 10, strategy: Strategy::Generic };
        assert_eq!(enumerate_morphisms(&p, &krasner(), opts), Err(Error::BudgetExceeded(10)));
    }

    #[test]
    fn contravariant_map_is_functorial() {
        for n in 0..=3 {
            for m in 0..=3 {
                for f in enumerate_pointed_maps(n, m) {
                    let pf = powerset_contravariant_map(&f).unwrap();
                    assert!(is_plasma_morphism(pf.table(), &powerset_plasma(m).unwrap(), &powerset_plasma(n).unwrap()));
                    for l in 0..=3 {
                        for g in enumerate_pointed_maps(m, l) {
                            let gf = compose(&g, &f).unwrap();
                            let lhs = powerset_contravariant_map(&gf).unwrap();
                            let rhs = pf.after(&powerset_contravariant_map(&g).unwrap());
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
        let id = powerset_contravariant_map(&PointedMap::identity(3)).unwrap();
        assert_eq!(id.table(), (0..8).collect::<Vec<u8>>().as_slice());
        let fold = powerset_contravariant_map(&PointedMap::fold(2)).unwrap();
        assert_eq!(fold.apply(1), 0b11);
    }

    #[test]
    fn isomorphism_examples() {
        assert_eq!(are_isomorphic(&krasner(), &krasner(), 10).unwrap(), Some(vec![0, 1]));
        assert_eq!(are_isomorphic(&krasner(), &free_plasma_on_point(), 10).unwrap(), None);
        assert_eq!(are_isomorphic(&powerset_plasma(1).unwrap(), &krasner(), 10).unwrap(), None);
        assert!(are_isomorphic(&powerset_plasma(4).unwrap(), &powerset_plasma(4).unwrap(), 10).is_err());
    }

    #[test]
    fn prime_quotients() {
        let k = krasner();
        for p in [3, 5, 7, 97] {
            let q = quotient_plasma_prime_field(p).unwrap();
            assert!(are_isomorphic(&q, &k, 10).unwrap().is_some(), "p = {p}");
        }
        let q2 = quotient_plasma_prime_field(2).unwrap();
        assert_eq!(q2.op(1, 1), set(&[0]));
        assert!(are_isomorphic(&q2, &k, 10).unwrap().is_none());
        assert_eq!(quotient_plasma_prime_field(9), Err(Error::NotPrime(9)));
        assert_eq!(quotient_plasma_prime_field(101), Err(Error::NotPrime(101)));
    }

    #[test]
    fn wedge_factorization() {
        assert_eq!(factor_wedge_morphism(&PlasmaMorphism::new(vec![0, 0]), 1, 2).unwrap(), WedgeFactor::Zero);
        assert_eq!(factor_wedge_morphism(&PlasmaMorphism::new(vec![0, 2]), 1, 2).unwrap(), WedgeFactor::Summand(2));
        assert!(factor_wedge_morphism(&PlasmaMorphism::new(vec![0, 1, 2, 0]), 2, 2).is_err());
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&krasner()).unwrap();
        assert_eq!(json, r#"{"size":2,"identity":0,"table":[[1,2],[2,3]]}"#);
        let back: Plasma = serde_json::from_str(&json).unwrap();
        assert_eq!(back, krasner());
        assert!(serde_json::from_str::<Plasma>(r#"{"size":2,"identity":0,"table":[[1,2],[1,3]]}"#).is_err());
    }
}
