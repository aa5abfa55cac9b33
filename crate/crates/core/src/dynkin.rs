//! Dynkin systems on pointed sets `<n>` and KZ-systems on `{1..n}`.
//!
//! A Dynkin system contains `∅`, is closed under complement and under unions
//! of disjoint members. On a finite ambient the countable-union axiom adds
//! nothing, so only these three are checked.
//!
//! A KZ-system contains `∅`, is closed under disjoint unions, and satisfies
//! `A ∈ X, B ∉ X, A ∩ B = ∅ ⇒ A ∪ B ∉ X`. KZ-systems on `{1..n}` are exactly
//! the zero sets of plasma morphisms `𝒫(n) → K` ([`kappa`]), and they are in
//! bijection with Dynkin systems on `<n>` via [`phi`] / [`psi`].
//!
//! Enumeration runs a backtracking search over KZ-systems ([`enumerate_kz`]);
//! [`oracle_a`] and [`oracle_b`] are brute-force scans used to cross-check it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finset::{popcount_order, PointedMap, SetFamily};
use crate::partitions::Partition;
use crate::plasma::{self, PlasmaMorphism};

/// Largest `n` the backtracking engine accepts (KZ families fit in 128 bits).
pub const MAX_ENUMERATION: usize = 7;
/// Largest `n` for [`oracle_a`].
pub const ORACLE_A_MAX: usize = 3;
/// Largest `n` for [`oracle_b`] without the slow flag.
pub const ORACLE_B_MAX: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinSystem {
    family: SetFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KzSystem {
    family: SetFamily,
}

impl DynkinSystem {
    pub fn new(family: SetFamily) -> Result<Self> {
        if !family.is_pointed() {
            return Err(Error::InvalidFamily("Dynkin systems live on pointed ambients".into()));
        }
        if !validate_dynkin(&family) {
            return Err(Error::InvalidFamily(format!("{} is not a Dynkin system", family.to_hex())));
        }
        Ok(DynkinSystem { family })
    }

    /// The full power set of `<n>`, the basepoint of `Dynk(<n>)`.
    pub fn power_set(n: usize) -> Result<Self> {
        Ok(DynkinSystem { family: SetFamily::full(n, true)? })
    }

    /// `{∅, <n>}`.
    pub fn trivial(n: usize) -> Result<Self> {
        let full = (1u32 << (n + 1)) - 1;
        Ok(DynkinSystem { family: SetFamily::from_masks(n, true, [0, full])? })
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn contains(&self, pointed_mask: u32) -> bool {
        self.family.contains(pointed_mask)
    }
}

impl KzSystem {
    pub fn new(family: SetFamily) -> Result<Self> {
        if family.is_pointed() {
            return Err(Error::InvalidFamily("KZ-systems live on unpointed ambients".into()));
        }
        if !validate_kz(&family) {
            return Err(Error::InvalidFamily(format!("{} is not a KZ-system", family.to_hex())));
        }
        Ok(KzSystem { family })
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }
}

/// Checks `∅ ∈ X`, closure under complement in `{0..n}`, and closure under
/// disjoint unions. `family` must be over a pointed ambient.
pub fn validate_dynkin(family: &SetFamily) -> bool {
    if !family.is_pointed() || !family.contains(0) {
        return false;
    }
    let full = family.universe_len() as u32 - 1;
    let members: Vec<u32> = family.members().collect();
    members.iter().all(|&a| family.contains(full ^ a))
        && members
            .iter()
            .all(|&a| members.iter().all(|&b| a & b != 0 || family.contains(a | b)))
}

/// Checks the three KZ conditions on a family over `{1..n}`.
pub fn validate_kz(family: &SetFamily) -> bool {
    if family.is_pointed() || !family.contains(0) {
        return false;
    }
    let len = family.universe_len() as u32;
    (0..len).all(|a| {
        (0..len).all(|b| {
            if a & b != 0 {
                return true;
            }
            match (family.contains(a), family.contains(b)) {
                (true, true) => family.contains(a | b),
                (true, false) | (false, true) => !family.contains(a | b),
                (false, false) => true,
            }
        })
    })
}

/// Zero set `f⁻¹(0)` of a plasma morphism `𝒫(n) → K`.
pub fn kappa(f: &PlasmaMorphism, n: usize) -> Result<KzSystem> {
    let src = plasma::powerset_plasma(n)?;
    if !plasma::is_plasma_morphism(f.table(), &src, &plasma::krasner()) {
        return Err(Error::NotAMorphism(format!("{:?} is not a morphism 𝒫({n}) → K", f.table())));
    }
    let masks = (0..1u32 << n).filter(|&a| f.apply(a as usize) == 0);
    Ok(KzSystem { family: SetFamily::from_masks(n, false, masks)? })
}

/// The morphism `𝒫(n) → K` whose zero set is `x`.
pub fn kappa_inverse(x: &KzSystem) -> PlasmaMorphism {
    let table = (0..x.family.universe_len() as u32).map(|a| u8::from(!x.family.contains(a))).collect();
    PlasmaMorphism::new(table)
}

/// `Φ(X) = X ∪ {<n> ∖ A : A ∈ X}`, reading `X` inside `{0..n}`.
pub fn phi(x: &KzSystem) -> Result<DynkinSystem> {
    if !validate_kz(&x.family) {
        return Err(Error::InvalidFamily("Φ needs a KZ-system".into()));
    }
    let n = x.n();
    let full = (1u32 << (n + 1)) - 1;
    let masks = x.family.members().flat_map(|a| [a << 1, full ^ (a << 1)]);
    Ok(DynkinSystem { family: SetFamily::from_masks(n, true, masks)? })
}

/// `Ψ(Y) = {A ∈ Y : 0 ∉ A}`, read as subsets of `{1..n}`.
pub fn psi(y: &DynkinSystem) -> Result<KzSystem> {
    if !validate_dynkin(&y.family) {
        return Err(Error::InvalidFamily("Ψ needs a Dynkin system".into()));
    }
    let masks = y.family.members().filter(|a| a & 1 == 0).map(|a| a >> 1);
    Ok(KzSystem { family: SetFamily::from_masks(y.n(), false, masks)? })
}

/// `Dynk(φ)(X) = {A ⊆ <m> : φ⁻¹(A) ∈ X}`.
pub fn dynk_map(phi_map: &PointedMap, x: &DynkinSystem) -> Result<DynkinSystem> {
    if phi_map.n() != x.n() {
        return Err(Error::AmbientMismatch(format!(
            "map from <{}> applied to a system on <{}>",
            phi_map.n(),
            x.n()
        )));
    }
    let m = phi_map.m();
    let masks = (0..1u32 << (m + 1)).filter(|&w| x.family.contains(phi_map.preimage_pointed(w)));
    Ok(DynkinSystem { family: SetFamily::from_masks(m, true, masks)? })
}

pub fn is_intersection_closed(x: &DynkinSystem) -> bool {
    let members: Vec<u32> = x.family.members().collect();
    members.iter().all(|&a| members.iter().all(|&b| x.family.contains(a & b)))
}

/// Minimal nonempty members of an intersection-closed system.
pub fn atoms(x: &DynkinSystem) -> Result<Partition> {
    if !is_intersection_closed(x) {
        return Err(Error::NotIntersectionClosed);
    }
    let members: Vec<u32> = x.family.members().filter(|&a| a != 0).collect();
    let blocks = members
        .iter()
        .copied()
        .filter(|&a| !members.iter().any(|&b| b != a && b & a == b))
        .collect();
    Partition::from_blocks(x.n(), blocks)
}

fn u128_family(n: usize, bits: u128) -> SetFamily {
    let len = 1usize << n;
    let masks = (0..len as u32).filter(|&a| bits >> a & 1 == 1);
    SetFamily::from_masks(n, false, masks).expect("mask within ambient")
}

/// Backtracking state for KZ-systems on `{1..n}`.
///
/// Nonempty subsets are decided in (popcount, mask) order, so every proper
/// subset of `C` is settled before `C`. When `C` comes up, each split
/// `C = A ⊔ B` into nonempty parts forces `C` in (both parts in) or out
/// (exactly one part in); a subset forced both ways kills the branch.
struct KzSearch {
    order: Vec<u32>,
    splits: Vec<Vec<(u32, u32)>>,
}

impl KzSearch {
    fn new(n: usize) -> Self {
        let order: Vec<u32> = popcount_order(n).into_iter().filter(|&c| c != 0).collect();
        let splits = order
            .iter()
            .map(|&c| {
                let mut pairs = Vec::new();
                let mut a = (c - 1) & c;
                while a != 0 {
                    let b = c ^ a;
                    if a < b {
                        pairs.push((a, b));
                    }
                    a = (a - 1) & c;
                }
                pairs
            })
            .collect();
        KzSearch { order, splits }
    }

    fn forced(&self, depth: usize, member: u128) -> (bool, bool) {
        let mut force_in = false;
        let mut force_out = false;
        for &(a, b) in &self.splits[depth] {
            let ia = member >> a & 1 == 1;
            let ib = member >> b & 1 == 1;
            if ia && ib {
                force_in = true;
            } else if ia != ib {
                force_out = true;
            }
            if force_in && force_out {
                break;
            }
        }
        (force_in, force_out)
    }

    fn walk(&self, depth: usize, member: u128, emit: &mut impl FnMut(u128)) {
        if depth == self.order.len() {
            emit(member);
            return;
        }
        let c = self.order[depth];
        match self.forced(depth, member) {
            (true, true) => {}
            (true, false) => self.walk(depth + 1, member | 1 << c, emit),
            (false, true) => self.walk(depth + 1, member, emit),
            (false, false) => {
                self.walk(depth + 1, member, emit);
                self.walk(depth + 1, member | 1 << c, emit);
            }
        }
    }

    /// Singletons have no splits, so the first `n` decisions are free; each
    /// choice of singleton members seeds one independent subtree.
    fn seeds(&self, n: usize) -> Vec<u128> {
        (0..1u32 << n)
            .map(|choice| {
                (0..n).filter(|i| choice >> i & 1 == 1).fold(1u128, |acc, i| acc | 1 << (1u32 << i))
            })
            .collect()
    }
}

fn check_ceiling(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION {
        return Err(Error::CeilingExceeded { what: "Dynkin enumeration", n, max: MAX_ENUMERATION });
    }
    Ok(())
}

fn kz_bitmaps(n: usize) -> Result<Vec<u128>> {
    check_ceiling(n)?;
    let search = KzSearch::new(n);
    let mut all: Vec<u128> = search
        .seeds(n)
        .into_par_iter()
        .flat_map_iter(|seed| {
            let mut found = Vec::new();
            search.walk(n, seed, &mut |m| found.push(m));
            found
        })
        .collect();
    all.sort_unstable();
    Ok(all)
}

/// All KZ-systems on `{1..n}`, ascending by family bitvector.
pub fn enumerate_kz(n: usize) -> Result<Vec<KzSystem>> {
    Ok(kz_bitmaps(n)?.into_iter().map(|b| KzSystem { family: u128_family(n, b) }).collect())
}

/// All Dynkin systems on `<n>`, ascending by family bitvector.
pub fn enumerate_dynkin(n: usize) -> Result<Vec<DynkinSystem>> {
    let mut out: Vec<DynkinSystem> = enumerate_kz(n)?
        .par_iter()
        .map(|x| phi(x).expect("engine emits KZ-systems"))
        .collect();
    out.sort();
    Ok(out)
}

/// Number of Dynkin systems on `<n>` without materializing them.
pub fn count_dynkin(n: usize) -> Result<u64> {
    check_ceiling(n)?;
    let search = KzSearch::new(n);
    Ok(search
        .seeds(n)
        .into_par_iter()
        .map(|seed| {
            let mut count = 0u64;
            search.walk(n, seed, &mut |_| count += 1);
            count
        })
        .sum())
}

/// Brute force: scan every family of subsets of `{0..n}` and keep those
/// satisfying the Dynkin axioms.
pub fn oracle_a(n: usize) -> Result<Vec<DynkinSystem>> {
    if n > ORACLE_A_MAX {
        return Err(Error::CeilingExceeded { what: "oracle-A", n, max: ORACLE_A_MAX });
    }
    let width = n + 1;
    let subsets = 1u32 << width;
    let full = subsets - 1;
    let holds = |fam: u64| -> bool {
        let has = |a: u32| fam >> a & 1 == 1;
        has(0)
            && (0..subsets).all(|a| !has(a) || has(full ^ a))
            && (0..subsets).all(|a| (0..subsets).all(|b| !(has(a) && has(b) && a & b == 0) || has(a | b)))
    };
    let total: u64 = 1 << subsets;
    let mut out: Vec<DynkinSystem> = (0..total)
        .into_par_iter()
        .filter(|&fam| holds(fam))
        .map(|fam| DynkinSystem { family: SetFamily::from_word(n, true, fam) })
        .collect();
    out.sort();
    Ok(out)
}

/// Brute force: scan every function `𝒫({1..n}) → {0,1}`, keep the plasma
/// morphisms into `K`, and send each to `Φ(f⁻¹(0))`.
///
/// `n = 5` scans 2³¹ candidates and requires `slow`.
pub fn oracle_b(n: usize, slow: bool) -> Result<Vec<DynkinSystem>> {
    let max = if slow { 5 } else { ORACLE_B_MAX };
    if n > max {
        return Err(Error::CeilingExceeded { what: "oracle-B", n, max });
    }
    let k = plasma::krasner();
    let subsets = 1u32 << n;
    let disjoint: Vec<(u32, u32)> = (0..subsets)
        .flat_map(|a| (a..subsets).filter(move |&b| a & b == 0).map(move |b| (a, b)))
        .collect();
    // f(∅) must be 0, so candidates are the values on the nonempty subsets
    let total: u64 = 1 << (subsets - 1);
    let is_morphism = |values: u64| -> bool {
        let f = |a: u32| (values >> a & 1) as usize;
        disjoint.iter().all(|&(a, b)| k.op(f(a), f(b)) >> f(a | b) & 1 == 1)
    };
    let mut out: Vec<DynkinSystem> = (0..total)
        .into_par_iter()
        .map(|c| c << 1)
        .filter(|&values| is_morphism(values))
        .map(|values| {
            let table = (0..subsets).map(|a| (values >> a & 1) as u8).collect();
            let kz = kappa(&PlasmaMorphism::new(table), n).expect("filtered to morphisms");
            phi(&kz).expect("kernel of a morphism is a KZ-system")
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::enumerate_pointed_maps;

    fn pfam(n: usize, masks: &[u32]) -> SetFamily {
        SetFamily::from_masks(n, true, masks.iter().copied()).unwrap()
    }

    fn ufam(n: usize, masks: &[u32]) -> SetFamily {
        SetFamily::from_masks(n, false, masks.iter().copied()).unwrap()
    }

    #[test]
    fn validate_dynkin_examples() {
        assert!(validate_dynkin(&pfam(2, &[0, 0b111])));
        for n in 0..=4 {
            assert!(validate_dynkin(&SetFamily::full(n, true).unwrap()));
        }
        // {∅, {0}, {0,1,2}} lacks {1,2}
        assert!(!validate_dynkin(&pfam(2, &[0, 0b001, 0b111])));
        assert!(!validate_dynkin(&SetFamily::empty(2, true).unwrap()));
    }

    #[test]
    fn validate_kz_examples() {
        assert!(validate_kz(&ufam(2, &[0])));
        assert!(validate_kz(&ufam(2, &[0, 0b01])));
        assert!(!validate_kz(&ufam(2, &[0, 0b01, 0b10])));
        assert!(!validate_kz(&SetFamily::empty(2, false).unwrap()));
    }

    #[test]
    fn kappa_examples() {
        let zero = PlasmaMorphism::new(vec![0; 8]);
        assert_eq!(kappa(&zero, 3).unwrap().family(), &SetFamily::full(3, false).unwrap());
        let f = PlasmaMorphism::new(vec![0, 0, 1, 1]);
        let kz = kappa(&f, 2).unwrap();
        assert_eq!(kz.family(), &ufam(2, &[0, 0b01]));
        assert_eq!(kappa_inverse(&kz), f);
        assert!(kappa(&PlasmaMorphism::new(vec![1, 0, 1, 1]), 2).is_err());
    }

    #[test]
    fn phi_psi_examples() {
        let x = KzSystem::new(ufam(2, &[0])).unwrap();
        assert_eq!(phi(&x).unwrap().family(), &pfam(2, &[0, 0b111]));
        let x = KzSystem::new(ufam(2, &[0, 0b01])).unwrap();
        // {∅,{1},{0,2},{0,1,2}}
        assert_eq!(phi(&x).unwrap().family(), &pfam(2, &[0, 0b010, 0b101, 0b111]));
        for n in 0..=3 {
            let all = KzSystem::new(SetFamily::full(n, false).unwrap()).unwrap();
            let dyn_all = phi(&all).unwrap();
            assert_eq!(dyn_all, DynkinSystem::power_set(n).unwrap());
            assert_eq!(psi(&dyn_all).unwrap(), all);
        }
        assert_eq!(psi(&DynkinSystem::trivial(2).unwrap()).unwrap().family(), &ufam(2, &[0]));
    }

    #[test]
    fn dynk_map_examples() {
        let x = DynkinSystem::new(pfam(2, &[0, 0b010, 0b101, 0b111])).unwrap();
        let image = dynk_map(&PointedMap::fold(2), &x).unwrap();
        assert_eq!(image.family(), &pfam(1, &[0, 0b11]));
        for f in enumerate_pointed_maps(2, 3) {
            assert_eq!(dynk_map(&f, &DynkinSystem::power_set(2).unwrap()).unwrap(), DynkinSystem::power_set(3).unwrap());
        }
        assert!(dynk_map(&PointedMap::fold(3), &x).is_err());
    }

    #[test]
    fn counts_match_sequence() {
        let expected = [1u64, 2, 5, 19, 137, 3708];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(enumerate_dynkin(n).unwrap().len() as u64, c);
            assert_eq!(count_dynkin(n).unwrap(), c);
        }
    }

    #[test]
    fn degenerate_ambient() {
        let only = enumerate_dynkin(0).unwrap();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].family(), &pfam(0, &[0, 1]));
        assert_eq!(enumerate_kz(0).unwrap()[0].family(), &ufam(0, &[0]));
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let all = enumerate_dynkin(4).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|x| validate_dynkin(x.family())));
    }

    #[test]
    fn intersection_closure() {
        assert!(is_intersection_closed(&DynkinSystem::trivial(2).unwrap()));
        assert!(is_intersection_closed(&DynkinSystem::power_set(3).unwrap()));
        let non_closed = enumerate_dynkin(3).unwrap().into_iter().filter(|x| !is_intersection_closed(x)).count();
        assert_eq!(non_closed, 4);
    }

    #[test]
    fn atoms_examples() {
        let p = atoms(&DynkinSystem::trivial(2).unwrap()).unwrap();
        assert_eq!(p.blocks(), &[0b111]);
        let x = DynkinSystem::new(pfam(2, &[0, 0b001, 0b110, 0b111])).unwrap();
        assert_eq!(atoms(&x).unwrap().blocks(), &[0b001, 0b110]);
        assert_eq!(atoms(&DynkinSystem::power_set(3).unwrap()).unwrap().blocks(), &[1, 2, 4, 8]);
        let bad = enumerate_dynkin(3).unwrap().into_iter().find(|x| !is_intersection_closed(x)).unwrap();
        assert_eq!(atoms(&bad), Err(Error::NotIntersectionClosed));
    }

    #[test]
    fn ceilings() {
        assert!(enumerate_dynkin(8).is_err());
        assert!(oracle_a(4).is_err());
        assert!(oracle_b(5, false).is_err());
    }
}
