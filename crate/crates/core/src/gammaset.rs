//! Truncated F1-modules: pointed functors from finite pointed sets to pointed
//! sets, restricted to the objects `<0>..<N>`.
//!
//! A [`GammaSetWindow`] stores its value sets extensionally. Elements are
//! indices into a level, with the basepoint always at index 0. The action of a
//! pointed map is computed on demand and memoized per map, one table covering
//! every element of the source level.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dynkin::{self, DynkinSystem};
use crate::error::{Error, Result};
use crate::finset::{characteristic_map, compose, enumerate_pointed_maps, graded_lex_order, PointedMap, SetFamily};
use crate::partitions::{self, Partition};
use crate::plasma::{self, EnumOptions, Plasma, PlasmaMorphism};

pub const DYNK_WINDOW_MAX: usize = 5;
pub const PART_WINDOW_MAX: usize = 6;
pub const PHI_ISO_MAX: usize = 4;

enum Source {
    Point,
    Dynk { levels: Vec<Vec<DynkinSystem>>, index: Vec<HashMap<SetFamily, u32>> },
    Part { levels: Vec<Vec<Partition>>, index: Vec<HashMap<Partition, u32>> },
    HHat { plasma: Plasma, levels: Vec<Vec<PlasmaMorphism>>, index: Vec<HashMap<PlasmaMorphism, u32>> },
    Wedge { parts: Vec<GammaSetWindow>, offsets: Vec<Vec<u32>> },
}

pub struct GammaSetWindow {
    top: usize,
    sizes: Vec<usize>,
    source: Source,
    cache: RwLock<HashMap<PointedMap, Arc<Vec<u32>>>>,
}

impl std::fmt::Debug for GammaSetWindow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GammaSetWindow").field("kind", &self.kind()).field("sizes", &self.sizes).finish()
    }
}

/// Moves `basepoint` to the front, keeping the rest in order.
fn basepoint_first<T: PartialEq>(mut items: Vec<T>, basepoint: &T) -> Vec<T> {
    let pos = items.iter().position(|x| x == basepoint).expect("basepoint present in its level");
    let bp = items.remove(pos);
    items.insert(0, bp);
    items
}

fn index_of<T: std::hash::Hash + Eq + Clone>(items: &[T]) -> HashMap<T, u32> {
    items.iter().enumerate().map(|(i, x)| (x.clone(), i as u32)).collect()
}

impl GammaSetWindow {
    fn from_source(top: usize, sizes: Vec<usize>, source: Source) -> Self {
        GammaSetWindow { top, sizes, source, cache: RwLock::new(HashMap::new()) }
    }

    /// The constant functor at a point.
    pub fn point(top: usize) -> Self {
        GammaSetWindow::from_source(top, vec![1; top + 1], Source::Point)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.sizes[n]
    }

    pub fn level_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn kind(&self) -> &'static str {
        match self.source {
            Source::Point => "point",
            Source::Dynk { .. } => "dynkin",
            Source::Part { .. } => "partitions",
            Source::HHat { .. } => "h-hat",
            Source::Wedge { .. } => "wedge",
        }
    }

    pub fn dynkin_system(&self, level: usize, idx: usize) -> Option<&DynkinSystem> {
        match &self.source {
            Source::Dynk { levels, .. } => levels.get(level)?.get(idx),
            _ => None,
        }
    }

    pub fn dynkin_index(&self, system: &DynkinSystem) -> Option<usize> {
        match &self.source {
            Source::Dynk { index, .. } => index.get(system.n())?.get(system.family()).map(|&i| i as usize),
            _ => None,
        }
    }

    pub fn partition(&self, level: usize, idx: usize) -> Option<&Partition> {
        match &self.source {
            Source::Part { levels, .. } => levels.get(level)?.get(idx),
            _ => None,
        }
    }

    pub fn morphism(&self, level: usize, idx: usize) -> Option<&PlasmaMorphism> {
        match &self.source {
            Source::HHat { levels, .. } => levels.get(level)?.get(idx),
            _ => None,
        }
    }

    /// The target plasma of an `Ĥ` window.
    pub fn target_plasma(&self) -> Option<&Plasma> {
        match &self.source {
            Source::HHat { plasma, .. } => Some(plasma),
            _ => None,
        }
    }

    pub fn morphism_index(&self, level: usize, f: &PlasmaMorphism) -> Option<usize> {
        match &self.source {
            Source::HHat { index, .. } => index.get(level)?.get(f).map(|&i| i as usize),
            _ => None,
        }
    }

    /// For a wedge window, the summand (1-based) and inner index of an element.
    pub fn wedge_location(&self, level: usize, idx: usize) -> Option<(usize, usize)> {
        match &self.source {
            Source::Wedge { parts, offsets } => {
                if idx == 0 {
                    return Some((0, 0));
                }
                let off = &offsets[level];
                (0..parts.len())
                    .rev()
                    .find(|&j| idx as u32 > off[j])
                    .map(|j| (j + 1, idx - off[j] as usize))
            }
            _ => None,
        }
    }

    /// Index in a wedge window of the inner element `inner` of summand `j` (1-based).
    pub fn wedge_index(&self, level: usize, j: usize, inner: usize) -> Option<usize> {
        match &self.source {
            Source::Wedge { parts, offsets } => {
                if inner == 0 {
                    return Some(0);
                }
                let part = parts.get(j.checked_sub(1)?)?;
                (inner < part.level_size(level)).then(|| offsets[level][j - 1] as usize + inner)
            }
            _ => None,
        }
    }

    /// Source-native rendering of an element.
    pub fn describe(&self, level: usize, idx: usize) -> String {
        match &self.source {
            Source::Point => "*".into(),
            Source::Dynk { levels, .. } => levels[level][idx].family().to_hex(),
            Source::Part { levels, .. } => levels[level][idx].to_string(),
            Source::HHat { levels, .. } => levels[level][idx].table().iter().map(|d| digit(*d as usize)).collect(),
            Source::Wedge { parts, .. } => match self.wedge_location(level, idx) {
                Some((0, _)) | None => "*".into(),
                Some((j, inner)) => format!("{j}:{}", parts[j - 1].describe(level, inner)),
            },
        }
    }

    fn check_map(&self, phi: &PointedMap) -> Result<()> {
        if phi.n() > self.top || phi.m() > self.top {
            return Err(Error::LevelMismatch(format!("map {phi} leaves the window <0>..<{}>", self.top)));
        }
        Ok(())
    }

    /// The action of `phi` on every element of level `phi.n()`.
    pub fn action_table(&self, phi: &PointedMap) -> Result<Arc<Vec<u32>>> {
        self.check_map(phi)?;
        if let Some(t) = self.cache.read().expect("cache lock").get(phi) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(self.compute_action(phi)?);
        self.cache.write().expect("cache lock").entry(phi.clone()).or_insert_with(|| Arc::clone(&table));
        Ok(table)
    }

    /// `X(phi)(elem)`.
    pub fn act(&self, phi: &PointedMap, elem: usize) -> Result<usize> {
        let table = self.action_table(phi)?;
        table
            .get(elem)
            .map(|&v| v as usize)
            .ok_or(Error::IndexOutOfRange { what: "window element", index: elem, limit: table.len() })
    }

    fn compute_action(&self, phi: &PointedMap) -> Result<Vec<u32>> {
        let (n, m) = (phi.n(), phi.m());
        match &self.source {
            Source::Point => Ok(vec![0]),
            Source::Dynk { levels, index } => levels[n]
                .iter()
                .map(|x| {
                    let image = dynkin::dynk_map(phi, x)?;
                    Ok(index[m][image.family()])
                })
                .collect(),
            Source::Part { levels, index } => levels[n]
                .iter()
                .map(|p| Ok(index[m][&partitions::part_map(phi, p)?]))
                .collect(),
            Source::HHat { levels, index, .. } => {
                let pullback = plasma::powerset_contravariant_map(phi)?;
                Ok(levels[n].iter().map(|f| index[m][&f.after(&pullback)]).collect())
            }
            Source::Wedge { parts, offsets } => {
                let mut out = vec![0u32; self.sizes[n]];
                for (j, part) in parts.iter().enumerate() {
                    let inner = part.action_table(phi)?;
                    for (i, &v) in inner.iter().enumerate().skip(1) {
                        out[offsets[n][j] as usize + i] = if v == 0 { 0 } else { offsets[m][j] + v };
                    }
                }
                Ok(out)
            }
        }
    }

    /// Digits `X(χ_A)(e)` for every `A ⊆ {1..n}` in graded-lexicographic order.
    /// For `ĤK` and `Dynk` these are the 0/1 tuples of the simplex.
    /// `χ_∅` factors through `<0>`, so its digit is 0 even when `<1>` is
    /// outside the window.
    pub fn simplex_digits(&self, level: usize, idx: usize) -> Result<Vec<usize>> {
        graded_lex_order(level)
            .into_iter()
            .map(|a| if a == 0 { Ok(0) } else { self.act(&characteristic_map(level, a), idx) })
            .collect()
    }
}

pub(crate) fn digit(d: usize) -> char {
    std::char::from_digit(d as u32, 36).unwrap_or('?')
}

/// `Dynk` on `<0>..<N>`.
pub fn dynk_window(top: usize) -> Result<GammaSetWindow> {
    if top > DYNK_WINDOW_MAX {
        return Err(Error::CeilingExceeded { what: "Dynkin window", n: top, max: DYNK_WINDOW_MAX });
    }
    let levels = (0..=top)
        .map(|n| Ok(basepoint_first(dynkin::enumerate_dynkin(n)?, &DynkinSystem::power_set(n)?)))
        .collect::<Result<Vec<_>>>()?;
    let index = levels
        .iter()
        .map(|lvl| lvl.iter().enumerate().map(|(i, x)| (x.family().clone(), i as u32)).collect())
        .collect();
    let sizes = levels.iter().map(Vec::len).collect();
    Ok(GammaSetWindow::from_source(top, sizes, Source::Dynk { levels, index }))
}

/// `Part` on `<0>..<N>`.
pub fn part_window(top: usize) -> Result<GammaSetWindow> {
    if top > PART_WINDOW_MAX {
        return Err(Error::CeilingExceeded { what: "partition window", n: top, max: PART_WINDOW_MAX });
    }
    let levels = (0..=top)
        .map(|n| Ok(basepoint_first(partitions::enumerate_partitions(n)?, &Partition::singletons(n))))
        .collect::<Result<Vec<_>>>()?;
    let index = levels.iter().map(|lvl| index_of(lvl)).collect();
    let sizes = levels.iter().map(Vec::len).collect();
    Ok(GammaSetWindow::from_source(top, sizes, Source::Part { levels, index }))
}

/// `Ĥ(M)`: level `n` is `Plas(𝒫(n), M)`, acted on by precomposition with
/// `φ⁻¹`. The basepoint is the constant-identity morphism.
pub fn h_hat(m: &Plasma, top: usize, opts: EnumOptions) -> Result<GammaSetWindow> {
    let levels = (0..=top)
        .map(|n| {
            let p = plasma::powerset_plasma(n)?;
            let all = plasma::enumerate_morphisms(&p, m, opts)?;
            let zero = PlasmaMorphism::new(vec![m.identity() as u8; 1 << n]);
            Ok(basepoint_first(all, &zero))
        })
        .collect::<Result<Vec<_>>>()?;
    let index = levels.iter().map(|lvl| index_of(lvl)).collect();
    let sizes = levels.iter().map(Vec::len).collect();
    Ok(GammaSetWindow::from_source(top, sizes, Source::HHat { plasma: m.clone(), levels, index }))
}

/// Levelwise wedge of pointed sets, acting summand by summand.
pub fn wedge_window(x: GammaSetWindow, y: GammaSetWindow) -> Result<GammaSetWindow> {
    wedge_many(vec![x, y])
}

/// The wedge of several windows with the same top level.
pub fn wedge_many(parts: Vec<GammaSetWindow>) -> Result<GammaSetWindow> {
    let top = parts.first().ok_or_else(|| Error::LevelMismatch("empty wedge".into()))?.top;
    if let Some(bad) = parts.iter().find(|p| p.top != top) {
        return Err(Error::LevelMismatch(format!("wedge of windows with tops {top} and {}", bad.top)));
    }
    let mut offsets = Vec::with_capacity(top + 1);
    let mut sizes = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut acc = 0u32;
        let mut row = Vec::with_capacity(parts.len());
        for p in &parts {
            row.push(acc);
            acc += p.level_size(n) as u32 - 1;
        }
        offsets.push(row);
        sizes.push(acc as usize + 1);
    }
    Ok(GammaSetWindow::from_source(top, sizes, Source::Wedge { parts, offsets }))
}

/// A failed law, with enough data to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: String,
    pub maps: Vec<PointedMap>,
    pub element: usize,
    pub detail: String,
}

fn random_map(rng: &mut ChaCha8Rng, n: usize, m: usize) -> PointedMap {
    let table = std::iter::once(0).chain((0..n).map(|_| rng.gen_range(0..=m as u8))).collect();
    PointedMap::new(n, m, table).expect("random table is pointed")
}

/// Pointed maps `<a> -> <b>` for every `a, b <= max`.
pub fn maps_up_to(max: usize) -> Vec<PointedMap> {
    (0..=max)
        .flat_map(|a| (0..=max).flat_map(move |b| enumerate_pointed_maps(a, b)))
        .collect()
}

/// `count` composable pairs `<a> -> <b> -> <c>` with `a, b, c` drawn from
/// `0..=top` and at least one equal to `top`, from a fixed seed.
pub fn sample_composable_pairs(top: usize, count: usize, seed: u64) -> Vec<(PointedMap, PointedMap)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut dims = [rng.gen_range(0..=top), rng.gen_range(0..=top), rng.gen_range(0..=top)];
            dims[rng.gen_range(0..3)] = top;
            let f = random_map(&mut rng, dims[0], dims[1]);
            let g = random_map(&mut rng, dims[1], dims[2]);
            (f, g)
        })
        .collect()
}

/// `count` maps `<n> -> <m>` with `n = m = top`, from a fixed seed.
pub fn sample_maps(top: usize, count: usize, seed: u64) -> Vec<PointedMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_map(&mut rng, top, top)).collect()
}

impl GammaSetWindow {
    /// Checks identities act trivially, basepoints are fixed, and
    /// `X(g∘f) = X(g)∘X(f)` for every composable pair with levels `<= max`.
    /// Returns the number of law instances checked.
    pub fn functoriality_audit(&self, max: usize) -> std::result::Result<u64, Counterexample> {
        let max = max.min(self.top);
        let pairs: Vec<(usize, usize, usize)> = (0..=max)
            .flat_map(|a| (0..=max).flat_map(move |b| (0..=max).map(move |c| (a, b, c))))
            .collect();
        let mut checked = self.identity_and_basepoint_audit(max)?;
        let counts = pairs
            .par_iter()
            .map(|&(a, b, c)| {
                let gs = enumerate_pointed_maps(b, c);
                let mut local = 0u64;
                for f in enumerate_pointed_maps(a, b) {
                    for g in &gs {
                        local += self.check_composition(&f, g)?;
                    }
                }
                Ok(local)
            })
            .collect::<std::result::Result<Vec<u64>, Counterexample>>()?;
        checked += counts.iter().sum::<u64>();
        Ok(checked)
    }

    /// Composition law on seeded random pairs at level `top`.
    pub fn sampled_functoriality(&self, count: usize, seed: u64) -> std::result::Result<u64, Counterexample> {
        let pairs = sample_composable_pairs(self.top, count, seed);
        let counts = pairs
            .par_iter()
            .map(|(f, g)| self.check_composition(f, g))
            .collect::<std::result::Result<Vec<u64>, Counterexample>>()?;
        Ok(counts.iter().sum())
    }

    fn identity_and_basepoint_audit(&self, max: usize) -> std::result::Result<u64, Counterexample> {
        let mut checked = 0;
        for n in 0..=max {
            let id = PointedMap::identity(n);
            let table = self.action_table(&id).map_err(|e| self.internal(&e))?;
            if let Some(bad) = (0..table.len()).find(|&i| table[i] as usize != i) {
                return Err(Counterexample {
                    law: "identity".into(),
                    maps: vec![id],
                    element: bad,
                    detail: format!("identity sends {bad} to {}", table[bad]),
                });
            }
            checked += table.len() as u64;
        }
        for phi in maps_up_to(max) {
            let table = self.action_table(&phi).map_err(|e| self.internal(&e))?;
            if table[0] != 0 {
                return Err(Counterexample {
                    law: "basepoint".into(),
                    maps: vec![phi],
                    element: 0,
                    detail: format!("basepoint sent to {}", table[0]),
                });
            }
            checked += 1;
        }
        Ok(checked)
    }

    fn check_composition(&self, f: &PointedMap, g: &PointedMap) -> std::result::Result<u64, Counterexample> {
        let gf = compose(g, f).expect("pair is composable");
        let tf = self.action_table(f).map_err(|e| self.internal(&e))?;
        let tg = self.action_table(g).map_err(|e| self.internal(&e))?;
        let tgf = self.action_table(&gf).map_err(|e| self.internal(&e))?;
        for (e, &fe) in tf.iter().enumerate() {
            if tgf[e] != tg[fe as usize] {
                return Err(Counterexample {
                    law: "composition".into(),
                    maps: vec![f.clone(), g.clone()],
                    element: e,
                    detail: format!("X(g∘f)(e) = {} but X(g)(X(f)(e)) = {}", tgf[e], tg[fe as usize]),
                });
            }
        }
        Ok(tf.len() as u64)
    }

    fn internal(&self, e: &Error) -> Counterexample {
        Counterexample { law: "evaluation".into(), maps: vec![], element: 0, detail: e.to_string() }
    }
}

/// Projections and fold `<2> -> <1>` used to read off a binary operation.
fn segal_maps() -> (PointedMap, PointedMap, PointedMap) {
    let first = PointedMap::new(2, 1, vec![0, 1, 0]).expect("valid");
    let second = PointedMap::new(2, 1, vec![0, 0, 1]).expect("valid");
    (first, second, PointedMap::fold(2))
}

/// `τ≤2 X`: carrier `X(<1>)`, identity its basepoint, and
/// `x ⋆ y = { X(μ)(z) : z ∈ X(<2>), X(π₁)(z) = x, X(π₂)(z) = y }`.
pub fn truncate_to_plasma(x: &GammaSetWindow) -> Result<Plasma> {
    if x.top < 2 {
        return Err(Error::LevelMismatch(format!("truncation needs levels up to 2, window stops at {}", x.top)));
    }
    let (p1, p2, mu) = segal_maps();
    let (t1, t2, tm) = (x.action_table(&p1)?, x.action_table(&p2)?, x.action_table(&mu)?);
    let size = x.level_size(1);
    if size > plasma::MAX_CARRIER {
        return Err(Error::CeilingExceeded { what: "truncated carrier", n: size, max: plasma::MAX_CARRIER });
    }
    let mut table = vec![vec![0u128; size]; size];
    for z in 0..x.level_size(2) {
        table[t1[z] as usize][t2[z] as usize] |= 1 << tm[z];
    }
    Plasma::new(size, 0, table)
}

/// The unit `X(<n>) → Plas(𝒫(n), τ≤2 X)`, `e ↦ (A ↦ X(χ_A)(e))`.
pub fn unit_component(x: &GammaSetWindow, n: usize) -> Result<Vec<PlasmaMorphism>> {
    if n > x.top {
        return Err(Error::LevelMismatch(format!("level {n} beyond window top {}", x.top)));
    }
    let tables = (0..1u32 << n)
        .map(|a| x.action_table(&characteristic_map(n, a)))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..x.level_size(n))
        .map(|e| PlasmaMorphism::new(tables.iter().map(|t| t[e] as u8).collect()))
        .collect())
}

/// How the unit component at one level compares with the full hom-set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitAnalysis {
    pub level: usize,
    pub source_size: usize,
    pub hom_size: usize,
    pub image_size: usize,
    pub all_morphisms: bool,
    pub injective: bool,
    pub surjective: bool,
    /// Morphisms not hit by the unit, lexicographically sorted.
    pub missing: Vec<PlasmaMorphism>,
}

pub fn unit_analysis(x: &GammaSetWindow, n: usize, opts: EnumOptions) -> Result<UnitAnalysis> {
    let target = truncate_to_plasma(x)?;
    let domain = plasma::powerset_plasma(n)?;
    let unit = unit_component(x, n)?;
    let hom = plasma::enumerate_morphisms(&domain, &target, opts)?;
    let all_morphisms = unit.iter().all(|f| plasma::is_plasma_morphism(f.table(), &domain, &target));
    let mut image = unit.clone();
    image.sort();
    image.dedup();
    let missing: Vec<PlasmaMorphism> = hom.iter().filter(|f| image.binary_search(f).is_err()).cloned().collect();
    Ok(UnitAnalysis {
        level: n,
        source_size: unit.len(),
        hom_size: hom.len(),
        image_size: image.len(),
        all_morphisms,
        injective: image.len() == unit.len(),
        surjective: missing.is_empty() && image.len() == hom.len(),
        missing,
    })
}

/// Per-level component functions between two windows with the same top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalMap {
    pub components: Vec<Vec<u32>>,
}

impl NaturalMap {
    pub fn is_levelwise_bijective(&self, target: &GammaSetWindow) -> bool {
        self.components.iter().enumerate().all(|(n, comp)| {
            let mut seen = vec![false; target.level_size(n)];
            comp.len() == target.level_size(n)
                && comp.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
        })
    }

    pub fn is_pointed(&self) -> bool {
        self.components.iter().all(|c| c[0] == 0)
    }

    /// Checks `η_m ∘ X(φ) = Y(φ) ∘ η_n` for each map; returns squares checked.
    pub fn check_naturality(
        &self,
        source: &GammaSetWindow,
        target: &GammaSetWindow,
        maps: &[PointedMap],
    ) -> std::result::Result<u64, Counterexample> {
        let counts = maps
            .par_iter()
            .map(|phi| {
                let err = |e: Error| Counterexample { law: "evaluation".into(), maps: vec![phi.clone()], element: 0, detail: e.to_string() };
                let ts = source.action_table(phi).map_err(err)?;
                let tt = target.action_table(phi).map_err(err)?;
                let (n, m) = (phi.n(), phi.m());
                for (e, &xe) in ts.iter().enumerate() {
                    let lhs = self.components[m][xe as usize];
                    let rhs = tt[self.components[n][e] as usize];
                    if lhs != rhs {
                        return Err(Counterexample {
                            law: "naturality".into(),
                            maps: vec![phi.clone()],
                            element: e,
                            detail: format!("η(X(φ)(e)) = {lhs} but Y(φ)(η(e)) = {rhs}"),
                        });
                    }
                }
                Ok(ts.len() as u64)
            })
            .collect::<std::result::Result<Vec<u64>, Counterexample>>()?;
        Ok(counts.iter().sum())
    }
}

/// The components of `Φ∘κ: ĤK → Dynk` between two prebuilt windows.
pub fn phi_kappa_components(hh: &GammaSetWindow, dk: &GammaSetWindow) -> Result<NaturalMap> {
    if hh.top != dk.top {
        return Err(Error::LevelMismatch("Φ∘κ between windows of different tops".into()));
    }
    let components = (0..=hh.top)
        .map(|n| {
            (0..hh.level_size(n))
                .map(|i| {
                    let f = hh.morphism(n, i).ok_or_else(|| Error::LevelMismatch("source is not an Ĥ window".into()))?;
                    let system = dynkin::phi(&dynkin::kappa(f, n)?)?;
                    let idx = dk
                        .dynkin_index(&system)
                        .ok_or_else(|| Error::LevelMismatch("target is not a Dynkin window".into()))?;
                    Ok(idx as u32)
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NaturalMap { components })
}

/// `Φ∘κ` as a map `ĤK → Dynk` on `<0>..<N>`, returned with both windows.
pub fn phi_natural_iso(top: usize) -> Result<(GammaSetWindow, GammaSetWindow, NaturalMap)> {
    if top > PHI_ISO_MAX {
        return Err(Error::CeilingExceeded { what: "Φ natural isomorphism window", n: top, max: PHI_ISO_MAX });
    }
    let hh = h_hat(&plasma::krasner(), top, EnumOptions::default())?;
    let dk = dynk_window(top)?;
    let eta = phi_kappa_components(&hh, &dk)?;
    Ok((hh, dk, eta))
}

/// Components `Ĥ(∨ₖK) → ∨ₖ Dynk`: factor each morphism through its summand,
/// collapse it to `K`, apply `Φ∘κ`, and land in that summand of the wedge.
pub fn projective_components(hk: &GammaSetWindow, wedge: &GammaSetWindow, k: usize) -> Result<NaturalMap> {
    let components = (0..=hk.top)
        .map(|n| {
            (0..hk.level_size(n))
                .map(|i| {
                    let f = hk.morphism(n, i).ok_or_else(|| Error::LevelMismatch("source is not an Ĥ window".into()))?;
                    match plasma::factor_wedge_morphism(f, n, k)? {
                        plasma::WedgeFactor::Zero => Ok(0),
                        plasma::WedgeFactor::Summand(j) => {
                            let g = plasma::project_to_krasner(f);
                            let system = dynkin::phi(&dynkin::kappa(&g, n)?)?;
                            let part = match &wedge.source {
                                Source::Wedge { parts, .. } => &parts[j - 1],
                                _ => return Err(Error::LevelMismatch("target is not a wedge".into())),
                            };
                            let inner = part
                                .dynkin_index(&system)
                                .ok_or_else(|| Error::LevelMismatch("summand is not a Dynkin window".into()))?;
                            wedge
                                .wedge_index(n, j, inner)
                                .map(|v| v as u32)
                                .ok_or_else(|| Error::LevelMismatch("summand index out of range".into()))
                        }
                    }
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NaturalMap { components })
}
