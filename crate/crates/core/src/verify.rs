//! Claim checks producing machine-readable reports.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::deloop::{self, SimplexTuple, TriangleLabel};
use crate::descriptor;
use crate::dynkin::{self, DynkinSystem};
use crate::error::{Error, Result};
use crate::finset::{enumerate_pointed_maps, PointedMap};
use crate::gammaset::{self, Counterexample, GammaSetWindow, NaturalMap};
use crate::geometry;
use crate::partitions;
use crate::plasma::{self, EnumOptions, Plasma};

pub const SCHEMA: &str = "report-v1";
pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_SAMPLES: usize = 500;
const EXHAUSTIVE_LEVEL: usize = 3;
const DYNKIN_COUNTS: [usize; 6] = [1, 2, 5, 19, 137, 3708];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub claim: String,
    pub scope: Value,
    pub result: Verdict,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub details: Value,
    pub version: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.result == Verdict::Pass
    }
}

/// Outcome of a claim body: details on success, a counterexample and details on failure.
type Outcome = std::result::Result<Value, (Value, Value)>;

fn run(claim: &str, scope: Value, body: impl FnOnce() -> Result<Outcome>) -> Result<VerificationReport> {
    let start = Instant::now();
    let outcome = body()?;
    let (result, counterexample, details) = match outcome {
        Ok(details) => (Verdict::Pass, None, details),
        Err((cex, details)) => (Verdict::Fail, Some(cex), details),
    };
    Ok(VerificationReport {
        schema: SCHEMA.into(),
        claim: claim.into(),
        scope,
        result,
        elapsed_ms: start.elapsed().as_millis() as u64,
        counterexample,
        details,
        version: env!("CARGO_PKG_VERSION").into(),
    })
}

fn cex_value(c: &Counterexample) -> Value {
    serde_json::to_value(c).unwrap_or(Value::Null)
}

/// Dynkin enumeration engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Backtrack,
    OracleA,
    OracleB,
}

impl std::str::FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "backtrack" => Ok(Engine::Backtrack),
            "oracle-a" => Ok(Engine::OracleA),
            "oracle-b" => Ok(Engine::OracleB),
            other => Err(Error::Parse(format!("unknown engine {other:?}"))),
        }
    }
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Backtrack => "backtrack",
            Engine::OracleA => "oracle-a",
            Engine::OracleB => "oracle-b",
        }
    }
}

pub fn enumerate_dynkin_with(engine: Engine, n: usize, slow: bool) -> Result<Vec<DynkinSystem>> {
    match engine {
        Engine::Backtrack => dynkin::enumerate_dynkin(n),
        Engine::OracleA => dynkin::oracle_a(n),
        Engine::OracleB => dynkin::oracle_b(n, slow),
    }
}

pub fn count_dynkin_with(engine: Engine, n: usize, slow: bool) -> Result<u64> {
    match engine {
        Engine::Backtrack => dynkin::count_dynkin(n),
        _ => Ok(enumerate_dynkin_with(engine, n, slow)?.len() as u64),
    }
}

/// Builds a window by name: `krasner`, `dynkin`, `partitions`, `wedge-K`, or
/// `hhat:<plasma>` for any plasma descriptor.
pub fn build_window(source: &str, levels: usize, opts: EnumOptions) -> Result<GammaSetWindow> {
    match source {
        "krasner" => gammaset::h_hat(&plasma::krasner(), levels, opts),
        "dynkin" => gammaset::dynk_window(levels),
        "partitions" => gammaset::part_window(levels),
        _ => {
            if let Some(k) = source.strip_prefix("wedge-") {
                let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad wedge rank in {source:?}")))?;
                gammaset::h_hat(&plasma::wedge_of_krasner(k)?, levels, opts)
            } else if let Some(desc) = source.strip_prefix("hhat:") {
                gammaset::h_hat(&descriptor::parse_plasma(desc)?, levels, opts)
            } else {
                Err(Error::Parse(format!("unknown window source {source:?}")))
            }
        }
    }
}

/// Enumerated systems satisfy the axioms, and every available engine agrees.
pub fn verify_axioms(n: usize, slow: bool) -> Result<VerificationReport> {
    run("axioms", json!({ "n": n, "slow": slow }), || {
        let mut per_level = Vec::new();
        for level in 0..=n {
            let systems = dynkin::enumerate_dynkin(level)?;
            if let Some(bad) = systems.iter().find(|y| !dynkin::validate_dynkin(y.family())) {
                return Ok(Err((json!({ "level": level, "system": bad.family().to_hex() }), json!(per_level))));
            }
            for y in &systems {
                let x = dynkin::psi(y)?;
                if !dynkin::validate_kz(x.family()) {
                    return Ok(Err((json!({ "level": level, "kz": x.family().to_hex() }), json!(per_level))));
                }
            }
            let mut engines = vec!["backtrack"];
            let mut oracles = Vec::new();
            if level <= dynkin::ORACLE_A_MAX {
                oracles.push(Engine::OracleA);
            }
            if level <= dynkin::ORACLE_B_MAX || (slow && level == dynkin::ORACLE_B_MAX + 1) {
                oracles.push(Engine::OracleB);
            }
            for engine in oracles {
                let other = enumerate_dynkin_with(engine, level, slow)?;
                if other != systems {
                    let a: BTreeSet<_> = systems.iter().map(|y| y.family().to_hex()).collect();
                    let b: BTreeSet<_> = other.iter().map(|y| y.family().to_hex()).collect();
                    let cex = json!({
                        "level": level,
                        "engine": engine.name(),
                        "only_backtrack": a.difference(&b).collect::<Vec<_>>(),
                        "only_oracle": b.difference(&a).collect::<Vec<_>>(),
                    });
                    return Ok(Err((cex, json!(per_level))));
                }
                engines.push(engine.name());
            }
            per_level.push(json!({ "level": level, "count": systems.len(), "engines": engines }));
        }
        Ok(Ok(json!({ "levels": per_level })))
    })
}

/// `Ψ∘Φ = id`, `Φ∘Ψ = id`, `κ⁻¹∘κ = id`, and `Φ∘κ: Plas(𝒫(n),K) → Dynk(n)` bijective.
pub fn verify_bijections(n: usize) -> Result<VerificationReport> {
    run("bijections", json!({ "n": n }), || {
        if n > dynkin::ORACLE_B_MAX {
            return Err(Error::CeilingExceeded { what: "bijection check", n, max: dynkin::ORACLE_B_MAX });
        }
        let mut levels = Vec::new();
        for level in 0..=n {
            let kz = dynkin::enumerate_kz(level)?;
            for x in &kz {
                if dynkin::psi(&dynkin::phi(x)?)? != *x {
                    return Ok(Err((json!({ "level": level, "kz": x.family().to_hex(), "law": "psi(phi(x)) = x" }), json!(levels))));
                }
            }
            let systems = dynkin::enumerate_dynkin(level)?;
            for y in &systems {
                if dynkin::phi(&dynkin::psi(y)?)? != *y {
                    return Ok(Err((json!({ "level": level, "system": y.family().to_hex(), "law": "phi(psi(y)) = y" }), json!(levels))));
                }
            }
            let morphisms = plasma::enumerate_morphisms(&plasma::powerset_plasma(level)?, &plasma::krasner(), EnumOptions::default())?;
            let mut images = Vec::with_capacity(morphisms.len());
            for f in &morphisms {
                let x = dynkin::kappa(f, level)?;
                if dynkin::kappa_inverse(&x) != *f {
                    return Ok(Err((json!({ "level": level, "morphism": f.table(), "law": "kappa_inverse(kappa(f)) = f" }), json!(levels))));
                }
                images.push(dynkin::phi(&x)?);
            }
            images.sort();
            let injective = images.windows(2).all(|w| w[0] != w[1]);
            if !injective || images != systems {
                let cex = json!({ "level": level, "law": "phi . kappa bijective", "morphisms": morphisms.len(), "systems": systems.len() });
                return Ok(Err((cex, json!(levels))));
            }
            levels.push(json!({ "level": level, "kz": kz.len(), "dynkin": systems.len(), "morphisms": morphisms.len() }));
        }
        Ok(Ok(json!({ "levels": levels })))
    })
}

/// Maps used for a naturality or functoriality sweep: all maps between
/// levels `<= min(top, 3)`, plus seeded endomaps of `<4>` when `top >= 4`.
fn sweep_maps(top: usize, samples: usize, seed: u64) -> (Vec<PointedMap>, usize) {
    let mut maps = gammaset::maps_up_to(top.min(EXHAUSTIVE_LEVEL));
    let exhaustive = maps.len();
    if top > EXHAUSTIVE_LEVEL {
        maps.extend(gammaset::sample_maps(top, samples, seed));
    }
    (maps, exhaustive)
}

/// `Φ∘κ: ĤK → Dynk` is levelwise bijective and natural.
pub fn verify_naturality(n: usize, samples: usize, seed: u64) -> Result<VerificationReport> {
    run("naturality", json!({ "n": n, "samples": samples, "seed": seed }), || {
        let (hh, dk, eta) = gammaset::phi_natural_iso(n)?;
        let sizes = dk.level_sizes().to_vec();
        if !eta.is_levelwise_bijective(&dk) || !eta.is_pointed() {
            return Ok(Err((json!({ "law": "levelwise bijection" }), json!({ "sizes": sizes }))));
        }
        let (maps, exhaustive) = sweep_maps(n, samples, seed);
        match eta.check_naturality(&hh, &dk, &maps) {
            Ok(squares) => Ok(Ok(json!({
                "sizes": sizes,
                "exhaustive_maps": exhaustive,
                "sampled_maps": maps.len() - exhaustive,
                "squares": squares,
            }))),
            Err(c) => Ok(Err((cex_value(&c), json!({ "sizes": sizes })))),
        }
    })
}

/// `Σ∘Part(φ) = Dynk(φ)∘Σ`, the pushout route agrees with the direct image,
/// and suction holds, for every `φ: <a> -> <b>` with `a <= n`, `b <= m`.
pub fn verify_square(n: usize, m: usize) -> Result<VerificationReport> {
    run("square", json!({ "n": n, "m": m }), || {
        if n > gammaset::PART_WINDOW_MAX || m > gammaset::PART_WINDOW_MAX {
            return Err(Error::CeilingExceeded { what: "square check", n: n.max(m), max: gammaset::PART_WINDOW_MAX });
        }
        let mut instances = 0u64;
        for a in 0..=n {
            let parts = partitions::enumerate_partitions(a)?;
            let sigmas = parts.iter().map(partitions::sigma_embedding).collect::<Result<Vec<_>>>()?;
            for b in 0..=m {
                for phi in enumerate_pointed_maps(a, b) {
                    for (p, sp) in parts.iter().zip(&sigmas) {
                        let image = partitions::part_map(&phi, p)?;
                        let law = if partitions::sigma_embedding(&image)? != dynkin::dynk_map(&phi, sp)? {
                            Some("sigma . part = dynk . sigma")
                        } else if partitions::part_map_pushout(&phi, p)? != image {
                            Some("pushout route")
                        } else if !partitions::satisfies_suction(&phi, p, &image) {
                            Some("suction")
                        } else {
                            None
                        };
                        if let Some(law) = law {
                            let cex = json!({ "law": law, "map": phi, "partition": p });
                            return Ok(Err((cex, json!({ "instances": instances }))));
                        }
                        instances += 1;
                    }
                }
            }
        }
        Ok(Ok(json!({ "instances": instances })))
    })
}

/// The mosaic of the discrete geometry on `n` points is `∨ₙK`.
pub fn verify_projective_geometry(n: usize) -> Result<VerificationReport> {
    run("projective", json!({ "n": n }), || {
        let mosaic = geometry::mosaic_plasma(&geometry::DiscreteGeometry::new(n)?)?;
        let wedge = plasma::wedge_of_krasner(n)?;
        let iso = geometry::projective_isomorphism(n)?;
        let details = json!({ "bijection": iso, "equal_tables": mosaic == wedge });
        Ok(match iso {
            Some(_) => Ok(details),
            None => Err((json!({ "mosaic": mosaic, "wedge": wedge }), details)),
        })
    })
}

/// `Ĥ(∨ₖK) ≅ ∨ₖ Dynk` on levels `<= top`.
pub fn check_theorem_projective(top: usize, k: usize) -> Result<VerificationReport> {
    run("projective-module", json!({ "levels": top, "k": k }), || {
        if top > 3 || k > 3 {
            return Err(Error::CeilingExceeded { what: "projective module check", n: top.max(k), max: 3 });
        }
        let hk = gammaset::h_hat(&plasma::wedge_of_krasner(k)?, top, EnumOptions::default())?;
        let copies = (0..k.max(1)).map(|_| gammaset::dynk_window(top)).collect::<Result<Vec<_>>>()?;
        let wedge = if k == 0 { GammaSetWindow::point(top) } else { gammaset::wedge_many(copies)? };
        let expected: Vec<usize> = (0..=top).map(|n| k * (DYNKIN_COUNTS[n] - 1) + 1).collect();
        let details = json!({ "source_sizes": hk.level_sizes(), "target_sizes": wedge.level_sizes(), "expected_sizes": expected });
        if hk.level_sizes() != expected.as_slice() || wedge.level_sizes() != expected.as_slice() {
            return Ok(Err((json!({ "law": "wedge count identity" }), details)));
        }
        let eta = if k == 0 {
            NaturalMap { components: (0..=top).map(|_| vec![0]).collect() }
        } else {
            gammaset::projective_components(&hk, &wedge, k)?
        };
        if !eta.is_levelwise_bijective(&wedge) || !eta.is_pointed() {
            return Ok(Err((json!({ "law": "levelwise bijection" }), details)));
        }
        Ok(match eta.check_naturality(&hk, &wedge, &gammaset::maps_up_to(top)) {
            Ok(squares) => Ok(json!({ "sizes": expected, "squares": squares })),
            Err(c) => Err((cex_value(&c), details)),
        })
    })
}

/// All simplicial identities on the delooping of a named window.
pub fn verify_simplicial(source: &str, levels: usize, opts: EnumOptions) -> Result<VerificationReport> {
    run("simplicial", json!({ "source": source, "levels": levels }), || {
        let w = deloop::deloop(&build_window(source, levels, opts)?)?;
        let sizes = w.level_sizes();
        Ok(match w.check_identities() {
            Ok(instances) => Ok(json!({ "sizes": sizes, "instances": instances })),
            Err(v) => Err((serde_json::to_value(&v).unwrap_or(Value::Null), json!({ "sizes": sizes }))),
        })
    })
}

/// 3-simplices drawn with their faces `d₀..d₃`.
pub const FACE_GOLDENS: [(&str, &str); 8] = [
    ("00000000", "AAAA"),
    ("01011010", "BDDC"),
    ("01011111", "BEEC"),
    ("01111111", "EEEE"),
    ("01111001", "DECE"),
    ("00010111", "BBBA"),
    ("01111110", "EDDE"),
    ("01101111", "CCEE"),
];

pub const NON_PARTITION_TUPLES: [&str; 4] = ["01110001", "01111001", "01110101", "01110011"];

/// Level-2 tuples of the five triangle types.
pub const TRIANGLE_TUPLES: [(&str, TriangleLabel); 5] = [
    ("0000", TriangleLabel::A),
    ("0011", TriangleLabel::B),
    ("0101", TriangleLabel::C),
    ("0110", TriangleLabel::D),
    ("0111", TriangleLabel::E),
];

/// The explicit low-dimensional simplices of `B(ĤK)`: triangle types,
/// 3-simplex tuples and faces, partition tuples, and the associator relation.
pub fn verify_associators() -> Result<VerificationReport> {
    run("associators", json!({ "levels": 3 }), || {
        let w = deloop::deloop(&gammaset::h_hat(&plasma::krasner(), 3, EnumOptions::default())?)?;
        let fail = |cex: Value| Ok(Err((cex, Value::Null)));

        let mut triangles: Vec<(String, TriangleLabel)> = Vec::new();
        for (x, t) in w.levels[2].elements.iter().enumerate() {
            triangles.push((t.clone(), deloop::classify_2simplex(&w, x)?));
        }
        triangles.sort();
        let expected: Vec<(String, TriangleLabel)> = TRIANGLE_TUPLES.iter().map(|(t, l)| (t.to_string(), *l)).collect();
        if triangles != expected {
            return fail(json!({ "law": "triangle labels", "found": triangles }));
        }

        let tuples = deloop::simplex_tuples(3)?;
        let rendered: BTreeSet<String> = tuples.iter().map(|t| t.to_string()).collect();
        let from_window: BTreeSet<String> = w.levels[3].elements.iter().cloned().collect();
        if rendered.len() != 19 || rendered != from_window {
            return fail(json!({ "law": "19 tuples", "found": rendered.len() }));
        }
        for (tuple, faces) in FACE_GOLDENS {
            let x = match w.levels[3].elements.iter().position(|e| e == tuple) {
                Some(x) => x,
                None => return fail(json!({ "law": "listed tuple present", "tuple": tuple })),
            };
            let got: String = deloop::face_labels(&w, x)?.iter().map(|l| l.letter()).collect();
            if got != faces {
                return fail(json!({ "law": "3-simplex faces", "tuple": tuple, "expected": faces, "found": got }));
            }
        }
        for t in NON_PARTITION_TUPLES {
            if !rendered.contains(t) {
                return fail(json!({ "law": "listed tuple present", "tuple": t }));
            }
        }

        let part = deloop::deloop(&gammaset::part_window(3)?)?;
        let part_tuples: BTreeSet<String> = part.levels[3].elements.iter().cloned().collect();
        let missing: BTreeSet<String> = rendered.difference(&part_tuples).cloned().collect();
        let expected_missing: BTreeSet<String> = NON_PARTITION_TUPLES.iter().map(|s| s.to_string()).collect();
        if missing != expected_missing || !part_tuples.is_subset(&rendered) {
            return fail(json!({ "law": "non-partition tuples", "found": missing }));
        }

        for t in &tuples {
            if !deloop::check_associator(t)? {
                return fail(json!({ "law": "associator", "tuple": t }));
            }
        }
        let mut non_morphisms = 0;
        for bits in 0u32..256 {
            let t = SimplexTuple::new(3, (0..8).map(|i| (bits >> (7 - i) & 1) as u8).collect())?;
            let morphism = t.is_morphism();
            if morphism != rendered.contains(&t.to_string()) {
                return fail(json!({ "law": "tuple scan", "tuple": t }));
            }
            non_morphisms += usize::from(!morphism);
        }
        Ok(Ok(json!({
            "triangles": triangles.iter().map(|(t, l)| format!("{t}:{l}")).collect::<Vec<_>>(),
            "tuples": rendered,
            "non_partition": missing,
            "non_morphism_tuples": non_morphisms,
        })))
    })
}

/// `τ≤2 Ĥ M ≅ M` for small plasmas, and `τ≤2` of the Dynkin and partition
/// windows is `K`.
pub fn verify_truncation() -> Result<VerificationReport> {
    run("truncation", json!({}), || {
        let cases: Vec<(&str, Plasma)> = vec![
            ("krasner", plasma::krasner()),
            ("wedge:2", plasma::wedge_of_krasner(2)?),
            ("powerset:1", plasma::powerset_plasma(1)?),
            ("powerset:2", plasma::powerset_plasma(2)?),
            ("free-point", plasma::free_plasma_on_point()),
        ];
        let mut checked = Vec::new();
        for (name, m) in cases {
            let t = gammaset::truncate_to_plasma(&gammaset::h_hat(&m, 2, EnumOptions::default())?)?;
            if plasma::are_isomorphic(&t, &m, plasma::DEFAULT_ISO_CEILING)?.is_none() {
                return Ok(Err((json!({ "plasma": name, "truncation": t }), json!(checked))));
            }
            checked.push(name.to_string());
        }
        for (name, w) in [("dynkin", gammaset::dynk_window(2)?), ("partitions", gammaset::part_window(2)?)] {
            let t = gammaset::truncate_to_plasma(&w)?;
            if plasma::are_isomorphic(&t, &plasma::krasner(), plasma::DEFAULT_ISO_CEILING)?.is_none() {
                return Ok(Err((json!({ "window": name, "truncation": t }), json!(checked))));
            }
            checked.push(format!("window:{name}"));
        }
        Ok(Ok(json!({ "checked": checked })))
    })
}

/// The unit `X → Ĥτ≤2 X` level by level. For `dynkin` and `krasner` it must be
/// bijective; for `partitions` injective, and not surjective from level 3 on,
/// with the level-3 cokernel exactly the non-intersection-closed systems.
pub fn verify_unit(module: &str, n: usize, opts: EnumOptions) -> Result<VerificationReport> {
    run("unit", json!({ "module": module, "n": n }), || {
        let x = build_window(module, n, opts)?;
        if n < 2 {
            return Err(Error::LevelMismatch("unit check needs levels up to 2".into()));
        }
        let target = gammaset::truncate_to_plasma(&x)?;
        let hx = gammaset::h_hat(&target, n, opts)?;
        let mut levels = Vec::new();
        let mut components = Vec::new();
        for level in 0..=n {
            let ua = gammaset::unit_analysis(&x, level, opts)?;
            let expect_surjective = module != "partitions" || level < 3;
            let ok = ua.all_morphisms && ua.injective && ua.surjective == expect_surjective;
            let summary = json!({
                "level": level,
                "image_size": ua.image_size,
                "hom_size": ua.hom_size,
                "image": format!("{}/{}", ua.image_size, ua.hom_size),
                "injective": ua.injective,
                "surjective": ua.surjective,
            });
            if !ok {
                return Ok(Err((json!({ "law": "unit shape", "level": summary }), json!(levels))));
            }
            if module == "partitions" && level == 3 && !cokernel_is_non_intersection_closed(&ua.missing)? {
                let missing: Vec<String> =
                    ua.missing.iter().map(|f| SimplexTuple::from_morphism(3, f).map(|t| t.to_string())).collect::<Result<_>>()?;
                return Ok(Err((json!({ "law": "cokernel", "missing": missing }), json!(levels))));
            }
            levels.push(summary);
            let comp = gammaset::unit_component(&x, level)?
                .iter()
                .map(|f| hx.morphism_index(level, f).map(|i| i as u32).ok_or_else(|| Error::NotAMorphism("unit component".into())))
                .collect::<Result<Vec<u32>>>()?;
            components.push(comp);
        }
        let eta = NaturalMap { components };
        Ok(match eta.check_naturality(&x, &hx, &gammaset::maps_up_to(n.min(EXHAUSTIVE_LEVEL))) {
            Ok(squares) => Ok(json!({ "levels": levels, "naturality_squares": squares })),
            Err(c) => Err((cex_value(&c), json!(levels))),
        })
    })
}

fn cokernel_is_non_intersection_closed(missing: &[plasma::PlasmaMorphism]) -> Result<bool> {
    let mut images = missing
        .iter()
        .map(|f| dynkin::phi(&dynkin::kappa(f, 3)?))
        .collect::<Result<Vec<_>>>()?;
    images.sort();
    let expected: Vec<DynkinSystem> =
        dynkin::enumerate_dynkin(3)?.into_iter().filter(|y| !dynkin::is_intersection_closed(y)).collect();
    Ok(images == expected)
}

/// Identities, basepoints and composition on a named window.
pub fn verify_functoriality(source: &str, levels: usize, samples: usize, seed: u64, opts: EnumOptions) -> Result<VerificationReport> {
    run("functoriality", json!({ "source": source, "levels": levels, "samples": samples, "seed": seed }), || {
        let x = build_window(source, levels, opts)?;
        let exhaustive = match x.functoriality_audit(levels.min(EXHAUSTIVE_LEVEL)) {
            Ok(n) => n,
            Err(c) => return Ok(Err((cex_value(&c), Value::Null))),
        };
        let sampled = if levels > EXHAUSTIVE_LEVEL {
            match x.sampled_functoriality(samples, seed) {
                Ok(n) => n,
                Err(c) => return Ok(Err((cex_value(&c), json!({ "exhaustive_instances": exhaustive })))),
            }
        } else {
            0
        };
        Ok(Ok(json!({ "sizes": x.level_sizes(), "exhaustive_instances": exhaustive, "sampled_instances": sampled })))
    })
}

/// `𝔽_p / 𝔽_p^×` is `K` exactly for odd `p`.
pub fn verify_quotient(primes: &[u64]) -> Result<VerificationReport> {
    run("quotient", json!({ "primes": primes }), || {
        let mut rows = Vec::new();
        for &p in primes {
            let q = plasma::quotient_plasma_prime_field(p)?;
            let iso = plasma::are_isomorphic(&q, &plasma::krasner(), plasma::DEFAULT_ISO_CEILING)?.is_some();
            let row = json!({ "p": p, "isomorphic_to_krasner": iso });
            if iso != (p != 2) {
                return Ok(Err((row, json!(rows))));
            }
            rows.push(row);
        }
        Ok(Ok(json!(rows)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_reports_pass() {
        assert!(verify_axioms(3, false).unwrap().passed());
        assert!(verify_bijections(3).unwrap().passed());
        assert!(verify_naturality(2, 10, 1).unwrap().passed());
        assert!(verify_square(2, 2).unwrap().passed());
        assert!(verify_projective_geometry(3).unwrap().passed());
        assert!(check_theorem_projective(2, 2).unwrap().passed());
        assert!(verify_simplicial("partitions", 3, EnumOptions::default()).unwrap().passed());
        assert!(verify_truncation().unwrap().passed());
        assert!(verify_quotient(&[2, 3, 5, 7]).unwrap().passed());
    }

    #[test]
    fn report_shape() {
        let r = verify_quotient(&[3]).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["schema"], "report-v1");
        assert_eq!(v["result"], "pass");
        assert!(v.get("counterexample").is_none());
        let back: VerificationReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn unknown_sources() {
        assert!(build_window("nope", 2, EnumOptions::default()).is_err());
        assert_eq!(build_window("wedge-2", 2, EnumOptions::default()).unwrap().level_size(2), 9);
        assert!("oracle-c".parse::<Engine>().is_err());
    }
}
