use proptest::prelude::*;

use krasner_core::deloop::SimplexTuple;
use krasner_core::descriptor::parse_plasma;
use krasner_core::dynkin;
use krasner_core::finset::{compose, graded_lex_order, PointedMap, SetFamily};
use krasner_core::geometry::{self, DiscreteGeometry};
use krasner_core::partitions::{self, Partition};
use krasner_core::plasma::{self, Plasma, PlasmaMorphism};

fn map_between(n: usize, m: usize) -> impl Strategy<Value = PointedMap> {
    proptest::collection::vec(0..=m as u8, n).prop_map(move |t| {
        let table = std::iter::once(0).chain(t).collect();
        PointedMap::new(n, m, table).unwrap()
    })
}

fn composable_triple(max: usize) -> impl Strategy<Value = (PointedMap, PointedMap, PointedMap)> {
    (0..=max, 0..=max, 0..=max, 0..=max)
        .prop_flat_map(|(a, b, c, d)| (map_between(a, b), map_between(b, c), map_between(c, d)))
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=n, n + 1).prop_map(|raw| {
        // restricted growth: each label at most one more than the running max
        let mut labels = Vec::with_capacity(raw.len());
        let mut max = 0;
        for r in raw {
            let l = r.min(max) + 1;
            max = max.max(l);
            labels.push(l);
        }
        Partition::from_labels(&labels).unwrap()
    })
}

/// `∨ₖK` with its non-identity elements permuted and the identity moved.
fn shuffled_wedge(k: usize, perm: &[usize]) -> (Plasma, Vec<usize>) {
    let q = plasma::wedge_of_krasner(k).unwrap();
    let size = k + 1;
    let relabel: Vec<usize> = perm.to_vec();
    let mut table = vec![vec![0u128; size]; size];
    for x in 0..size {
        for y in 0..size {
            let image = (0..size).filter(|&z| q.op(x, y) >> z & 1 == 1).fold(0u128, |acc, z| acc | 1 << relabel[z]);
            table[relabel[x]][relabel[y]] = image;
        }
    }
    (Plasma::new(size, relabel[0], table).unwrap(), relabel)
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in composable_triple(5)) {
        let left = compose(&h, &compose(&g, &f).unwrap()).unwrap();
        let right = compose(&compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_are_neutral(f in (0..=6usize, 0..=6usize).prop_flat_map(|(n, m)| map_between(n, m))) {
        prop_assert_eq!(&compose(&PointedMap::identity(f.m()), &f).unwrap(), &f);
        prop_assert_eq!(&compose(&f, &PointedMap::identity(f.n())).unwrap(), &f);
    }

    #[test]
    fn preimages_are_contravariant((f, g, _) in composable_triple(5), mask in any::<u32>()) {
        let a = mask & ((1 << g.m()) - 1);
        let gf = compose(&g, &f).unwrap();
        prop_assert_eq!(gf.preimage_unpointed(a), f.preimage_unpointed(g.preimage_unpointed(a)));
    }

    #[test]
    fn pointed_maps_round_trip_through_json(f in (0..=6usize, 0..=6usize).prop_flat_map(|(n, m)| map_between(n, m))) {
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<PointedMap>(&text).unwrap(), f);
    }

    #[test]
    fn families_round_trip_through_hex(n in 0..=5usize, pointed in any::<bool>(), seed in proptest::collection::vec(any::<u32>(), 0..20)) {
        let width = n + usize::from(pointed);
        let masks: Vec<u32> = seed.iter().map(|m| m & ((1u32 << width) - 1)).collect();
        let fam = SetFamily::from_masks(n, pointed, masks.iter().copied()).unwrap();
        let back = SetFamily::from_hex(n, pointed, &fam.to_hex()).unwrap();
        prop_assert_eq!(&back, &fam);
        for m in masks {
            prop_assert!(fam.contains(m));
        }
        let json = serde_json::to_string(&fam).unwrap();
        prop_assert_eq!(serde_json::from_str::<SetFamily>(&json).unwrap(), fam);
    }

    #[test]
    fn dynk_map_preserves_the_axioms(idx in 0usize..137, phi in (0..=5usize).prop_flat_map(|m| map_between(4, m))) {
        let y = &dynkin::enumerate_dynkin(4).unwrap()[idx];
        let image = dynkin::dynk_map(&phi, y).unwrap();
        prop_assert!(dynkin::validate_dynkin(image.family()));
        prop_assert_eq!(dynkin::phi(&dynkin::psi(&image).unwrap()).unwrap(), image);
    }

    #[test]
    fn kernels_round_trip(idx in 0usize..137) {
        let y = &dynkin::enumerate_dynkin(4).unwrap()[idx];
        let x = dynkin::psi(y).unwrap();
        let f = dynkin::kappa_inverse(&x);
        prop_assert!(plasma::is_plasma_morphism(f.table(), &plasma::powerset_plasma(4).unwrap(), &plasma::krasner()));
        prop_assert_eq!(dynkin::kappa(&f, 4).unwrap(), x);
    }

    #[test]
    fn partition_images_agree_with_pushouts(
        (p, phi) in (0..=6usize, 0..=6usize).prop_flat_map(|(n, m)| (partition_of(n), map_between(n, m)))
    ) {
        let image = partitions::part_map(&phi, &p).unwrap();
        prop_assert_eq!(&partitions::part_map_pushout(&phi, &p).unwrap(), &image);
        prop_assert!(partitions::satisfies_suction(&phi, &p, &image));
        let sigma = partitions::sigma_embedding(&p).unwrap();
        prop_assert!(dynkin::is_intersection_closed(&sigma));
        prop_assert_eq!(dynkin::atoms(&sigma).unwrap(), p);
    }

    #[test]
    fn partitions_round_trip_through_labels_and_json(p in (0..=8usize).prop_flat_map(partition_of)) {
        prop_assert_eq!(&Partition::from_labels(&p.labels()).unwrap(), &p);
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }

    #[test]
    fn shuffled_wedges_are_recognised(k in 1..=5usize, keys in proptest::collection::vec(any::<u32>(), 6)) {
        let mut perm: Vec<usize> = (0..=k).collect();
        perm.sort_by_key(|&i| (keys[i], i));
        let (shuffled, relabel) = shuffled_wedge(k, &perm);
        let wedge = plasma::wedge_of_krasner(k).unwrap();
        let iso = plasma::are_isomorphic(&wedge, &shuffled, 10).unwrap();
        prop_assert!(iso.is_some());
        let iso = iso.unwrap();
        prop_assert_eq!(iso[0] as usize, relabel[0]);
        prop_assert!(plasma::is_plasma_morphism(&iso, &wedge, &shuffled));
        prop_assert_eq!(shuffled.canonicalize(), wedge.canonicalize());
    }

    #[test]
    fn contravariant_powerset_maps_are_morphisms(phi in (0..=4usize, 0..=4usize).prop_flat_map(|(n, m)| map_between(n, m))) {
        let pullback = plasma::powerset_contravariant_map(&phi).unwrap();
        let src = plasma::powerset_plasma(phi.m()).unwrap();
        let dst = plasma::powerset_plasma(phi.n()).unwrap();
        prop_assert!(plasma::is_plasma_morphism(pullback.table(), &src, &dst));
    }

    #[test]
    fn parsers_never_panic(s in ".{0,40}") {
        let _ = parse_plasma(&s);
        let _ = SimplexTuple::parse(&s);
        let _ = SetFamily::from_hex(3, true, &s);
        let _ = serde_json::from_str::<Plasma>(&s);
        let _ = serde_json::from_str::<Partition>(&s);
        let _ = serde_json::from_str::<PointedMap>(&s);
    }

    #[test]
    fn tuples_parse_their_own_rendering(n in 0..=5usize, raw in proptest::collection::vec(0..=1u8, 32)) {
        let t = SimplexTuple::new(n, raw[..1 << n].to_vec()).unwrap();
        prop_assert_eq!(SimplexTuple::parse(&format!("({t})")).unwrap(), t);
    }
}

#[test]
fn graded_lex_order_for_three_points() {
    assert_eq!(graded_lex_order(3), vec![0, 1, 2, 4, 3, 5, 6, 7]);
    for n in 0..=6 {
        let order = graded_lex_order(n);
        assert_eq!(order.len(), 1 << n);
        assert!(order.windows(2).all(|w| w[0].count_ones() <= w[1].count_ones()));
    }
}

#[test]
fn pointed_closure_is_a_closure_on_nonempty_sets() {
    for n in 0..=5 {
        let c = geometry::closure_operator(&DiscreteGeometry::new(n).unwrap());
        let all = 1u32 << (n + 1);
        for a in 0..all {
            let ca = c.close_pointed(a);
            assert_eq!(c.close_pointed(ca), ca);
            if a != 0 {
                assert_eq!(ca & a, a);
                assert_eq!(ca & 1, 1);
            }
            for b in 0..all {
                if a & b == a {
                    assert_eq!(ca & c.close_pointed(b), ca);
                }
            }
        }
    }
}

#[test]
fn lines_are_symmetric_with_singleton_diagonal() {
    for n in 1..=6 {
        let g = DiscreteGeometry::new(n).unwrap();
        for x in 1..=n {
            assert_eq!(geometry::line_hyperop(&g, x, x).unwrap().elements(), vec![x]);
            for y in 1..=n {
                assert_eq!(geometry::line_hyperop(&g, x, y).unwrap(), geometry::line_hyperop(&g, y, x).unwrap());
                for z in 1..=n {
                    let distinct = [x, y, z].iter().collect::<std::collections::BTreeSet<_>>().len();
                    assert_eq!(g.collinear(x, y, z).unwrap(), distinct <= 2);
                }
            }
        }
    }
}

#[test]
fn mosaics_are_wedges_of_krasner() {
    for n in 0..=8 {
        let mosaic = geometry::mosaic_plasma(&DiscreteGeometry::new(n).unwrap()).unwrap();
        assert_eq!(mosaic, plasma::wedge_of_krasner(n).unwrap());
        for x in 1..=n {
            assert_eq!(mosaic.op(x, x), 1 | 1 << x);
            for y in (1..=n).filter(|&y| y != x) {
                assert_eq!(mosaic.op(x, y), 0);
            }
        }
        assert!(geometry::projective_isomorphism(n).unwrap().is_some());
    }
}

#[test]
fn prime_field_quotients() {
    let k = plasma::krasner();
    for p in [3, 5, 7, 11, 97] {
        assert!(plasma::are_isomorphic(&plasma::quotient_plasma_prime_field(p).unwrap(), &k, 10).unwrap().is_some(), "p = {p}");
    }
    let two = plasma::quotient_plasma_prime_field(2).unwrap();
    assert!(plasma::are_isomorphic(&two, &k, 10).unwrap().is_none());
    assert_eq!(two.op(1, 1), 0b01);
    for bad in [0, 1, 4, 9, 101] {
        assert!(plasma::quotient_plasma_prime_field(bad).is_err());
    }
}

#[test]
fn wedge_morphisms_factor_through_one_summand() {
    let q = plasma::wedge_of_krasner(3).unwrap();
    let p = plasma::powerset_plasma(3).unwrap();
    for f in plasma::enumerate_morphisms(&p, &q, Default::default()).unwrap() {
        let used: std::collections::BTreeSet<u8> = f.table().iter().copied().filter(|&v| v != 0).collect();
        match plasma::factor_wedge_morphism(&f, 3, 3).unwrap() {
            plasma::WedgeFactor::Zero => assert!(used.is_empty()),
            plasma::WedgeFactor::Summand(j) => assert_eq!(used, std::collections::BTreeSet::from([j as u8])),
        }
    }
    // a table using two summands is not a morphism
    let mixed = PlasmaMorphism::new(vec![0, 1, 2, 3, 0, 0, 0, 0]);
    assert!(plasma::factor_wedge_morphism(&mixed, 3, 3).is_err());
}
