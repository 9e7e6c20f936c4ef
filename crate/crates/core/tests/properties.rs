//! Algebraic laws on random instances. Instances come from seeded samplers, so a
//! failing case shrinks to a small seed that reproduces it.

use fatdelta::bicat::{bicat_to_fair2, canonical_unit_iso, fair2_to_bicat, validate_bicategory, PseudoSection};
use fatdelta::fairset::{evaluate_map, fair_nerve, segal_bijection, theta, validate_fair_set};
use fatdelta::fairtwo::validate_fair_two;
use fatdelta::fat::{
    compose_fat, dotsum, enum_hom_fat, is_vertical, project, project_map, recompose, vertical_decompose,
    ColouredOrdinal, FatMap,
};
use fatdelta::fincat::{
    binary_coproduct, binary_product, codiscrete, equimorphism_report, permuted, terminal, FinFunctor,
};
use fatdelta::gen::Sampler;
use fatdelta::ordinal::{compose_delta, enum_hom_delta, epi_mono_factor, DeltaMap, Ordinal};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn coloured() -> impl Strategy<Value = ColouredOrdinal> {
    prop::collection::vec(any::<bool>(), 0..6).prop_map(ColouredOrdinal::new)
}

/// A random fat map out of `k`, or `None` when the chosen target admits none.
fn fat_from(k: &ColouredOrdinal, l: &ColouredOrdinal, pick: usize) -> Option<FatMap> {
    let maps = enum_hom_fat(k, l);
    (!maps.is_empty()).then(|| maps[pick % maps.len()].clone())
}

fn delta_map() -> impl Strategy<Value = DeltaMap> {
    (0usize..5, 0usize..5, any::<usize>()).prop_map(|(m, n, pick)| {
        let maps = enum_hom_delta(Ordinal(m), Ordinal(n));
        maps[pick % maps.len()].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coloured_text_round_trips(k in coloured()) {
        let back: ColouredOrdinal = k.to_string().parse().unwrap();
        prop_assert_eq!(back, k);
    }

    #[test]
    fn map_text_round_trips(f in delta_map()) {
        let back: DeltaMap = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn epi_mono_factors_recompose(f in delta_map()) {
        let fac = epi_mono_factor(&f);
        prop_assert!(fac.epi.is_epi() && fac.mono.is_mono());
        prop_assert_eq!(compose_delta(&fac.epi, &fac.mono).unwrap(), f);
    }

    #[test]
    fn dotsum_is_associative_and_projects(a in coloured(), b in coloured(), c in coloured()) {
        prop_assert_eq!(dotsum(&dotsum(&a, &b), &c), dotsum(&a, &dotsum(&b, &c)));
        prop_assert_eq!(project(&dotsum(&a, &b)).0, project(&a).0 + project(&b).0);
    }

    #[test]
    fn fat_composition_is_associative_and_projects(
        k in coloured(), l in coloured(), m in coloured(), n in coloured(),
        p in any::<usize>(), q in any::<usize>(), r in any::<usize>(),
    ) {
        let (Some(f), Some(g), Some(h)) = (fat_from(&k, &l, p), fat_from(&l, &m, q), fat_from(&m, &n, r)) else {
            return Ok(());
        };
        let fg = compose_fat(&f, &g).unwrap();
        prop_assert_eq!(compose_fat(&fg, &h).unwrap(), compose_fat(&f, &compose_fat(&g, &h).unwrap()).unwrap());
        let projected = compose_delta(&project_map(f.as_tmap()), &project_map(g.as_tmap())).unwrap();
        prop_assert_eq!(project_map(fg.as_tmap()), projected);
    }

    #[test]
    fn evaluation_is_contravariant(seed in any::<u64>(), p in any::<usize>(), q in any::<usize>()) {
        let mut s = Sampler::new(seed);
        let x = s.fair_set();
        let (k, l, m) = (s.coloured_ordinal(3), s.coloured_ordinal(4), s.coloured_ordinal(4));
        let (Some(f), Some(g)) = (fat_from(&k, &l, p), fat_from(&l, &m, q)) else {
            return Ok(());
        };
        let whole = evaluate_map(&x, &compose_fat(&f, &g).unwrap()).unwrap();
        let parts = evaluate_map(&x, &g).unwrap().then(&evaluate_map(&x, &f).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn vertical_maps_act_bijectively(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = s.fair_set();
        let f = s.fat_map(4, 5);
        let e = evaluate_map(&x, &f).unwrap();
        if is_vertical(&f) {
            prop_assert!(e.is_bijection());
            prop_assert_eq!(recompose(f.src(), &vertical_decompose(&f).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn segal_maps_are_bijections(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let x = s.fair_set();
        let (k, l) = (s.coloured_ordinal(3), s.coloured_ordinal(3));
        prop_assert!(segal_bijection(&x, &k, &l).unwrap());
    }

    #[test]
    fn nerve_then_underlying_is_identity(seed in any::<u64>()) {
        let c = Sampler::new(seed).category();
        let x = fair_nerve(&c).unwrap();
        prop_assert!(validate_fair_set(&x).is_valid());
        prop_assert_eq!(theta(&x).unwrap(), c);
    }

    #[test]
    fn products_and_sums_of_categories_are_categories(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (a, b) = (s.category_within(3, 8), s.category_within(3, 8));
        let p = binary_product(&a, &b);
        prop_assert!(p.category.validate().is_valid());
        prop_assert_eq!(p.category.num_arrows(), a.num_arrows() * b.num_arrows());
        prop_assert!(p.left.validate().is_valid() && p.right.validate().is_valid());
        let c = binary_coproduct(&a, &b);
        prop_assert!(c.category.validate().is_valid());
        prop_assert_eq!(c.category.num_objects(), a.num_objects() + b.num_objects());
    }

    #[test]
    fn equimorphisms_compose(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let c = s.category();
        // a shuffled copy with its isomorphism back onto `c`
        let mut objects: Vec<usize> = (0..c.num_objects()).collect();
        let mut arrows: Vec<usize> = (0..c.num_arrows()).collect();
        objects.shuffle(s.rng());
        arrows.shuffle(s.rng());
        let (_, iso) = permuted(&c, &objects, &arrows).unwrap();
        // thickening each object into an isomorphic pair is an equivalence, not an isomorphism
        let pair = codiscrete(&["p", "q"]);
        let prod = binary_product(iso.dst(), &pair);
        let obj_map = (0..iso.dst().num_objects())
            .map(|x| prod.obj_pairs.iter().position(|&q| q == (x, 0)).unwrap())
            .collect();
        let arr_map = (0..iso.dst().num_arrows())
            .map(|f| prod.arr_pairs.iter().position(|&q| q == (f, pair.identity(0))).unwrap())
            .collect();
        let thicken = FinFunctor::new(iso.dst().clone(), prod.category.clone(), obj_map, arr_map).unwrap();
        prop_assert!(thicken.validate().is_valid());
        prop_assert!(equimorphism_report(&iso).equimorphism);
        prop_assert!(equimorphism_report(&thicken).equimorphism);
        prop_assert!(!thicken.is_isomorphism());
        let both = iso.then(&thicken).unwrap();
        prop_assert!(equimorphism_report(&both).equimorphism);
        // adding a stray object breaks essential surjectivity only
        let bigger = binary_coproduct(thicken.dst(), &terminal());
        let into = FinFunctor::new(
            thicken.dst().clone(),
            bigger.category.clone(),
            (0..thicken.dst().num_objects()).map(|x| bigger.inject_object(0, x)).collect(),
            (0..thicken.dst().num_arrows()).map(|f| bigger.inject_arrow(0, f)).collect(),
        )
        .unwrap();
        let r = equimorphism_report(&both.then(&into).unwrap());
        prop_assert!(r.fully_faithful && !r.essentially_surjective);
    }

    #[test]
    fn either_unit_choice_gives_an_equivalent_bicategory(seed in any::<u64>()) {
        let c = Sampler::new(seed).bicategory();
        let x = bicat_to_fair2(&c).unwrap();
        prop_assert!(validate_fair_two(&x).is_valid());
        let first = fair2_to_bicat(&x, PseudoSection::First).unwrap();
        let last = fair2_to_bicat(&x, PseudoSection::Last).unwrap();
        prop_assert!(validate_bicategory(&first).is_valid() && validate_bicategory(&last).is_valid());
        prop_assert_eq!(first.semi(), last.semi());
        for o in 0..c.semi().num_objects() {
            let theta = canonical_unit_iso(c.semi(), first.unit(o), last.unit(o)).unwrap();
            prop_assert!(c.semi().hom(o, o).is_iso(theta));
        }
    }
}
