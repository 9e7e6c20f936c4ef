//! Acceptance suite: one PASS/FAIL line per criterion, each with its time budget.
//! Every check is exact; the budgets are wall-clock limits on this machine.
//!
//! Run with `cargo test -p fatdelta-cli --test acceptance --release` for timings
//! that reflect an optimised build; the debug build must also pass.

mod common;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::time::{Duration, Instant};

use fatdelta::bicat::{
    bicat_to_fair2, canonical_unit_iso, fair2_to_bicat, identity_category, validate_bicategory, IdentityTriple,
    PseudoSection, StrictCompBicategory,
};
use fatdelta::fairset::{
    evaluate_map, evaluate_object, fair_nerve, theta, unit_iso, validate_fair_set, FairSetCategory, FairSetMap, Unit,
};
use fatdelta::fairtwo::validate_fair_two;
use fatdelta::fat::{
    count_epi_squares, dotsum, elementary_map, enum_hom_fat, is_vertical, project, recompose, vertical_decompose,
    ColouredOrdinal, EpiSquare, FatMap,
};
use fatdelta::fincat::{
    binary_product, coproduct, coproduct_functor, fibre_product_over_discrete, is_pullback_square, permuted, pi0,
    FinCategory, FinFunctor,
};
use fatdelta::gen::{bicategory_corpus, Sampler};
use fatdelta::ordinal::{compose_delta, dotsum_delta, enum_hom_delta, Ordinal};
use fatdelta::twocat::SemiTwoCategory;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

/// Name, time budget in seconds, and the check itself.
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn all_objects(max_dots: usize) -> Vec<ColouredOrdinal> {
    (1..=max_dots).flat_map(ColouredOrdinal::all_with_dots).collect()
}

fn counting() -> Check {
    for m in 0..=5u64 {
        for n in 0..=5u64 {
            let got = enum_hom_delta(Ordinal(m as usize), Ordinal(n as usize)).len() as u64;
            let want = binomial(m + n + 1, m + 1);
            ensure(got == want, || format!("|Hom({m},{n})| = {got}, expected {want}"))?;
        }
    }
    let objects = all_objects(5);
    let mut pairs = 0;
    for k in &objects {
        for l in &objects {
            let maps = enum_hom_fat(k, l);
            let squares = count_epi_squares(k, l);
            ensure(maps.len() == squares, || {
                format!("{k} → {l}: {} maps, {squares} squares", maps.len())
            })?;
            for f in &maps {
                let back = EpiSquare::from_fat(f).to_fat().map_err(|e| e.to_string())?;
                ensure(back == *f, || format!("square of {f} gives back {back}"))?;
            }
            pairs += 1;
        }
    }
    Ok(format!("36 ordinal pairs, {pairs} coloured pairs"))
}

fn pushout() -> Check {
    let s = dotsum_delta(Ordinal(1), Ordinal(3));
    ensure(s.sum == Ordinal(4), || format!("1 ∔ 3 = {}", s.sum))?;
    ensure(s.left.apply(1) == s.right.apply(0), || {
        "the two legs disagree on the glued dot".into()
    })?;
    // universal property against every cocone into small targets, by brute force
    for t in 0..=6 {
        for a in enum_hom_delta(Ordinal(1), Ordinal(t)) {
            for b in enum_hom_delta(Ordinal(3), Ordinal(t)) {
                if a.apply(1) != b.apply(0) {
                    continue;
                }
                let mediating = enum_hom_delta(s.sum, Ordinal(t))
                    .into_iter()
                    .filter(|u| compose_delta(&s.left, u).unwrap() == a && compose_delta(&s.right, u).unwrap() == b)
                    .count();
                ensure(mediating == 1, || {
                    format!("cocone ({a}, {b}) has {mediating} mediating maps")
                })?;
            }
        }
    }
    let mut sampler = Sampler::new(0);
    for _ in 0..200 {
        let k = sampler.coloured_ordinal(6);
        let l = sampler.coloured_ordinal(6);
        let lhs = project(&dotsum(&k, &l));
        let rhs = dotsum_delta(project(&k), project(&l)).sum;
        ensure(lhs == rhs, || format!("π({k} ∔ {l}) = {lhs}, expected {rhs}"))?;
    }
    Ok("200 random pairs".into())
}

/// Independently builds `id ∔ g ∔ id` by splicing the generator's images.
fn flanked(source: &ColouredOrdinal, g: &FatMap, position: usize) -> Option<FatMap> {
    let width = g.src().top();
    if position + width > source.top() || source.slice(position, position + width) != *g.src() {
        return None;
    }
    let grow = g.dst().top() - width;
    let mut links = source.links()[..position].to_vec();
    links.extend_from_slice(g.dst().links());
    links.extend_from_slice(&source.links()[position + width..]);
    let images = (0..source.dots())
        .map(|i| {
            if i < position {
                i
            } else if i <= position + width {
                position + g.images()[i - position]
            } else {
                i + grow
            }
        })
        .collect();
    FatMap::new(source.clone(), ColouredOrdinal::new(links), images).ok()
}

fn vertical_generation() -> Check {
    let objects = all_objects(6);
    let mut count = 0;
    let mut steps_total = 0;
    for k in &objects {
        for l in objects.iter().filter(|l| project(l) == project(k)) {
            for f in enum_hom_fat(k, l).into_iter().filter(is_vertical) {
                let steps = vertical_decompose(&f).map_err(|e| format!("{f}: {e}"))?;
                let back = recompose(f.src(), &steps).map_err(|e| format!("{f}: {e}"))?;
                ensure(back == f, || format!("{f} recomposes to {back}"))?;
                let mut current = f.src().clone();
                for step in &steps {
                    let e = elementary_map(&current, *step).map_err(|e| e.to_string())?;
                    let oracle = flanked(&current, &step.generator.map(), step.position);
                    ensure(oracle.as_ref() == Some(&e), || {
                        format!(
                            "step {}@{} of {f} is not a flanked generator",
                            step.generator, step.position
                        )
                    })?;
                    current = e.dst().clone();
                }
                count += 1;
                steps_total += steps.len();
            }
        }
    }
    // closed form: components match up in order, and each one embeds by a choice of dots
    let sizes = |k: &ColouredOrdinal| -> Vec<u64> {
        let mut out = vec![1u64];
        for &l in k.links() {
            if l {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
            }
        }
        out
    };
    let expected: u64 = objects
        .iter()
        .flat_map(|k| objects.iter().map(move |l| (sizes(k), sizes(l))))
        .filter(|(a, b)| a.len() == b.len())
        .map(|(a, b)| a.iter().zip(&b).map(|(&x, &y)| binomial(y, x)).product::<u64>())
        .sum();
    ensure(count == expected, || {
        format!("{count} vertical maps enumerated, {expected} expected")
    })?;
    Ok(format!("{count} vertical maps, {steps_total} steps"))
}

/// A brute-force check that `m` is an isomorphism of fair Set-categories `x → y`.
fn is_fair_iso(m: &FairSetMap, x: &FairSetCategory, y: &FairSetCategory) -> bool {
    let bij = |map: &[usize], n: usize| {
        map.len() == n && map.iter().collect::<HashSet<_>>().len() == n && map.iter().all(|&i| i < n)
    };
    if !bij(&m.objects, y.objects().len()) || !bij(&m.arrows, y.arrows().len()) || !bij(&m.units, y.units().len()) {
        return false;
    }
    let ends = x.arrows().iter().enumerate().all(|(f, a)| {
        let b = &y.arrows()[m.arrows[f]];
        b.src == m.objects[a.src] && b.tgt == m.objects[a.tgt]
    });
    let comp = (0..x.arrows().len()).all(|f| {
        (0..x.arrows().len()).all(|g| x.compose(f, g).map(|h| m.arrows[h]) == y.compose(m.arrows[f], m.arrows[g]))
    });
    let units = x.units().iter().enumerate().all(|(w, u)| {
        let v = &y.units()[m.units[w]];
        v.object == m.objects[u.object] && v.arrow == m.arrows[u.arrow]
    });
    ends && comp && units
}

fn dim1_round_trip() -> Check {
    let mut sampler = Sampler::new(0);
    for i in 0..20 {
        let c = sampler.category();
        let back = theta(&fair_nerve(&c).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(back == c, || format!("category {i} does not survive the round trip"))?;
    }
    for i in 0..20 {
        let x = sampler.fair_set();
        ensure(validate_fair_set(&x).is_valid(), || format!("fair set {i} is invalid"))?;
        let y = fair_nerve(&theta(&x).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let m = unit_iso(&x).map_err(|e| e.to_string())?;
        ensure(is_fair_iso(&m, &x, &y), || {
            format!("unit map of fair set {i} is not an isomorphism")
        })?;
    }
    Ok("20 categories, 20 fair Set-categories".into())
}

/// Unit carried by a different arrow, or attached to another object.
fn mutate(x: &FairSetCategory, rng: &mut impl Rng) -> FairSetCategory {
    let mut units: Vec<Unit> = x.units().to_vec();
    let w = rng.gen_range(0..units.len());
    if rng.gen_bool(0.7) {
        units[w].arrow = rng.gen_range(0..x.arrows().len());
    } else {
        units[w].object = rng.gen_range(0..x.objects().len());
    }
    FairSetCategory::from_indexed(x.objects().to_vec(), x.arrows().to_vec(), |f, g| x.compose(f, g), units)
        .expect("mutations stay in range")
}

fn units_are_strict(x: &FairSetCategory) -> bool {
    x.units().iter().all(|w| {
        let u = &x.arrows()[w.arrow];
        let endo = u.src == w.object && u.tgt == w.object;
        let two_sided = x.arrows().iter().enumerate().all(|(f, a)| {
            (a.tgt != w.object || x.compose(f, w.arrow) == Some(f))
                && (a.src != w.object || x.compose(w.arrow, f) == Some(f))
        });
        endo && two_sided
    })
}

fn left_zero() -> FairSetCategory {
    let s = |x: &str| x.to_string();
    FairSetCategory::from_names(
        vec![s("*")],
        vec![(s("a"), s("*"), s("*")), (s("b"), s("*"), s("*"))],
        &[
            (s("a"), s("a"), s("a")),
            (s("a"), s("b"), s("a")),
            (s("b"), s("a"), s("b")),
            (s("b"), s("b"), s("b")),
        ],
        &[(s("w"), s("*"), s("a"))],
    )
    .unwrap()
}

fn lemma_s_eq_t() -> Check {
    let mut sampler = Sampler::new(0);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut accepted, mut rejected) = (0, 0);
    for i in 0..300 {
        let base = sampler.fair_set();
        let x = if i % 3 == 0 { base } else { mutate(&base, &mut rng) };
        let v = validate_fair_set(&x);
        if !v.is_valid() {
            rejected += 1;
            continue;
        }
        accepted += 1;
        ensure(v.lemma_s_eq_t && v.strict_units, || {
            format!("instance {i}: derived flags fail")
        })?;
        ensure(units_are_strict(&x), || {
            format!("instance {i}: oracle finds a non-strict unit")
        })?;
    }
    let v = validate_fair_set(&left_zero());
    ensure(!v.is_valid(), || "the left-zero semigroup was accepted".into())?;
    ensure(rejected > 0, || "no mutation was rejected; corpus too weak".into())?;
    Ok(format!("{accepted} accepted, {rejected} rejected, left-zero rejected"))
}

/// Components by breadth-first search over arrows in both directions.
fn components_bfs(c: &FinCategory) -> Vec<usize> {
    let n = c.num_objects();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for a in c.arrows() {
                for (p, q) in [(a.src, a.tgt), (a.tgt, a.src)] {
                    if p == x && label[q] == usize::MAX {
                        label[q] = next;
                        queue.push_back(q);
                    }
                }
            }
        }
        next += 1;
    }
    label
}

fn random_family(sampler: &mut Sampler) -> Vec<(FinFunctor, FinFunctor)> {
    let parts = sampler.rng().gen_range(1..=3);
    (0..parts)
        .map(|_| {
            let points = sampler.rng().gen_range(1..=3);
            let a = sampler.category_within(4, 12);
            let b = sampler.category_within(4, 12);
            let f = sampler.functor_to_discrete(&a, points);
            let g = sampler.functor_to_discrete(&b, points);
            (f, g)
        })
        .collect()
}

fn named<T: Clone>(items: &[T]) -> Vec<(String, T)> {
    items
        .iter()
        .enumerate()
        .map(|(i, t)| (format!("s{i}"), t.clone()))
        .collect()
}

fn appendix() -> Check {
    let mut sampler = Sampler::new(0);
    for i in 0..100 {
        let a = sampler.category_within(4, 12);
        let b = sampler.category_within(4, 12);
        let p = binary_product(&a, &b);
        let (ca, cb, cp) = (pi0(&a), pi0(&b), components_bfs(&p.category));
        // the canonical map sends the component of (x, y) to the pair of components
        let pairs: BTreeSet<(usize, usize, usize)> = p
            .obj_pairs
            .iter()
            .enumerate()
            .map(|(k, &(x, y))| (cp[k], ca.of_object[x], cb.of_object[y]))
            .collect();
        let classes: BTreeSet<usize> = cp.iter().copied().collect();
        let images: BTreeSet<(usize, usize)> = pairs.iter().map(|&(_, x, y)| (x, y)).collect();
        ensure(pairs.len() == classes.len() && images.len() == classes.len(), || {
            format!("DO2 instance {i}: not well defined or not injective")
        })?;
        ensure(images.len() == ca.count * cb.count, || {
            format!("DO2 instance {i}: not surjective")
        })?;
    }
    for i in 0..100 {
        let family = random_family(&mut sampler);
        let pieces: Vec<FinCategory> = family
            .iter()
            .map(|(f, g)| fibre_product_over_discrete(f, g).map(|p| p.category))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let lhs = coproduct(&named(&pieces));
        let sf = coproduct_functor(&named(&family.iter().map(|p| p.0.clone()).collect::<Vec<_>>()))
            .map_err(|e| e.to_string())?;
        let sg = coproduct_functor(&named(&family.iter().map(|p| p.1.clone()).collect::<Vec<_>>()))
            .map_err(|e| e.to_string())?;
        let rhs = fibre_product_over_discrete(&sf, &sg).map_err(|e| e.to_string())?;
        // explicit comparison: ((x, y) in summand s) ↦ (x in summand s, y in summand s)
        let local: Vec<_> = family
            .iter()
            .map(|(f, g)| fibre_product_over_discrete(f, g).unwrap())
            .collect();
        let sa = coproduct(&named(&family.iter().map(|p| p.0.src().clone()).collect::<Vec<_>>()));
        let sb = coproduct(&named(&family.iter().map(|p| p.1.src().clone()).collect::<Vec<_>>()));
        let find_obj = |x: usize, y: usize| rhs.obj_pairs.iter().position(|&q| q == (x, y));
        let find_arr = |f: usize, g: usize| rhs.arr_pairs.iter().position(|&q| q == (f, g));
        let obj_map: Option<Vec<usize>> = lhs
            .obj_origin
            .iter()
            .map(|&(s, k)| {
                let (x, y) = local[s].obj_pairs[k];
                find_obj(sa.inject_object(s, x), sb.inject_object(s, y))
            })
            .collect();
        let arr_map: Option<Vec<usize>> = lhs
            .arr_origin
            .iter()
            .map(|&(s, k)| {
                let (f, g) = local[s].arr_pairs[k];
                find_arr(sa.inject_arrow(s, f), sb.inject_arrow(s, g))
            })
            .collect();
        let (Some(om), Some(am)) = (obj_map, arr_map) else {
            return Err(format!("commute instance {i}: comparison is not defined"));
        };
        let cmp = FinFunctor::new(lhs.category.clone(), rhs.category.clone(), om, am).map_err(|e| e.to_string())?;
        ensure(cmp.validate().is_valid() && cmp.is_isomorphism(), || {
            format!("commute instance {i}: comparison is not an isomorphism")
        })?;
    }
    for i in 0..100 {
        let family = random_family(&mut sampler);
        // pullback squares given up to isomorphism: shuffled copies of the fibre products
        let mut ps = Vec::new();
        let mut qs = Vec::new();
        for (f, g) in &family {
            let fp = fibre_product_over_discrete(f, g).map_err(|e| e.to_string())?;
            let mut objects: Vec<usize> = (0..fp.category.num_objects()).collect();
            let mut arrows: Vec<usize> = (0..fp.category.num_arrows()).collect();
            objects.shuffle(sampler.rng());
            arrows.shuffle(sampler.rng());
            let (_, iso) = permuted(&fp.category, &objects, &arrows).map_err(|e| e.to_string())?;
            let p = iso.then(&fp.left).map_err(|e| e.to_string())?;
            let q = iso.then(&fp.right).map_err(|e| e.to_string())?;
            ensure(is_pullback_square(&p, &q, f, g).map_err(|e| e.to_string())?, || {
                format!("Segal instance {i}: a given square is not a pullback")
            })?;
            ps.push(p);
            qs.push(q);
        }
        let sum = |fs: Vec<FinFunctor>| coproduct_functor(&named(&fs)).map_err(|e| e.to_string());
        let (p, q) = (sum(ps)?, sum(qs)?);
        let (f, g) = (
            sum(family.iter().map(|x| x.0.clone()).collect())?,
            sum(family.iter().map(|x| x.1.clone()).collect())?,
        );
        ensure(is_pullback_square(&p, &q, &f, &g).map_err(|e| e.to_string())?, || {
            format!("Segal instance {i}: the sum square is not a pullback")
        })?;
    }
    Ok("3 × 100 instances".into())
}

/// `θ` is compatible when it carries the constraints of `s` to those of `t`.
fn compatible_oracle(c: &SemiTwoCategory, s: &IdentityTriple, t: &IdentityTriple, theta: usize) -> bool {
    let o = s.object;
    let n = c.num_objects();
    let left = (0..n).all(|y| {
        let h = c.hom(o, y);
        (0..h.num_objects()).all(|a| {
            let whisker = c.tensor_arr(o, o, y, theta, h.identity(a));
            h.compose(whisker, t.left[y][a]) == Some(s.left[y][a])
        })
    });
    let right = (0..n).all(|x| {
        let h = c.hom(x, o);
        (0..h.num_objects()).all(|a| {
            let whisker = c.tensor_arr(x, o, o, h.identity(a), theta);
            h.compose(whisker, t.right[x][a]) == Some(s.right[x][a])
        })
    });
    left && right
}

fn check_bicategory(name: &str, c: &StrictCompBicategory) -> Result<(), String> {
    ensure(validate_bicategory(c).is_valid(), || {
        format!("{name}: input is not a bicategory")
    })?;
    let x = bicat_to_fair2(c).map_err(|e| format!("{name}: {e}"))?;
    let v = validate_fair_two(&x);
    ensure(v.is_valid(), || {
        format!("{name}: fair 2-category rejected: {}", v.verdict)
    })?;
    let semi = c.semi();
    for o in 0..semi.num_objects() {
        let ic = identity_category(c, o).map_err(|e| format!("{name}: {e}"))?;
        let cat = &ic.category;
        let singletons = cat.num_objects() > 0
            && (0..cat.num_objects()).all(|a| (0..cat.num_objects()).all(|b| cat.hom(a, b).len() == 1));
        ensure(ic.contractible && singletons, || {
            format!("{name}: identity category at {o} is not contractible")
        })?;
    }
    for choice in [PseudoSection::First, PseudoSection::Last] {
        let back = fair2_to_bicat(&x, choice).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.semi() == semi, || format!("{name}: homs or tensor changed"))?;
        ensure(validate_bicategory(&back).is_valid(), || {
            format!("{name}: recovered bicategory is invalid")
        })?;
        for o in 0..semi.num_objects() {
            let (t1, t2) = (c.unit(o), back.unit(o));
            let theta = canonical_unit_iso(semi, t1, t2).map_err(|e| format!("{name}: {e}"))?;
            let h = semi.hom(o, o);
            let candidates: Vec<usize> = h
                .hom(t2.unit, t1.unit)
                .iter()
                .copied()
                .filter(|&a| compatible_oracle(semi, t2, t1, a))
                .collect();
            ensure(candidates == vec![theta], || {
                format!("{name}: units at {o} are not joined by a unique compatible cell")
            })?;
            ensure(h.is_iso(theta), || {
                format!("{name}: canonical cell at {o} is not invertible")
            })?;
        }
    }
    Ok(())
}

fn prop_b() -> Check {
    let corpus = bicategory_corpus();
    ensure(corpus.len() >= 10, || "corpus has fewer than 10 examples".into())?;
    ensure(corpus.iter().any(|(n, _)| n == "codiscrete Z2"), || {
        "codiscrete two-unit example missing".into()
    })?;
    for (name, c) in &corpus {
        check_bicategory(name, c)?;
    }
    let mut sampler = Sampler::new(0);
    for i in 0..10 {
        check_bicategory(&format!("random {i}"), &sampler.bicategory())?;
    }
    Ok(format!(
        "{} corpus + 10 random bicategories, both unit choices",
        corpus.len()
    ))
}

fn cli_golden() -> Check {
    let records = common::run_cases();
    let again = common::run_cases();
    ensure(records == again, || "two runs differ".into())?;
    let mismatches = common::check_golden(&records, false);
    ensure(mismatches.is_empty(), || mismatches.join("; "))?;
    Ok(format!("{} invocations", records.len()))
}

fn main() {
    // keep the evaluation helpers honest on one instance before timing anything
    let z = fair_nerve(&fatdelta::fincat::codiscrete(&["p", "q"])).unwrap();
    assert_eq!(evaluate_object(&z, &"o.o".parse().unwrap()).len(), 4);
    assert!(evaluate_map(&z, &"o.o -> o-o.o : [0,2]".parse().unwrap())
        .unwrap()
        .is_bijection());

    let criteria: [Criterion; 8] = [
        ("counting oracle", 10, counting),
        ("pushout law", 5, pushout),
        ("vertical generation", 30, vertical_generation),
        ("one-dimensional round trip", 10, dim1_round_trip),
        ("weak units are strict identities", 5, lemma_s_eq_t),
        ("appendix suite", 20, appendix),
        ("bicategory round trip", 60, prop_b),
        ("cli determinism", 10, cli_golden),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let over = took > Duration::from_secs(budget);
        match (&result, over) {
            (Ok(detail), false) => println!("PASS {name} [{:.2}s / {budget}s] {detail}", took.as_secs_f64()),
            (Ok(detail), true) => {
                failed += 1;
                println!(
                    "FAIL {name} [{:.2}s / {budget}s] over budget; {detail}",
                    took.as_secs_f64()
                );
            }
            (Err(why), _) => {
                failed += 1;
                println!("FAIL {name} [{:.2}s / {budget}s] {why}", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
