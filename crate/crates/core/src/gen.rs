//! Seeded random instances: finite categories, fair Set-categories, bicategories with
//! strict composition, and coloured ordinals. The same seed always gives the same
//! sequence.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bicat::{IdentityTriple, StrictCompBicategory};
use crate::fairset::{fair_nerve, FairSetCategory, Unit};
use crate::fat::{enum_hom_fat, ColouredOrdinal, FatMap};
use crate::fincat::{
    binary_coproduct, binary_product, codiscrete, delta_discrete, empty, from_monoid, permuted, preorder, Arrow,
    FinCategory, FinFunctor,
};
use crate::twocat::{Cell, SemiTwoCategory};

pub const MAX_OBJECTS: usize = 4;
pub const MAX_ARROWS: usize = 12;

/// A finite semigroup by its multiplication table, optionally with a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    pub name: &'static str,
    pub elements: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub unit: Option<usize>,
}

impl Semigroup {
    fn from_fn(name: &'static str, labels: &[&str], unit: Option<usize>, f: impl Fn(usize, usize) -> usize) -> Self {
        let n = labels.len();
        Self {
            name,
            elements: labels.iter().map(|s| s.to_string()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect(),
            unit,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// As a one-object category; only for monoids.
    pub fn category(&self) -> Option<FinCategory> {
        from_monoid(&self.elements, self.unit?, &self.mul).ok()
    }
}

pub fn cyclic(n: usize) -> Semigroup {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut s = Semigroup::from_fn("cyclic", &labels, Some(0), |a, b| (a + b) % n);
    s.name = match n {
        1 => "Z1",
        2 => "Z2",
        3 => "Z3",
        _ => "Z4",
    };
    s
}

/// Small monoids with up to four elements.
pub fn monoid_catalogue() -> Vec<Semigroup> {
    vec![
        cyclic(1),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        Semigroup::from_fn("mul01", &["1", "0"], Some(0), |a, b| a.max(b)),
        Semigroup::from_fn("capped", &["0", "1", "2"], Some(0), |a, b| (a + b).min(2)),
        Semigroup::from_fn("max3", &["0", "1", "2"], Some(0), |a, b| a.max(b)),
        Semigroup::from_fn(
            "leftzero+1",
            &["e", "a", "b"],
            Some(0),
            |a, b| if a == 0 { b } else { a },
        ),
        Semigroup::from_fn("klein", &["e", "a", "b", "c"], Some(0), |a, b| a ^ b),
    ]
}

/// Semigroups without a two-sided unit, plus a few monoids, for codiscrete examples.
pub fn semigroup_catalogue() -> Vec<Semigroup> {
    let mut out = vec![
        Semigroup::from_fn("leftzero", &["a", "b"], None, |a, _| a),
        Semigroup::from_fn("rightzero", &["a", "b"], None, |_, b| b),
        Semigroup::from_fn("null3", &["0", "x", "y"], None, |_, _| 0),
    ];
    out.extend(monoid_catalogue().into_iter().filter(|m| m.len() <= 3));
    out
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A random category with at most [`MAX_OBJECTS`] objects and [`MAX_ARROWS`] arrows.
    pub fn category(&mut self) -> FinCategory {
        self.category_within(MAX_OBJECTS, MAX_ARROWS)
    }

    pub fn category_within(&mut self, max_objects: usize, max_arrows: usize) -> FinCategory {
        loop {
            let c = match self.rng.gen_range(0..6) {
                0 => self.preorder(max_objects),
                1 => {
                    let ms = monoid_catalogue();
                    ms.choose(&mut self.rng).unwrap().category().unwrap()
                }
                2 => codiscrete(&names(self.rng.gen_range(1..=max_objects.min(3)))),
                3 => self.free_on_dag(max_objects),
                4 if max_objects >= 2 => {
                    let split = self.rng.gen_range(1..max_objects);
                    let a = self.category_within(split, max_arrows);
                    let b = self.category_within(max_objects - split, max_arrows);
                    binary_coproduct(&a, &b).category
                }
                5 if max_objects >= 2 => {
                    let a = self.category_within(2, 4);
                    let b = self.category_within(max_objects / 2, 4);
                    binary_product(&a, &b).category
                }
                _ => delta_discrete(&names(self.rng.gen_range(1..=max_objects))),
            };
            if c.num_objects() <= max_objects && c.num_arrows() <= max_arrows && c.num_objects() > 0 {
                return self.shuffle(&c);
            }
        }
    }

    /// The same category with objects and arrows listed in a random order.
    pub fn shuffle(&mut self, c: &FinCategory) -> FinCategory {
        let mut objects: Vec<usize> = (0..c.num_objects()).collect();
        let mut arrows: Vec<usize> = (0..c.num_arrows()).collect();
        objects.shuffle(&mut self.rng);
        arrows.shuffle(&mut self.rng);
        permuted(c, &objects, &arrows).expect("permutations").0
    }

    fn preorder(&mut self, max_objects: usize) -> FinCategory {
        let n = self.rng.gen_range(1..=max_objects);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .collect();
        let rel: Vec<(usize, usize)> = pairs.into_iter().filter(|_| self.rng.gen_bool(0.3)).collect();
        preorder(&names(n), &rel).expect("indices are in range")
    }

    /// Free category on a random acyclic graph; arrows are paths.
    fn free_on_dag(&mut self, max_objects: usize) -> FinCategory {
        let n = self.rng.gen_range(1..=max_objects);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| self.rng.gen_bool(0.5))
            .collect();
        free_category(n, &edges)
    }

    /// A functor to a discrete category on `index` points, constant on components.
    pub fn functor_to_discrete(&mut self, c: &FinCategory, index: usize) -> FinFunctor {
        let d = delta_discrete(&names(index));
        let comps = crate::fincat::pi0(c);
        let choice: Vec<usize> = (0..comps.count).map(|_| self.rng.gen_range(0..index)).collect();
        let obj_map: Vec<usize> = comps.of_object.iter().map(|&k| choice[k]).collect();
        let arr_map = c.arrows().iter().map(|a| obj_map[a.src]).collect();
        FinFunctor::new(c.clone(), d, obj_map, arr_map).expect("constant on components")
    }

    /// The nerve of a random category, with units renamed and listed in random order.
    pub fn fair_set(&mut self) -> FairSetCategory {
        let c = self.category();
        let n = fair_nerve(&c).expect("generated categories are valid");
        let mut units: Vec<Unit> = n.units().to_vec();
        units.shuffle(&mut self.rng);
        for (k, w) in units.iter_mut().enumerate() {
            w.id = format!("w{k}");
        }
        FairSetCategory::from_indexed(n.objects().to_vec(), n.arrows().to_vec(), |f, g| n.compose(f, g), units)
            .expect("relabelling keeps the structure well formed")
    }

    pub fn coloured_ordinal(&mut self, max_dots: usize) -> ColouredOrdinal {
        let dots = self.rng.gen_range(1..=max_dots);
        ColouredOrdinal::new((1..dots).map(|_| self.rng.gen_bool(0.5)).collect())
    }

    /// A uniformly chosen fat map between random objects of bounded size.
    pub fn fat_map(&mut self, max_src: usize, max_dst: usize) -> FatMap {
        loop {
            let k = self.coloured_ordinal(max_src);
            let l = self.coloured_ordinal(max_dst);
            if let Some(f) = enum_hom_fat(&k, &l).choose(&mut self.rng) {
                return f.clone();
            }
        }
    }

    /// A random bicategory with strict composition, at most two objects.
    pub fn bicategory(&mut self) -> StrictCompBicategory {
        let one = match self.rng.gen_range(0..3) {
            0 => {
                let ms = monoid_catalogue();
                strict_monoid(ms.choose(&mut self.rng).unwrap())
            }
            1 => {
                let ss = semigroup_catalogue();
                let s = ss.choose(&mut self.rng).unwrap();
                let unit = self.rng.gen_range(0..s.len());
                codiscrete_semigroup(s, unit)
            }
            _ => {
                let ms: Vec<Semigroup> = monoid_catalogue().into_iter().filter(|m| m.len() <= 3).collect();
                let m = ms.choose(&mut self.rng).unwrap();
                let g = self.rng.gen_range(1..=3);
                let shift = self.rng.gen_range(0..g);
                monoid_with_twists(m, g, shift)
            }
        };
        match self.rng.gen_range(0..4) {
            0 => spread(&one, Pattern::AllPairs),
            1 => spread(&one, Pattern::WalkingArrow),
            _ => one,
        }
    }
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// Free category on a graph with edges `i → j`, `i < j`; arrow ids are paths.
pub fn free_category(n: usize, edges: &[(usize, usize)]) -> FinCategory {
    let mut paths: Vec<Vec<usize>> = (0..n).map(|_| Vec::new()).collect();
    let mut starts: Vec<usize> = (0..n).collect();
    let mut frontier: Vec<usize> = (0..n).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            let end = paths[p].last().map_or(starts[p], |&e| edges[e].1);
            for (e, &(s, _)) in edges.iter().enumerate() {
                if s == end {
                    let mut q = paths[p].clone();
                    q.push(e);
                    paths.push(q);
                    starts.push(starts[p]);
                    next.push(paths.len() - 1);
                }
            }
        }
        frontier = next;
    }
    let end = |p: usize| paths[p].last().map_or(starts[p], |&e| edges[e].1);
    let arrows: Vec<Arrow> = (0..paths.len())
        .map(|p| Arrow {
            id: if paths[p].is_empty() {
                format!("1_x{}", starts[p])
            } else {
                paths[p]
                    .iter()
                    .map(|&e| format!("x{}x{}", edges[e].0, edges[e].1))
                    .collect::<Vec<_>>()
                    .join(";")
            },
            src: starts[p],
            tgt: end(p),
        })
        .collect();
    FinCategory::from_indexed(names(n), arrows, (0..n).collect(), |f, g| {
        let mut joined = paths[f].clone();
        joined.extend(&paths[g]);
        if joined.is_empty() {
            return Some(f);
        }
        paths.iter().position(|q| *q == joined)
    })
    .expect("paths are closed under concatenation")
}

/// One object, 1-cells the monoid, only identity 2-cells, strict unit.
pub fn strict_monoid(m: &Semigroup) -> StrictCompBicategory {
    let semi = SemiTwoCategory::new(
        vec!["*".into()],
        vec![delta_discrete(&m.elements)],
        |_, _, _, _, a, b| m.mul[a][b],
    )
    .expect("tables are square");
    let t = IdentityTriple::strict(&semi, 0, m.unit.expect("monoid"));
    StrictCompBicategory::new(semi, vec![t]).expect("strict unit fits")
}

/// One object, 1-cells the semigroup, exactly one 2-cell between any two 1-cells.
/// Every 1-cell is then a weak unit; `unit` picks the chosen one.
pub fn codiscrete_semigroup(s: &Semigroup, unit: usize) -> StrictCompBicategory {
    let n = s.len();
    let semi = SemiTwoCategory::new(
        vec!["*".into()],
        vec![codiscrete(&s.elements)],
        |_, _, _, cell, a, b| match cell {
            Cell::Object => s.mul[a][b],
            Cell::Arrow => s.mul[a / n][b / n] * n + s.mul[a % n][b % n],
        },
    )
    .expect("tables are square");
    let t = unique_cell_triple(&semi, unit);
    StrictCompBicategory::new(semi, vec![t]).expect("triple fits")
}

fn unique_cell_triple(semi: &SemiTwoCategory, unit: usize) -> IdentityTriple {
    let h = semi.hom(0, 0);
    IdentityTriple {
        object: 0,
        unit,
        left: vec![(0..h.num_objects())
            .map(|b| h.hom(semi.tensor_obj(0, 0, 0, unit, b), b)[0])
            .collect()],
        right: vec![(0..h.num_objects())
            .map(|a| h.hom(semi.tensor_obj(0, 0, 0, a, unit), a)[0])
            .collect()],
    }
}

/// One object, 1-cells a monoid `M`, each 1-cell carrying endo 2-cells `Z/g`, with
/// composition adding the twists. The strict unit is chosen with both constraints
/// the twist `shift`.
pub fn monoid_with_twists(m: &Semigroup, g: usize, shift: usize) -> StrictCompBicategory {
    let k = m.len();
    let arrows: Vec<Arrow> = (0..k * g)
        .map(|a| Arrow {
            id: format!("{}+{}", m.elements[a / g], a % g),
            src: a / g,
            tgt: a / g,
        })
        .collect();
    let hom = FinCategory::from_indexed(m.elements.clone(), arrows, (0..k).map(|x| x * g).collect(), |f, h| {
        (f / g == h / g).then(|| (f / g) * g + (f % g + h % g) % g)
    })
    .expect("twists form a group on each 1-cell");
    let semi = SemiTwoCategory::new(vec!["*".into()], vec![hom], |_, _, _, cell, a, b| match cell {
        Cell::Object => m.mul[a][b],
        Cell::Arrow => m.mul[a / g][b / g] * g + (a % g + b % g) % g,
    })
    .expect("tables are square");
    let h = semi.hom(0, 0);
    let cells: Vec<usize> = (0..h.num_objects()).map(|x| x * g + shift).collect();
    let t = IdentityTriple {
        object: 0,
        unit: m.unit.expect("monoid"),
        left: vec![cells.clone()],
        right: vec![cells],
    };
    StrictCompBicategory::new(semi, vec![t]).expect("triple fits")
}

/// Two-object layouts for copying a one-object example.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// Every hom is the one-object hom.
    AllPairs,
    /// `A(a,b)` is the hom, `A(b,a)` is empty.
    WalkingArrow,
    /// Only endo-homs.
    Disjoint,
}

/// Copies a one-object bicategory onto two objects `a`, `b` along `pattern`.
pub fn spread(one: &StrictCompBicategory, pattern: Pattern) -> StrictCompBicategory {
    let s = one.semi();
    let present = |x: usize, y: usize| match pattern {
        Pattern::AllPairs => true,
        Pattern::WalkingArrow => !(x == 1 && y == 0),
        Pattern::Disjoint => x == y,
    };
    let homs: Vec<FinCategory> = (0..4)
        .map(|k| {
            if present(k / 2, k % 2) {
                s.hom(0, 0).clone()
            } else {
                empty()
            }
        })
        .collect();
    let semi = SemiTwoCategory::new(vec!["a".into(), "b".into()], homs, |_, _, _, cell, p, q| match cell {
        Cell::Object => s.tensor_obj(0, 0, 0, p, q),
        Cell::Arrow => s.tensor_arr(0, 0, 0, p, q),
    })
    .expect("same tables on every hom");
    let t = one.unit(0);
    let units = (0..2)
        .map(|o| IdentityTriple {
            object: o,
            unit: t.unit,
            left: (0..2)
                .map(|y| if present(o, y) { t.left[0].clone() } else { Vec::new() })
                .collect(),
            right: (0..2)
                .map(|x| if present(x, o) { t.right[0].clone() } else { Vec::new() })
                .collect(),
        })
        .collect();
    StrictCompBicategory::new(semi, units).expect("triples fit")
}

/// Two one-object examples side by side, with no 1-cells between them.
pub fn disjoint_union(a: &StrictCompBicategory, b: &StrictCompBicategory) -> StrictCompBicategory {
    let parts = [a, b];
    let homs: Vec<FinCategory> = (0..4)
        .map(|k| {
            if k / 2 == k % 2 {
                parts[k / 2].semi().hom(0, 0).clone()
            } else {
                empty()
            }
        })
        .collect();
    let semi = SemiTwoCategory::new(vec!["a".into(), "b".into()], homs, |x, _, _, cell, p, q| match cell {
        Cell::Object => parts[x].semi().tensor_obj(0, 0, 0, p, q),
        Cell::Arrow => parts[x].semi().tensor_arr(0, 0, 0, p, q),
    })
    .expect("only endo-homs compose");
    let units = (0..2)
        .map(|o| {
            let t = parts[o].unit(0);
            IdentityTriple {
                object: o,
                unit: t.unit,
                left: (0..2)
                    .map(|y| if y == o { t.left[0].clone() } else { Vec::new() })
                    .collect(),
                right: (0..2)
                    .map(|x| if x == o { t.right[0].clone() } else { Vec::new() })
                    .collect(),
            }
        })
        .collect();
    StrictCompBicategory::new(semi, units).expect("triples fit")
}

/// The codiscrete bicategory over `Z/2`: one object, two isomorphic weak units.
pub fn codiscrete_two_units() -> StrictCompBicategory {
    codiscrete_semigroup(&cyclic(2), 1)
}

/// A fixed, named corpus of bicategories used by the round-trip checks.
pub fn bicategory_corpus() -> Vec<(String, StrictCompBicategory)> {
    let ms = monoid_catalogue();
    let ss = semigroup_catalogue();
    let by = |list: &[Semigroup], name: &str| list.iter().find(|m| m.name == name).unwrap().clone();
    vec![
        ("strict Z2".into(), strict_monoid(&cyclic(2))),
        ("strict Z3".into(), strict_monoid(&cyclic(3))),
        ("strict mul01".into(), strict_monoid(&by(&ms, "mul01"))),
        ("codiscrete Z2".into(), codiscrete_two_units()),
        (
            "codiscrete leftzero".into(),
            codiscrete_semigroup(&by(&ss, "leftzero"), 0),
        ),
        ("codiscrete null3".into(), codiscrete_semigroup(&by(&ss, "null3"), 2)),
        ("Z2 twisted by Z2".into(), monoid_with_twists(&cyclic(2), 2, 1)),
        ("max3 twisted by Z3".into(), monoid_with_twists(&by(&ms, "max3"), 3, 1)),
        (
            "codiscrete Z2 on two objects".into(),
            spread(&codiscrete_two_units(), Pattern::AllPairs),
        ),
        (
            "strict Z2 beside codiscrete rightzero".into(),
            disjoint_union(
                &strict_monoid(&cyclic(2)),
                &codiscrete_semigroup(&by(&ss, "rightzero"), 1),
            ),
        ),
        (
            "walking arrow over mul01 twisted by Z2".into(),
            spread(&monoid_with_twists(&by(&ms, "mul01"), 2, 0), Pattern::WalkingArrow),
        ),
        (
            "strict Z3 on two objects".into(),
            spread(&strict_monoid(&cyclic(3)), Pattern::AllPairs),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::validate_bicategory;
    use crate::fairset::validate_fair_set;

    #[test]
    fn categories_are_valid_and_bounded() {
        let mut s = Sampler::new(7);
        for _ in 0..100 {
            let c = s.category();
            assert!(c.validate().is_valid());
            assert!(c.num_objects() <= MAX_OBJECTS && c.num_arrows() <= MAX_ARROWS);
        }
    }

    #[test]
    fn same_seed_same_output() {
        let a: Vec<FinCategory> = {
            let mut s = Sampler::new(3);
            (0..10).map(|_| s.category()).collect()
        };
        let b: Vec<FinCategory> = {
            let mut s = Sampler::new(3);
            (0..10).map(|_| s.category()).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn free_category_counts_paths() {
        // square 0→1→3, 0→2→3: 4 identities, 4 edges, 2 long paths
        let c = free_category(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(c.num_arrows(), 10);
        assert!(c.validate().is_valid());
    }

    #[test]
    fn catalogue_is_associative() {
        for m in monoid_catalogue().iter().chain(semigroup_catalogue().iter()) {
            let n = m.len();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(m.mul[m.mul[a][b]][c], m.mul[a][m.mul[b][c]], "{}", m.name);
                    }
                }
                if let Some(e) = m.unit {
                    assert_eq!(m.mul[e][a], a);
                    assert_eq!(m.mul[a][e], a);
                }
            }
        }
    }

    #[test]
    fn generated_structures_validate() {
        let mut s = Sampler::new(11);
        for _ in 0..30 {
            assert!(validate_fair_set(&s.fair_set()).is_valid());
            let b = s.bicategory();
            assert!(validate_bicategory(&b).is_valid(), "{}", validate_bicategory(&b));
        }
        for (name, b) in bicategory_corpus() {
            assert!(
                validate_bicategory(&b).is_valid(),
                "{name}: {}",
                validate_bicategory(&b)
            );
        }
    }
}
