//! Finite categories given by explicit composition tables, and functors between them.
//!
//! Composition is written in diagrammatic order: `compose(f, g)` is "`f` then `g`",
//! i.e. `g ∘ f`, defined when `tgt(f) == src(g)`. Objects and arrows carry opaque
//! string identifiers; derived constructions generate deterministic fresh ones
//! (`(a,b)` for pairs, `x@i` for summands, `id_x` for discrete identities).

use std::collections::{HashMap, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::par::{self, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// Outcome of a law check: valid iff there are no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub violations: Vec<String>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, violation: impl Into<String>) {
        self.violations.push(violation.into());
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: Verdict) {
        self.violations
            .extend(other.violations.into_iter().map(|v| format!("{prefix}: {v}")));
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid(self.violations))
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    /// `compose[f * |arrows| + g]`, for every pair the table mentions.
    compose: Vec<Option<usize>>,
    homs: Vec<Vec<usize>>,
    object_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl FinCategory {
    /// Builds a category from index data. `compose(f, g)` is consulted for every
    /// composable pair; structural problems (dangling indices) are errors, law
    /// violations are left to [`FinCategory::validate`].
    pub fn from_indexed<F>(objects: Vec<String>, arrows: Vec<Arrow>, identities: Vec<usize>, compose: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Option<usize>,
    {
        let n = arrows.len();
        let mut table = vec![None; n * n];
        for f in 0..n {
            for g in 0..n {
                if arrows[f].tgt == arrows[g].src {
                    table[f * n + g] = compose(f, g);
                }
            }
        }
        Self::assemble(objects, arrows, identities, table)
    }

    fn assemble(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Result<Self> {
        let mut object_index = HashMap::with_capacity(objects.len());
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate object `{o}`")));
            }
        }
        let mut arrow_index = HashMap::with_capacity(arrows.len());
        for (i, a) in arrows.iter().enumerate() {
            if a.src >= objects.len() || a.tgt >= objects.len() {
                return Err(Error::Malformed(format!("arrow `{}` has a dangling endpoint", a.id)));
            }
            if arrow_index.insert(a.id.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate arrow `{}`", a.id)));
            }
        }
        if identities.len() != objects.len() {
            return Err(Error::Malformed(format!(
                "{} identities for {} objects",
                identities.len(),
                objects.len()
            )));
        }
        if let Some(&bad) = identities.iter().find(|&&i| i >= arrows.len()) {
            return Err(Error::Malformed(format!("identity index {bad} out of range")));
        }
        if let Some(&Some(bad)) = compose.iter().find(|c| matches!(c, Some(h) if *h >= arrows.len())) {
            return Err(Error::Malformed(format!("composite index {bad} out of range")));
        }
        let no = objects.len();
        let mut homs = vec![Vec::new(); no * no];
        for (i, a) in arrows.iter().enumerate() {
            homs[a.src * no + a.tgt].push(i);
        }
        Ok(Self {
            objects,
            arrows,
            identities,
            compose,
            homs,
            object_index,
            arrow_index,
        })
    }

    /// Builds a category from identifiers. `compose` lists triples `[f, g, g∘f]`.
    pub fn from_names(
        objects: Vec<String>,
        arrows: Vec<(String, String, String)>,
        identities: &[(String, String)],
        compose: &[(String, String, String)],
    ) -> Result<Self> {
        let object_index: HashMap<&str, usize> = objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        let obj = |name: &str| {
            object_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownObject(name.to_string()))
        };
        let arrows: Vec<Arrow> = arrows
            .into_iter()
            .map(|(id, s, t)| {
                Ok(Arrow {
                    src: obj(&s)?,
                    tgt: obj(&t)?,
                    id,
                })
            })
            .collect::<Result<_>>()?;
        let arrow_index: HashMap<&str, usize> = arrows.iter().enumerate().map(|(i, a)| (a.id.as_str(), i)).collect();
        let arr = |name: &str| {
            arrow_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Malformed(format!("unknown arrow `{name}`")))
        };
        let mut ids = vec![None; objects.len()];
        for (o, a) in identities {
            let slot = &mut ids[obj(o)?];
            if slot.is_some() {
                return Err(Error::Malformed(format!("object `{o}` has two identities")));
            }
            *slot = Some(arr(a)?);
        }
        let identities = ids
            .into_iter()
            .enumerate()
            .map(|(i, a)| a.ok_or_else(|| Error::Malformed(format!("object `{}` has no identity", objects[i]))))
            .collect::<Result<Vec<_>>>()?;
        let n = arrows.len();
        let mut table = vec![None; n * n];
        for (f, g, h) in compose {
            let slot = &mut table[arr(f)? * n + arr(g)?];
            if slot.is_some() {
                return Err(Error::Malformed(format!("composite of `{f}` and `{g}` given twice")));
            }
            *slot = Some(arr(h)?);
        }
        Self::assemble(objects, arrows, identities, table)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.object_index.get(name).copied()
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrow_index.get(name).copied()
    }

    pub fn arrow(&self, f: usize) -> &Arrow {
        &self.arrows[f]
    }

    pub fn src(&self, f: usize) -> usize {
        self.arrows[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.arrows[f].tgt
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    /// `f` then `g`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.compose[f * self.arrows.len() + g]
    }

    /// Like [`FinCategory::compose`], for callers that have already checked
    /// composability on a validated category.
    pub fn comp(&self, f: usize, g: usize) -> usize {
        self.compose(f, g)
            .unwrap_or_else(|| panic!("`{}` and `{}` do not compose", self.arrows[f].id, self.arrows[g].id))
    }

    /// Every recorded composite as `(f, g, f then g)`, ordered by `f` then `g`.
    pub fn composition_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.arrows.len();
        (0..n * n)
            .filter_map(|k| self.compose[k].map(|h| (k / n, k % n, h)))
            .collect()
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.homs[x * self.objects.len() + y]
    }

    pub fn is_identity_arrow(&self, f: usize) -> bool {
        self.identities[self.arrows[f].src] == f
    }

    /// Only identity arrows.
    pub fn is_discrete(&self) -> bool {
        self.arrows.len() == self.objects.len() && (0..self.arrows.len()).all(|f| self.is_identity_arrow(f))
    }

    /// A two-sided inverse of `f`, if one exists.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let a = &self.arrows[f];
        self.hom(a.tgt, a.src).iter().copied().find(|&g| {
            self.compose(f, g) == Some(self.identities[a.src]) && self.compose(g, f) == Some(self.identities[a.tgt])
        })
    }

    pub fn is_iso(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    /// Nonempty, with every hom-set a singleton.
    pub fn is_contractible(&self) -> bool {
        !self.objects.is_empty() && self.homs.iter().all(|h| h.len() == 1)
    }

    /// Composite of a nonempty path.
    pub fn compose_path(&self, path: &[usize]) -> Option<usize> {
        let (&first, rest) = path.split_first()?;
        rest.iter().try_fold(first, |acc, &g| self.compose(acc, g))
    }

    pub fn validate(&self) -> Verdict {
        self.validate_with(Mode::default())
    }

    /// Checks identities, totality of composition on composable pairs, endpoint
    /// bookkeeping, unit laws, and associativity on every composable triple.
    pub fn validate_with(&self, mode: Mode) -> Verdict {
        let n = self.arrows.len();
        let mut verdict = Verdict::default();
        for (x, &i) in self.identities.iter().enumerate() {
            let a = &self.arrows[i];
            if a.src != x || a.tgt != x {
                verdict.push(format!(
                    "identity `{}` of `{}` is not an endomorphism of it",
                    a.id, self.objects[x]
                ));
            }
        }
        for f in 0..n {
            for g in 0..n {
                let (af, ag) = (&self.arrows[f], &self.arrows[g]);
                match (af.tgt == ag.src, self.compose(f, g)) {
                    (true, None) => verdict.push(format!("missing composite of ({}, {})", af.id, ag.id)),
                    (false, Some(_)) => verdict.push(format!(
                        "composite given for non-composable pair ({}, {})",
                        af.id, ag.id
                    )),
                    (true, Some(h)) => {
                        let ah = &self.arrows[h];
                        if ah.src != af.src || ah.tgt != ag.tgt {
                            verdict.push(format!(
                                "composite of ({}, {}) is `{}` with wrong endpoints",
                                af.id, ag.id, ah.id
                            ));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        if !verdict.is_valid() {
            return verdict;
        }
        for f in 0..n {
            let a = &self.arrows[f];
            if self.compose(self.identities[a.src], f) != Some(f) {
                verdict.push(format!("left unit law fails for `{}`", a.id));
            }
            if self.compose(f, self.identities[a.tgt]) != Some(f) {
                verdict.push(format!("right unit law fails for `{}`", a.id));
            }
        }
        let failures = par::flat_map_range(mode, n, |f| {
            let mut out = Vec::new();
            let y = self.arrows[f].tgt;
            for x in 0..self.objects.len() {
                for &g in self.hom(y, x) {
                    let fg = self.comp(f, g);
                    for z in 0..self.objects.len() {
                        for &h in self.hom(x, z) {
                            if self.compose(fg, h) != self.compose(f, self.comp(g, h)) {
                                out.push(format!(
                                    "associativity fails on ({}, {}, {})",
                                    self.arrows[f].id, self.arrows[g].id, self.arrows[h].id
                                ));
                            }
                        }
                    }
                }
            }
            out
        });
        verdict.violations.extend(failures);
        verdict
    }

    /// The full subcategory on `objects` (kept in the given order), with the indices of
    /// the arrows it keeps.
    pub fn full_subcategory(&self, objects: &[usize]) -> (FinCategory, Vec<usize>) {
        let mut local = vec![usize::MAX; self.objects.len()];
        for (i, &x) in objects.iter().enumerate() {
            local[x] = i;
        }
        let kept: Vec<usize> = (0..self.arrows.len())
            .filter(|&f| local[self.src(f)] != usize::MAX && local[self.tgt(f)] != usize::MAX)
            .collect();
        let mut arrow_local = vec![usize::MAX; self.arrows.len()];
        for (i, &f) in kept.iter().enumerate() {
            arrow_local[f] = i;
        }
        let sub = FinCategory::from_indexed(
            objects.iter().map(|&x| self.objects[x].clone()).collect(),
            kept.iter()
                .map(|&f| Arrow {
                    id: self.arrows[f].id.clone(),
                    src: local[self.src(f)],
                    tgt: local[self.tgt(f)],
                })
                .collect(),
            objects.iter().map(|&x| arrow_local[self.identities[x]]).collect(),
            |f, g| self.compose(kept[f], kept[g]).map(|h| arrow_local[h]),
        )
        .expect("full subcategories are well formed");
        (sub, kept)
    }
}

/// The category with no objects.
pub fn empty() -> FinCategory {
    FinCategory::from_indexed(Vec::new(), Vec::new(), Vec::new(), |_, _| None).unwrap()
}

/// The discrete category on a set of names.
pub fn delta_discrete<S: AsRef<str>>(names: &[S]) -> FinCategory {
    let objects: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    let arrows = objects
        .iter()
        .enumerate()
        .map(|(i, o)| Arrow {
            id: format!("id_{o}"),
            src: i,
            tgt: i,
        })
        .collect();
    let n = objects.len();
    FinCategory::from_indexed(objects, arrows, (0..n).collect(), |f, g| (f == g).then_some(f))
        .expect("distinct names give a discrete category")
}

pub fn terminal() -> FinCategory {
    delta_discrete(&["*"])
}

/// The ordinal `0 ≤ 1 ≤ … ≤ n` as a category; arrow `i≤j` is named `i<=j`.
pub fn ordinal_category(n: usize) -> FinCategory {
    let rel: Vec<(usize, usize)> = (0..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    preorder(&(0..=n).map(|i| i.to_string()).collect::<Vec<_>>(), &rel).expect("total orders are preorders")
}

/// The preorder category on `names` generated by `relation` (reflexive-transitive
/// closure). Arrow `x≤y` is named `x<=y`.
pub fn preorder<S: AsRef<str>>(names: &[S], relation: &[(usize, usize)]) -> Result<FinCategory> {
    let n = names.len();
    let mut le = vec![false; n * n];
    for i in 0..n {
        le[i * n + i] = true;
    }
    for &(a, b) in relation {
        if a >= n || b >= n {
            return Err(Error::Malformed(format!("relation pair ({a}, {b}) out of range")));
        }
        le[a * n + b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i * n + k] && le[k * n + j] {
                    le[i * n + j] = true;
                }
            }
        }
    }
    let objects: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    let mut arrows = Vec::new();
    let mut index = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if le[i * n + j] {
                index.insert((i, j), arrows.len());
                arrows.push(Arrow {
                    id: format!("{}<={}", objects[i], objects[j]),
                    src: i,
                    tgt: j,
                });
            }
        }
    }
    let identities = (0..n).map(|i| index[&(i, i)]).collect();
    let ends: Vec<(usize, usize)> = arrows.iter().map(|a| (a.src, a.tgt)).collect();
    FinCategory::from_indexed(objects, arrows, identities, |f, g| {
        index.get(&(ends[f].0, ends[g].1)).copied()
    })
}

/// The codiscrete groupoid: exactly one arrow `x→y` for every pair, named `x>y`.
pub fn codiscrete<S: AsRef<str>>(names: &[S]) -> FinCategory {
    let n = names.len();
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let objects: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    let arrows = all
        .iter()
        .map(|&(i, j)| Arrow {
            id: format!("{}>{}", objects[i], objects[j]),
            src: i,
            tgt: j,
        })
        .collect();
    FinCategory::from_indexed(objects, arrows, (0..n).map(|i| i * n + i).collect(), |f, g| {
        Some((f / n) * n + g % n)
    })
    .expect("codiscrete categories are well formed")
}

/// One-object category of a finite monoid given by its multiplication table
/// (`mul[a][b]` is `a` then `b`).
pub fn from_monoid<S: AsRef<str>>(elements: &[S], unit: usize, mul: &[Vec<usize>]) -> Result<FinCategory> {
    let arrows = elements
        .iter()
        .map(|e| Arrow {
            id: e.as_ref().to_string(),
            src: 0,
            tgt: 0,
        })
        .collect();
    FinCategory::from_indexed(vec!["*".to_string()], arrows, vec![unit], |f, g| {
        mul.get(f).and_then(|row| row.get(g)).copied()
    })
}

/// Connected components (zigzag classes) of objects, numbered in order of first
/// appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub of_object: Vec<usize>,
}

impl Components {
    fn from_labels(labels: impl IntoIterator<Item = usize>) -> Self {
        let mut renumber = HashMap::new();
        let of_object: Vec<usize> = labels
            .into_iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(l).or_insert(next)
            })
            .collect();
        Self {
            count: renumber.len(),
            of_object,
        }
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (x, &c) in self.of_object.iter().enumerate() {
            out[c].push(x);
        }
        out
    }
}

pub fn pi0(c: &FinCategory) -> Components {
    let mut uf = UnionFind::<usize>::new(c.num_objects());
    for a in c.arrows() {
        uf.union(a.src, a.tgt);
    }
    Components::from_labels((0..c.num_objects()).map(|x| uf.find(x)))
}

/// Isomorphism classes of objects, with the comparison into components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truncation {
    pub classes: Components,
    pub to_components: Vec<usize>,
}

pub fn tau0(c: &FinCategory) -> Truncation {
    let mut uf = UnionFind::<usize>::new(c.num_objects());
    for f in 0..c.num_arrows() {
        if c.is_iso(f) {
            uf.union(c.src(f), c.tgt(f));
        }
    }
    let classes = Components::from_labels((0..c.num_objects()).map(|x| uf.find(x)));
    let components = pi0(c);
    let mut to_components = vec![0; classes.count];
    for x in 0..c.num_objects() {
        to_components[classes.of_object[x]] = components.of_object[x];
    }
    Truncation { classes, to_components }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    src: FinCategory,
    dst: FinCategory,
    obj_map: Vec<usize>,
    arr_map: Vec<usize>,
}

impl FinFunctor {
    pub fn new(src: FinCategory, dst: FinCategory, obj_map: Vec<usize>, arr_map: Vec<usize>) -> Result<Self> {
        if obj_map.len() != src.num_objects() || arr_map.len() != src.num_arrows() {
            return Err(Error::Malformed("functor tables do not cover the source".into()));
        }
        if obj_map.iter().any(|&x| x >= dst.num_objects()) || arr_map.iter().any(|&f| f >= dst.num_arrows()) {
            return Err(Error::Malformed("functor tables leave the target".into()));
        }
        Ok(Self {
            src,
            dst,
            obj_map,
            arr_map,
        })
    }

    pub fn from_names(
        src: FinCategory,
        dst: FinCategory,
        obj_map: &[(String, String)],
        arr_map: &[(String, String)],
    ) -> Result<Self> {
        let mut objs = vec![None; src.num_objects()];
        for (a, b) in obj_map {
            let i = src.object_index(a).ok_or_else(|| Error::UnknownObject(a.clone()))?;
            let j = dst.object_index(b).ok_or_else(|| Error::UnknownObject(b.clone()))?;
            objs[i] = Some(j);
        }
        let mut arrs = vec![None; src.num_arrows()];
        for (a, b) in arr_map {
            let i = src
                .arrow_index(a)
                .ok_or_else(|| Error::Malformed(format!("unknown arrow `{a}`")))?;
            let j = dst
                .arrow_index(b)
                .ok_or_else(|| Error::Malformed(format!("unknown arrow `{b}`")))?;
            arrs[i] = Some(j);
        }
        let objs = objs
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| Error::Malformed(format!("object `{}` is not mapped", src.objects()[i]))))
            .collect::<Result<_>>()?;
        let arrs = arrs
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| Error::Malformed(format!("arrow `{}` is not mapped", src.arrows()[i].id))))
            .collect::<Result<_>>()?;
        Self::new(src, dst, objs, arrs)
    }

    pub fn identity(c: &FinCategory) -> Self {
        Self {
            src: c.clone(),
            dst: c.clone(),
            obj_map: (0..c.num_objects()).collect(),
            arr_map: (0..c.num_arrows()).collect(),
        }
    }

    pub fn src(&self) -> &FinCategory {
        &self.src
    }

    pub fn dst(&self) -> &FinCategory {
        &self.dst
    }

    pub fn obj_map(&self) -> &[usize] {
        &self.obj_map
    }

    pub fn arr_map(&self) -> &[usize] {
        &self.arr_map
    }

    pub fn on_object(&self, x: usize) -> usize {
        self.obj_map[x]
    }

    pub fn on_arrow(&self, f: usize) -> usize {
        self.arr_map[f]
    }

    pub fn validate(&self) -> Verdict {
        let (s, d) = (&self.src, &self.dst);
        let mut verdict = Verdict::default();
        for f in 0..s.num_arrows() {
            let a = s.arrow(f);
            let b = d.arrow(self.arr_map[f]);
            if b.src != self.obj_map[a.src] || b.tgt != self.obj_map[a.tgt] {
                verdict.push(format!("`{}` ↦ `{}` does not respect endpoints", a.id, b.id));
            }
        }
        for x in 0..s.num_objects() {
            if self.arr_map[s.identity(x)] != d.identity(self.obj_map[x]) {
                verdict.push(format!("identity of `{}` is not preserved", s.objects()[x]));
            }
        }
        if !verdict.is_valid() {
            return verdict;
        }
        for (f, g, h) in s.composition_triples() {
            if d.compose(self.arr_map[f], self.arr_map[g]) != Some(self.arr_map[h]) {
                verdict.push(format!(
                    "composite ({}, {}) is not preserved",
                    s.arrow(f).id,
                    s.arrow(g).id
                ));
            }
        }
        verdict
    }

    /// `self` then `next`.
    pub fn then(&self, next: &FinFunctor) -> Result<FinFunctor> {
        if self.dst != next.src {
            return Err(Error::Mismatch {
                left: "functor target".into(),
                right: "functor source".into(),
            });
        }
        Ok(FinFunctor {
            src: self.src.clone(),
            dst: next.dst.clone(),
            obj_map: self.obj_map.iter().map(|&x| next.obj_map[x]).collect(),
            arr_map: self.arr_map.iter().map(|&f| next.arr_map[f]).collect(),
        })
    }

    /// Bijective on objects and arrows (and a valid functor).
    pub fn is_isomorphism(&self) -> bool {
        fn bijective(map: &[usize], size: usize) -> bool {
            let mut seen = vec![false; size];
            map.len() == size && map.iter().all(|&i| !std::mem::replace(&mut seen[i], true))
        }
        bijective(&self.obj_map, self.dst.num_objects())
            && bijective(&self.arr_map, self.dst.num_arrows())
            && self.validate().is_valid()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquimorphismReport {
    pub fully_faithful: bool,
    pub essentially_surjective: bool,
    pub equimorphism: bool,
}

pub fn equimorphism_report(f: &FinFunctor) -> EquimorphismReport {
    equimorphism_report_with(f, Mode::default())
}

/// Fully faithful: every `Hom(x,y) → Hom(Fx,Fy)` is a bijection. Essentially
/// surjective: the induced map on isomorphism classes is onto.
pub fn equimorphism_report_with(f: &FinFunctor, mode: Mode) -> EquimorphismReport {
    let (s, d) = (&f.src, &f.dst);
    let no = s.num_objects();
    let fully_faithful = par::map_range(mode, no, |x| {
        (0..no).all(|y| {
            let source = s.hom(x, y);
            let target = d.hom(f.obj_map[x], f.obj_map[y]);
            if source.len() != target.len() {
                return false;
            }
            let mut images: Vec<usize> = source.iter().map(|&a| f.arr_map[a]).collect();
            images.sort_unstable();
            images.dedup();
            images.len() == source.len()
        })
    })
    .into_iter()
    .all(|b| b);
    let truncation = tau0(d);
    let mut hit = vec![false; truncation.classes.count];
    for &y in &f.obj_map {
        hit[truncation.classes.of_object[y]] = true;
    }
    let essentially_surjective = hit.into_iter().all(|b| b);
    EquimorphismReport {
        fully_faithful,
        essentially_surjective,
        equimorphism: fully_faithful && essentially_surjective,
    }
}

/// Binary product with its two projections. `obj_pairs[k]` and `arr_pairs[k]` give
/// the components of object/arrow `k`.
#[derive(Debug, Clone)]
pub struct Product {
    pub category: FinCategory,
    pub left: FinFunctor,
    pub right: FinFunctor,
    pub obj_pairs: Vec<(usize, usize)>,
    pub arr_pairs: Vec<(usize, usize)>,
}

pub fn binary_product(a: &FinCategory, b: &FinCategory) -> Product {
    let obj_pairs: Vec<(usize, usize)> = (0..a.num_objects())
        .flat_map(|x| (0..b.num_objects()).map(move |y| (x, y)))
        .collect();
    let arr_pairs: Vec<(usize, usize)> = (0..a.num_arrows())
        .flat_map(|f| (0..b.num_arrows()).map(move |g| (f, g)))
        .collect();
    let nbo = b.num_objects();
    let nba = b.num_arrows();
    let category = FinCategory::from_indexed(
        obj_pairs
            .iter()
            .map(|&(x, y)| format!("({},{})", a.objects()[x], b.objects()[y]))
            .collect(),
        arr_pairs
            .iter()
            .map(|&(f, g)| Arrow {
                id: format!("({},{})", a.arrow(f).id, b.arrow(g).id),
                src: a.src(f) * nbo + b.src(g),
                tgt: a.tgt(f) * nbo + b.tgt(g),
            })
            .collect(),
        obj_pairs
            .iter()
            .map(|&(x, y)| a.identity(x) * nba + b.identity(y))
            .collect(),
        |p, q| {
            let (f1, g1) = (p / nba, p % nba);
            let (f2, g2) = (q / nba, q % nba);
            Some(a.compose(f1, f2)? * nba + b.compose(g1, g2)?)
        },
    )
    .expect("products of well-formed categories are well formed");
    let left = FinFunctor::new(
        category.clone(),
        a.clone(),
        obj_pairs.iter().map(|p| p.0).collect(),
        arr_pairs.iter().map(|p| p.0).collect(),
    )
    .unwrap();
    let right = FinFunctor::new(
        category.clone(),
        b.clone(),
        obj_pairs.iter().map(|p| p.1).collect(),
        arr_pairs.iter().map(|p| p.1).collect(),
    )
    .unwrap();
    Product {
        category,
        left,
        right,
        obj_pairs,
        arr_pairs,
    }
}

/// A coproduct, remembering which summand (and which local index) everything came from.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub category: FinCategory,
    pub obj_origin: Vec<(usize, usize)>,
    pub arr_origin: Vec<(usize, usize)>,
    /// Offsets of each summand's objects and arrows.
    pub obj_offset: Vec<usize>,
    pub arr_offset: Vec<usize>,
}

impl Coproduct {
    /// The injection of summand `i`, on objects.
    pub fn inject_object(&self, i: usize, x: usize) -> usize {
        self.obj_offset[i] + x
    }

    pub fn inject_arrow(&self, i: usize, f: usize) -> usize {
        self.arr_offset[i] + f
    }
}

/// Disjoint union, naming each object/arrow with `rename(summand, id)`.
pub fn coproduct_with<F>(parts: &[&FinCategory], rename: F) -> Result<Coproduct>
where
    F: Fn(usize, &str) -> String,
{
    let mut objects = Vec::new();
    let mut arrows = Vec::new();
    let mut identities = Vec::new();
    let mut obj_origin = Vec::new();
    let mut arr_origin = Vec::new();
    let mut obj_offset = Vec::new();
    let mut arr_offset = Vec::new();
    for (i, c) in parts.iter().enumerate() {
        let (oo, ao) = (objects.len(), arrows.len());
        obj_offset.push(oo);
        arr_offset.push(ao);
        for (x, name) in c.objects().iter().enumerate() {
            objects.push(rename(i, name));
            identities.push(ao + c.identity(x));
            obj_origin.push((i, x));
        }
        for (f, a) in c.arrows().iter().enumerate() {
            arrows.push(Arrow {
                id: rename(i, &a.id),
                src: oo + a.src,
                tgt: oo + a.tgt,
            });
            arr_origin.push((i, f));
        }
    }
    let category = FinCategory::from_indexed(objects, arrows, identities, |f, g| {
        let ((i, lf), (j, lg)) = (arr_origin[f], arr_origin[g]);
        if i != j {
            return None;
        }
        parts[i].compose(lf, lg).map(|h| arr_offset[i] + h)
    })?;
    Ok(Coproduct {
        category,
        obj_origin,
        arr_origin,
        obj_offset,
        arr_offset,
    })
}

/// Disjoint union of named summands; identifiers become `x@name`.
pub fn coproduct(parts: &[(String, FinCategory)]) -> Coproduct {
    let cats: Vec<&FinCategory> = parts.iter().map(|(_, c)| c).collect();
    coproduct_with(&cats, |i, id| format!("{id}@{}", parts[i].0)).expect("summand names keep identifiers distinct")
}

pub fn binary_coproduct(a: &FinCategory, b: &FinCategory) -> Coproduct {
    coproduct(&[("l".to_string(), a.clone()), ("r".to_string(), b.clone())])
}

/// The full subcategory of a functor's domain over one object of a discrete target.
#[derive(Debug, Clone)]
pub struct Fibre {
    pub index: String,
    pub category: FinCategory,
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

/// Splits the domain of `f: A → δI` into its fibres `A_i`, one per element of `I`.
pub fn decompose_over_discrete(f: &FinFunctor) -> Result<Vec<Fibre>> {
    let d = f.dst();
    if !d.is_discrete() {
        return Err(Error::Malformed("codomain is not discrete".into()));
    }
    f.validate().into_result()?;
    Ok((0..d.num_objects())
        .map(|i| {
            let objects: Vec<usize> = (0..f.src().num_objects()).filter(|&x| f.on_object(x) == i).collect();
            let (category, arrows) = f.src().full_subcategory(&objects);
            Fibre {
                index: d.objects()[i].clone(),
                category,
                objects,
                arrows,
            }
        })
        .collect())
}

/// `A ×_{δI} B`, with projections. `obj_pairs`/`arr_pairs` index into `A` and `B`.
pub type FibreProduct = Product;

/// Computed as the sum over `i` of the products `A_i × B_i` of fibres.
pub fn fibre_product_over_discrete(f: &FinFunctor, g: &FinFunctor) -> Result<FibreProduct> {
    if f.dst() != g.dst() {
        return Err(Error::Mismatch {
            left: "first functor's codomain".into(),
            right: "second functor's codomain".into(),
        });
    }
    let fa = decompose_over_discrete(f)?;
    let fb = decompose_over_discrete(g)?;
    let pieces: Vec<Product> = fa
        .iter()
        .zip(&fb)
        .map(|(x, y)| binary_product(&x.category, &y.category))
        .collect();
    let cats: Vec<&FinCategory> = pieces.iter().map(|p| &p.category).collect();
    let sum = coproduct_with(&cats, |_, id| id.to_string())?;
    let obj_pairs: Vec<(usize, usize)> = sum
        .obj_origin
        .iter()
        .map(|&(i, x)| {
            let (a, b) = pieces[i].obj_pairs[x];
            (fa[i].objects[a], fb[i].objects[b])
        })
        .collect();
    let arr_pairs: Vec<(usize, usize)> = sum
        .arr_origin
        .iter()
        .map(|&(i, x)| {
            let (a, b) = pieces[i].arr_pairs[x];
            (fa[i].arrows[a], fb[i].arrows[b])
        })
        .collect();
    let category = sum.category;
    let left = FinFunctor::new(
        category.clone(),
        f.src().clone(),
        obj_pairs.iter().map(|p| p.0).collect(),
        arr_pairs.iter().map(|p| p.0).collect(),
    )?;
    let right = FinFunctor::new(
        category.clone(),
        g.src().clone(),
        obj_pairs.iter().map(|p| p.1).collect(),
        arr_pairs.iter().map(|p| p.1).collect(),
    )?;
    Ok(Product {
        category,
        left,
        right,
        obj_pairs,
        arr_pairs,
    })
}

/// The functor `T → P` induced by a cone `p: T → A`, `q: T → B` into a product or
/// fibre product `P`.
pub fn mediating_functor(target: &Product, p: &FinFunctor, q: &FinFunctor) -> Result<FinFunctor> {
    let obj_lookup: HashMap<(usize, usize), usize> = target
        .obj_pairs
        .iter()
        .enumerate()
        .map(|(k, &pair)| (pair, k))
        .collect();
    let arr_lookup: HashMap<(usize, usize), usize> = target
        .arr_pairs
        .iter()
        .enumerate()
        .map(|(k, &pair)| (pair, k))
        .collect();
    let obj_map = (0..p.src().num_objects())
        .map(|x| {
            obj_lookup
                .get(&(p.on_object(x), q.on_object(x)))
                .copied()
                .ok_or_else(|| Error::Invalid(vec!["cone does not factor on objects".into()]))
        })
        .collect::<Result<_>>()?;
    let arr_map = (0..p.src().num_arrows())
        .map(|f| {
            arr_lookup
                .get(&(p.on_arrow(f), q.on_arrow(f)))
                .copied()
                .ok_or_else(|| Error::Invalid(vec!["cone does not factor on arrows".into()]))
        })
        .collect::<Result<_>>()?;
    FinFunctor::new(p.src().clone(), target.category.clone(), obj_map, arr_map)
}

/// The sum `∐ A_i → ∐ B_i` of a family of functors, on the named coproducts of their
/// sources and targets.
pub fn coproduct_functor(parts: &[(String, FinFunctor)]) -> Result<FinFunctor> {
    let srcs = coproduct(
        &parts
            .iter()
            .map(|(n, f)| (n.clone(), f.src().clone()))
            .collect::<Vec<_>>(),
    );
    let dsts = coproduct(
        &parts
            .iter()
            .map(|(n, f)| (n.clone(), f.dst().clone()))
            .collect::<Vec<_>>(),
    );
    let obj_map = srcs
        .obj_origin
        .iter()
        .map(|&(i, x)| dsts.inject_object(i, parts[i].1.on_object(x)))
        .collect();
    let arr_map = srcs
        .arr_origin
        .iter()
        .map(|&(i, f)| dsts.inject_arrow(i, parts[i].1.on_arrow(f)))
        .collect();
    FinFunctor::new(srcs.category, dsts.category, obj_map, arr_map)
}

/// Whether the commuting square `p: P → A`, `q: P → B` over `f: A → δI`, `g: B → δI`
/// is a pullback, by comparing `P` with the computed fibre product.
pub fn is_pullback_square(p: &FinFunctor, q: &FinFunctor, f: &FinFunctor, g: &FinFunctor) -> Result<bool> {
    if p.then(f)? != q.then(g)? {
        return Ok(false);
    }
    let fp = fibre_product_over_discrete(f, g)?;
    Ok(mediating_functor(&fp, p, q)?.is_isomorphism())
}

/// Reorders a category: object `k` of the result is object `objects[k]` of `c`, and
/// likewise for arrows. Returns the result with the isomorphism onto `c`.
pub fn permuted(c: &FinCategory, objects: &[usize], arrows: &[usize]) -> Result<(FinCategory, FinFunctor)> {
    let mut obj_inv = vec![usize::MAX; c.num_objects()];
    for (k, &x) in objects.iter().enumerate() {
        obj_inv[x] = k;
    }
    let mut arr_inv = vec![usize::MAX; c.num_arrows()];
    for (k, &f) in arrows.iter().enumerate() {
        arr_inv[f] = k;
    }
    if obj_inv.contains(&usize::MAX) || arr_inv.contains(&usize::MAX) {
        return Err(Error::Malformed("not a permutation".into()));
    }
    let out = FinCategory::from_indexed(
        objects.iter().map(|&x| c.objects()[x].clone()).collect(),
        arrows
            .iter()
            .map(|&f| Arrow {
                id: c.arrow(f).id.clone(),
                src: obj_inv[c.src(f)],
                tgt: obj_inv[c.tgt(f)],
            })
            .collect(),
        objects.iter().map(|&x| arr_inv[c.identity(x)]).collect(),
        |f, g| c.compose(arrows[f], arrows[g]).map(|h| arr_inv[h]),
    )?;
    let iso = FinFunctor::new(out.clone(), c.clone(), objects.to_vec(), arrows.to_vec())?;
    Ok((out, iso))
}

/// Every functor `src → dst`, by backtracking over object and arrow assignments.
pub fn enumerate_functors(src: &FinCategory, dst: &FinCategory) -> Vec<FinFunctor> {
    let mut out = Vec::new();
    let no = src.num_objects();
    let mut obj_map = vec![0; no];
    fn objects_rec(
        k: usize,
        src: &FinCategory,
        dst: &FinCategory,
        obj_map: &mut Vec<usize>,
        out: &mut Vec<FinFunctor>,
    ) {
        if k == src.num_objects() {
            let mut arr_map = vec![usize::MAX; src.num_arrows()];
            arrows_rec(0, src, dst, obj_map, &mut arr_map, out);
            return;
        }
        for y in 0..dst.num_objects() {
            obj_map[k] = y;
            objects_rec(k + 1, src, dst, obj_map, out);
        }
    }
    fn arrows_rec(
        k: usize,
        src: &FinCategory,
        dst: &FinCategory,
        obj_map: &[usize],
        arr_map: &mut Vec<usize>,
        out: &mut Vec<FinFunctor>,
    ) {
        if k == src.num_arrows() {
            let candidate = FinFunctor {
                src: src.clone(),
                dst: dst.clone(),
                obj_map: obj_map.to_vec(),
                arr_map: arr_map.clone(),
            };
            if candidate.validate().is_valid() {
                out.push(candidate);
            }
            return;
        }
        let a = src.arrow(k);
        let choices: Vec<usize> = if src.is_identity_arrow(k) {
            vec![dst.identity(obj_map[a.src])]
        } else {
            dst.hom(obj_map[a.src], obj_map[a.tgt]).to_vec()
        };
        for c in choices {
            arr_map[k] = c;
            arrows_rec(k + 1, src, dst, obj_map, arr_map, out);
        }
    }
    objects_rec(0, src, dst, &mut obj_map, &mut out);
    out
}

/// Breadth-first connectivity, kept separate from the union-find used by [`pi0`].
pub fn reachable_classes(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        label[start] = next;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if label[w] == usize::MAX {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    label
}
