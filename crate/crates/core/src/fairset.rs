//! Fair categories in `Set`: objects `O`, arrows `A` with partial composition, and a
//! set `U` of weak identity arrows injected into `A`.
//!
//! Only the triple is stored. The value of the induced presheaf at a coloured ordinal
//! is generated on demand as a set of composable strings.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fat::{ColouredOrdinal, FatMap};
use crate::fincat::{Arrow, FinCategory, Verdict};

/// A weak identity arrow: `base(w) = object`, `u(w) = arrow`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Unit {
    pub id: String,
    pub object: usize,
    pub arrow: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairSetCategory {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    compose: Vec<Option<usize>>,
    units: Vec<Unit>,
}

impl FairSetCategory {
    pub fn from_indexed<F>(objects: Vec<String>, arrows: Vec<Arrow>, compose: F, units: Vec<Unit>) -> Result<Self>
    where
        F: Fn(usize, usize) -> Option<usize>,
    {
        let n = arrows.len();
        let table = (0..n * n).map(|k| compose(k / n, k % n)).collect();
        Self::assemble(objects, arrows, table, units)
    }

    fn assemble(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        compose: Vec<Option<usize>>,
        units: Vec<Unit>,
    ) -> Result<Self> {
        let mut seen = HashMap::new();
        for o in &objects {
            if seen.insert(o.as_str(), ()).is_some() {
                return Err(Error::Malformed(format!("duplicate object `{o}`")));
            }
        }
        seen.clear();
        for a in &arrows {
            if a.src >= objects.len() || a.tgt >= objects.len() {
                return Err(Error::Malformed(format!("arrow `{}` has a dangling endpoint", a.id)));
            }
            if seen.insert(a.id.as_str(), ()).is_some() {
                return Err(Error::Malformed(format!("duplicate arrow `{}`", a.id)));
            }
        }
        if compose.iter().flatten().any(|&h| h >= arrows.len()) {
            return Err(Error::Malformed("composite out of range".into()));
        }
        seen.clear();
        for w in &units {
            if w.object >= objects.len() || w.arrow >= arrows.len() {
                return Err(Error::Malformed(format!(
                    "unit `{}` refers outside the structure",
                    w.id
                )));
            }
            if seen.insert(w.id.as_str(), ()).is_some() {
                return Err(Error::Malformed(format!("duplicate unit `{}`", w.id)));
            }
        }
        Ok(Self {
            objects,
            arrows,
            compose,
            units,
        })
    }

    /// `compose` lists `[f, g, f then g]`; `units` lists `(id, object, arrow)`.
    pub fn from_names(
        objects: Vec<String>,
        arrows: Vec<(String, String, String)>,
        compose: &[(String, String, String)],
        units: &[(String, String, String)],
    ) -> Result<Self> {
        let obj_index: HashMap<&str, usize> = objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        let obj = |n: &str| {
            obj_index
                .get(n)
                .copied()
                .ok_or_else(|| Error::UnknownObject(n.to_string()))
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
        let arr_index: HashMap<&str, usize> = arrows.iter().enumerate().map(|(i, a)| (a.id.as_str(), i)).collect();
        let arr = |n: &str| {
            arr_index
                .get(n)
                .copied()
                .ok_or_else(|| Error::Malformed(format!("unknown arrow `{n}`")))
        };
        let n = arrows.len();
        let mut table = vec![None; n * n];
        for (f, g, h) in compose {
            let slot = &mut table[arr(f)? * n + arr(g)?];
            if slot.is_some() {
                return Err(Error::Malformed(format!("composite of `{f}` and `{g}` given twice")));
            }
            *slot = Some(arr(h)?);
        }
        let units = units
            .iter()
            .map(|(id, o, a)| {
                Ok(Unit {
                    id: id.clone(),
                    object: obj(o)?,
                    arrow: arr(a)?,
                })
            })
            .collect::<Result<_>>()?;
        Self::assemble(objects, arrows, table, units)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn units(&self) -> &[Unit] {
        &self.units
    }

    /// `f` then `g`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.compose[f * self.arrows.len() + g]
    }

    pub fn composition_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.arrows.len();
        (0..n * n)
            .filter_map(|k| self.compose[k].map(|h| (k / n, k % n, h)))
            .collect()
    }

    fn unit_arrow_at(&self, x: usize) -> Option<usize> {
        self.units.iter().find(|w| w.object == x).map(|w| w.arrow)
    }

    fn is_unit_arrow(&self, a: usize) -> bool {
        self.units.iter().any(|w| w.arrow == a)
    }

    /// Arrows `x → y`.
    pub fn fibre(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].src == x && self.arrows[a].tgt == y)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairSetVerdict {
    pub verdict: Verdict,
    pub is_fair_monoid: bool,
    /// `s∘u = t∘u`.
    pub lemma_s_eq_t: bool,
    /// Every `u(w)` is a two-sided identity wherever it composes.
    pub strict_units: bool,
}

impl FairSetVerdict {
    pub fn is_valid(&self) -> bool {
        self.verdict.is_valid()
    }
}

/// Checks the axioms of a fair Set-category. The derived facts (weak identities are
/// endomorphisms, and act as strict identities) are computed separately; if the
/// axioms hold but a derived fact fails, that is reported as an internal violation.
pub fn validate_fair_set(x: &FairSetCategory) -> FairSetVerdict {
    let mut v = Verdict::default();
    let n = x.arrows.len();
    let name = |a: usize| x.arrows[a].id.as_str();

    for w in &x.units {
        let a = &x.arrows[w.arrow];
        if a.src != w.object || a.tgt != w.object {
            v.push(format!(
                "unit `{}` over `{}` is carried by `{}`, which is not an endomorphism of it",
                w.id, x.objects[w.object], a.id
            ));
        }
    }
    let mut over = vec![0usize; x.objects.len()];
    for w in &x.units {
        over[w.object] += 1;
    }
    for (o, &count) in over.iter().enumerate() {
        if count != 1 {
            v.push(format!(
                "object `{}` has {count} units over it; expected exactly 1",
                x.objects[o]
            ));
        }
    }
    for f in 0..n {
        for g in 0..n {
            let (af, ag) = (&x.arrows[f], &x.arrows[g]);
            match (af.tgt == ag.src, x.compose(f, g)) {
                (true, None) => v.push(format!("missing composite of ({}, {})", af.id, ag.id)),
                (false, Some(_)) => v.push(format!(
                    "composite given for non-composable pair ({}, {})",
                    af.id, ag.id
                )),
                (true, Some(h)) if x.arrows[h].src != af.src || x.arrows[h].tgt != ag.tgt => {
                    v.push(format!("composite of ({}, {}) has wrong endpoints", af.id, ag.id))
                }
                _ => {}
            }
        }
    }
    if !v.is_valid() {
        return finish(x, v);
    }
    for (f, g, fg) in x.composition_triples() {
        for h in 0..n {
            if let Some(gh) = x.compose(g, h) {
                if x.compose(fg, h) != x.compose(f, gh) {
                    v.push(format!(
                        "associativity fails on ({}, {}, {})",
                        name(f),
                        name(g),
                        name(h)
                    ));
                }
            }
        }
    }
    for w in &x.units {
        if x.compose(w.arrow, w.arrow) != Some(w.arrow) {
            v.push(format!("unit `{}` is not idempotent", w.id));
        }
        let o = w.object;
        for y in 0..x.objects.len() {
            let out = x.fibre(o, y);
            if !is_bijection(&out, |a| x.compose(w.arrow, a)) {
                v.push(format!(
                    "left translation by `{}` on arrows `{}`→`{}` is not bijective",
                    w.id, x.objects[o], x.objects[y]
                ));
            }
            let inc = x.fibre(y, o);
            if !is_bijection(&inc, |a| x.compose(a, w.arrow)) {
                v.push(format!(
                    "right translation by `{}` on arrows `{}`→`{}` is not bijective",
                    w.id, x.objects[y], x.objects[o]
                ));
            }
        }
    }
    finish(x, v)
}

fn is_bijection(domain: &[usize], f: impl Fn(usize) -> Option<usize>) -> bool {
    let mut image: Vec<usize> = match domain.iter().map(|&a| f(a)).collect::<Option<Vec<_>>>() {
        Some(i) => i,
        None => return false,
    };
    image.sort_unstable();
    image.dedup();
    image.as_slice() == domain
}

fn finish(x: &FairSetCategory, mut v: Verdict) -> FairSetVerdict {
    let lemma_s_eq_t = x.units.iter().all(|w| x.arrows[w.arrow].src == x.arrows[w.arrow].tgt);
    let strict_units = x.units.iter().all(|w| {
        (0..x.arrows.len()).all(|a| {
            (x.arrows[a].src != w.object || x.compose(w.arrow, a) == Some(a))
                && (x.arrows[a].tgt != w.object || x.compose(a, w.arrow) == Some(a))
        })
    });
    if v.is_valid() {
        if !lemma_s_eq_t {
            v.push("internal: a weak identity arrow is not an endomorphism");
        }
        if !strict_units {
            v.push("internal: a weak identity arrow is not a strict identity");
        }
    }
    FairSetVerdict {
        verdict: v,
        is_fair_monoid: x.objects.len() == 1,
        lemma_s_eq_t,
        strict_units,
    }
}

/// The category with objects `O`, arrows `A`, identities `u(base⁻¹(x))`.
pub fn theta(x: &FairSetCategory) -> Result<FinCategory> {
    validate_fair_set(x).verdict.into_result()?;
    let identities = (0..x.objects.len())
        .map(|o| x.unit_arrow_at(o).expect("validated"))
        .collect();
    FinCategory::from_indexed(x.objects.clone(), x.arrows.clone(), identities, |f, g| x.compose(f, g))
}

/// `U` is the set of identity arrows, each named after its arrow.
pub fn fair_nerve(c: &FinCategory) -> Result<FairSetCategory> {
    c.validate().into_result()?;
    let units = (0..c.num_objects())
        .map(|o| Unit {
            id: c.arrow(c.identity(o)).id.clone(),
            object: o,
            arrow: c.identity(o),
        })
        .collect();
    FairSetCategory::from_indexed(c.objects().to_vec(), c.arrows().to_vec(), |f, g| c.compose(f, g), units)
}

/// A morphism of fair Set-categories, given on each of the three sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairSetMap {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
    pub units: Vec<usize>,
}

impl FairSetMap {
    /// Structure-preserving and bijective on all three sets.
    pub fn is_isomorphism(&self, x: &FairSetCategory, y: &FairSetCategory) -> bool {
        fn bijective(map: &[usize], n: usize) -> bool {
            let mut seen = vec![false; n];
            map.len() == n && map.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
        }
        if !bijective(&self.objects, y.objects.len())
            || !bijective(&self.arrows, y.arrows.len())
            || !bijective(&self.units, y.units.len())
        {
            return false;
        }
        let arrows_ok = x.arrows.iter().enumerate().all(|(a, arr)| {
            let b = &y.arrows[self.arrows[a]];
            b.src == self.objects[arr.src] && b.tgt == self.objects[arr.tgt]
        });
        let compose_ok = (0..x.arrows.len()).all(|f| {
            (0..x.arrows.len())
                .all(|g| x.compose(f, g).map(|h| self.arrows[h]) == y.compose(self.arrows[f], self.arrows[g]))
        });
        let units_ok = x.units.iter().enumerate().all(|(w, unit)| {
            let v = &y.units[self.units[w]];
            v.object == self.objects[unit.object] && v.arrow == self.arrows[unit.arrow]
        });
        arrows_ok && compose_ok && units_ok
    }
}

/// The comparison `X → fair_nerve(theta(X))`: identity on objects and arrows, and
/// `w ↦ u(w)` on units.
pub fn unit_iso(x: &FairSetCategory) -> Result<FairSetMap> {
    let nerve = fair_nerve(&theta(x)?)?;
    let units = x
        .units
        .iter()
        .map(|w| {
            nerve
                .units
                .iter()
                .position(|v| v.arrow == w.arrow)
                .ok_or_else(|| Error::Internal(format!("no identity arrow for unit `{}`", w.id)))
        })
        .collect::<Result<_>>()?;
    Ok(FairSetMap {
        objects: (0..x.objects.len()).collect(),
        arrows: (0..x.arrows.len()).collect(),
        units,
    })
}

/// An element of the value at a coloured ordinal with `arrows.len() + 1` dots: a
/// composable string starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Chain {
    /// The object sitting at dot `d`.
    pub fn object_at(&self, x: &FairSetCategory, d: usize) -> usize {
        if d == 0 {
            self.start
        } else {
            x.arrows[self.arrows[d - 1]].tgt
        }
    }
}

/// Composable strings over `k`, with unit arrows at linked edges, in lexicographic order.
pub fn evaluate_object(x: &FairSetCategory, k: &ColouredOrdinal) -> Vec<Chain> {
    let mut out = Vec::new();
    for start in 0..x.objects.len() {
        let mut chain = Chain {
            start,
            arrows: Vec::with_capacity(k.top()),
        };
        extend_chains(x, k, &mut chain, &mut out);
    }
    out
}

fn extend_chains(x: &FairSetCategory, k: &ColouredOrdinal, chain: &mut Chain, out: &mut Vec<Chain>) {
    let edge = chain.arrows.len();
    if edge == k.top() {
        out.push(chain.clone());
        return;
    }
    let here = chain.object_at(x, edge);
    for a in 0..x.arrows.len() {
        if x.arrows[a].src != here || (k.is_linked(edge) && !x.is_unit_arrow(a)) {
            continue;
        }
        chain.arrows.push(a);
        extend_chains(x, k, chain, out);
        chain.arrows.pop();
    }
}

/// The function induced by `phi: K → L`, from strings over `L` to strings over `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluatedMap {
    pub domain: Vec<Chain>,
    pub codomain: Vec<Chain>,
    /// `table[i]` is the index in `codomain` of the image of `domain[i]`.
    pub table: Vec<usize>,
}

impl EvaluatedMap {
    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.codomain.len()];
        self.domain.len() == self.codomain.len() && self.table.iter().all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    /// `self` then `next` (as functions).
    pub fn then(&self, next: &EvaluatedMap) -> Option<EvaluatedMap> {
        if self.codomain != next.domain {
            return None;
        }
        Some(EvaluatedMap {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            table: self.table.iter().map(|&j| next.table[j]).collect(),
        })
    }
}

/// Restricts one string along `phi`: entry `i` composes the entries spanned by
/// `[phi(i), phi(i+1))`.
pub fn restrict_chain(x: &FairSetCategory, phi: &FatMap, c: &Chain) -> Result<Chain> {
    let images = phi.images();
    let arrows = images
        .windows(2)
        .map(|w| {
            let (first, rest) = c.arrows[w[0]..w[1]].split_first().expect("fat maps are injective");
            rest.iter()
                .try_fold(*first, |acc, &g| x.compose(acc, g))
                .ok_or_else(|| Error::Invalid(vec!["string is not composable".into()]))
        })
        .collect::<Result<_>>()?;
    Ok(Chain {
        start: c.object_at(x, images[0]),
        arrows,
    })
}

pub fn evaluate_map(x: &FairSetCategory, phi: &FatMap) -> Result<EvaluatedMap> {
    validate_fair_set(x).verdict.into_result()?;
    let domain = evaluate_object(x, phi.dst());
    let codomain = evaluate_object(x, phi.src());
    let index: HashMap<&Chain, usize> = codomain.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let table = domain
        .iter()
        .map(|c| {
            let r = restrict_chain(x, phi, c)?;
            index
                .get(&r)
                .copied()
                .ok_or_else(|| Error::Internal(format!("restriction along {phi} leaves the evaluation set")))
        })
        .collect::<Result<_>>()?;
    Ok(EvaluatedMap {
        domain,
        codomain,
        table,
    })
}

/// Checks that `X(K ∔ L) → X(K) ×_O X(L)` is a bijection, using the restrictions along
/// the two summand inclusions.
pub fn segal_bijection(x: &FairSetCategory, k: &ColouredOrdinal, l: &ColouredOrdinal) -> Result<bool> {
    let sum = crate::fat::dotsum(k, l);
    let left = FatMap::new(k.clone(), sum.clone(), (0..k.dots()).collect())?;
    let right = FatMap::new(l.clone(), sum.clone(), (k.top()..sum.dots()).collect())?;
    let rl = evaluate_map(x, &left)?;
    let rr = evaluate_map(x, &right)?;
    let mut pairs: Vec<(usize, usize)> = rl.table.iter().copied().zip(rr.table.iter().copied()).collect();
    let expected = rl
        .codomain
        .iter()
        .map(|a| {
            let end = a.object_at(x, k.top());
            rr.codomain.iter().filter(|b| b.start == end).count()
        })
        .sum::<usize>();
    let matching = pairs
        .iter()
        .all(|&(i, j)| rl.codomain[i].object_at(x, k.top()) == rr.codomain[j].start);
    pairs.sort_unstable();
    pairs.dedup();
    Ok(matching && pairs.len() == rl.domain.len() && pairs.len() == expected)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveReport {
    /// Sizes of the nerve of `theta(X)` at levels `0..=N`.
    pub levels: Vec<usize>,
    pub verdict: Verdict,
}

/// Compares the value at every coloured ordinal with at most `max_level + 1` dots with
/// the classical nerve of `theta(X)` at the level of its projection, along the
/// vertical arrow from the unlinked ordinal that picks the lowest dot of each component.
pub fn underlying_nerve_check(x: &FairSetCategory, max_level: usize) -> Result<NerveReport> {
    let c = theta(x)?;
    let nerve: Vec<Vec<Vec<usize>>> = (0..=max_level).map(|p| nerve_level(&c, p)).collect();
    let mut verdict = Verdict::default();
    for dots in 1..=max_level + 1 {
        for k in ColouredOrdinal::all_with_dots(dots) {
            let comps = k.components();
            let lowest: Vec<usize> = (0..k.dots()).filter(|&d| d == 0 || !k.is_linked(d - 1)).collect();
            let v = FatMap::new(ColouredOrdinal::unlinked(comps), k.clone(), lowest)?;
            debug_assert!(crate::fat::is_vertical(&v));
            let m = evaluate_map(x, &v)?;
            if !m.is_bijection() {
                verdict.push(format!("comparison at `{k}` is not a bijection"));
            }
            let strings: Vec<Vec<usize>> = if comps == 1 {
                m.codomain.iter().map(|ch| vec![ch.start]).collect()
            } else {
                m.codomain.iter().map(|ch| ch.arrows.clone()).collect()
            };
            if strings != nerve[comps - 1] {
                verdict.push(format!("value at `{k}` differs from nerve level {}", comps - 1));
            }
        }
    }
    Ok(NerveReport {
        levels: nerve.iter().map(Vec::len).collect(),
        verdict,
    })
}

/// Level `p` of the nerve: objects for `p = 0`, otherwise composable `p`-strings of
/// arrows, in lexicographic order of (start object, arrows).
pub fn nerve_level(c: &FinCategory, p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return (0..c.num_objects()).map(|o| vec![o]).collect();
    }
    let mut out = Vec::new();
    fn rec(c: &FinCategory, p: usize, at: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == p {
            out.push(acc.clone());
            return;
        }
        for a in 0..c.num_arrows() {
            if c.src(a) == at {
                acc.push(a);
                rec(c, p, c.tgt(a), acc, out);
                acc.pop();
            }
        }
    }
    for o in 0..c.num_objects() {
        rec(c, p, o, &mut Vec::new(), &mut out);
    }
    out
}
