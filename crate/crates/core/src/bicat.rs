//! Bicategories whose composition is strictly associative but whose units are weak:
//! each object carries a chosen identity triple `(I, λ, ρ)`.
//!
//! Composition is diagrammatic throughout: `X ⊗ Y` is "`X` then `Y`".

use crate::error::{Error, Result};
use crate::fairtwo::{validate_fair_two, FairTwoCategory, MapTable};
use crate::fincat::{Arrow, FinCategory, Verdict};
use crate::par::{self, Mode};
use crate::twocat::{SemiTwoCategory, TensorTable};

/// A weak identity 1-cell at `object`. `left[y][Y]` is `λ_Y: I ⊗ Y → Y` in `A(o,y)`;
/// `right[x][X]` is `ρ_X: X ⊗ I → X` in `A(x,o)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdentityTriple {
    pub object: usize,
    pub unit: usize,
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
}

impl IdentityTriple {
    /// The strict unit `i`, with all constraints identities. Only meaningful when `i`
    /// really is a strict unit.
    pub fn strict(c: &SemiTwoCategory, object: usize, unit: usize) -> Self {
        let n = c.num_objects();
        Self {
            object,
            unit,
            left: (0..n)
                .map(|y| {
                    let h = c.hom(object, y);
                    (0..h.num_objects()).map(|a| h.identity(a)).collect()
                })
                .collect(),
            right: (0..n)
                .map(|x| {
                    let h = c.hom(x, object);
                    (0..h.num_objects()).map(|a| h.identity(a)).collect()
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictCompBicategory {
    semi: SemiTwoCategory,
    units: Vec<IdentityTriple>,
}

impl StrictCompBicategory {
    pub fn new(semi: SemiTwoCategory, units: Vec<IdentityTriple>) -> Result<Self> {
        let n = semi.num_objects();
        if units.len() != n {
            return Err(Error::Malformed(format!(
                "{} unit triples for {n} objects",
                units.len()
            )));
        }
        for (o, t) in units.iter().enumerate() {
            let shaped = t.object == o
                && t.unit < semi.hom(o, o).num_objects()
                && t.left.len() == n
                && t.right.len() == n
                && (0..n).all(|y| {
                    let h = semi.hom(o, y);
                    t.left[y].len() == h.num_objects() && t.left[y].iter().all(|&f| f < h.num_arrows())
                })
                && (0..n).all(|x| {
                    let h = semi.hom(x, o);
                    t.right[x].len() == h.num_objects() && t.right[x].iter().all(|&f| f < h.num_arrows())
                });
            if !shaped {
                return Err(Error::Malformed(format!(
                    "unit triple of `{}` does not fit the hom-categories",
                    semi.objects()[o]
                )));
            }
        }
        Ok(Self { semi, units })
    }

    pub fn semi(&self) -> &SemiTwoCategory {
        &self.semi
    }

    pub fn units(&self) -> &[IdentityTriple] {
        &self.units
    }

    pub fn unit(&self, o: usize) -> &IdentityTriple {
        &self.units[o]
    }
}

/// Naturality, invertibility and endpoints of `λ` and `ρ`, and the Kelly condition
/// `ρ_X ⊗ Y = X ⊗ λ_Y`.
pub fn validate_triple(c: &SemiTwoCategory, t: &IdentityTriple) -> Verdict {
    let mut v = Verdict::default();
    let o = t.object;
    let n = c.num_objects();
    let i = t.unit;
    let name_i = &c.hom(o, o).objects()[i];
    let id_i = c.hom(o, o).identity(i);
    for y in 0..n {
        let h = c.hom(o, y);
        for a in 0..h.num_objects() {
            let l = h.arrow(t.left[y][a]);
            if l.src != c.tensor_obj(o, o, y, i, a) || l.tgt != a {
                v.push(format!("λ at {} is not a 2-cell {name_i} ⊗ {0} → {0}", h.objects()[a]));
            } else if !h.is_iso(t.left[y][a]) {
                v.push(format!("λ at {} is not invertible", h.objects()[a]));
            }
        }
        if !v.is_valid() {
            continue;
        }
        for f in 0..h.num_arrows() {
            let (s, e) = (h.src(f), h.tgt(f));
            let lhs = h.compose(c.tensor_arr(o, o, y, id_i, f), t.left[y][e]);
            let rhs = h.compose(t.left[y][s], f);
            if lhs != rhs {
                v.push(format!("λ is not natural at {}", h.arrow(f).id));
            }
        }
    }
    for x in 0..n {
        let h = c.hom(x, o);
        for a in 0..h.num_objects() {
            let r = h.arrow(t.right[x][a]);
            if r.src != c.tensor_obj(x, o, o, a, i) || r.tgt != a {
                v.push(format!("ρ at {} is not a 2-cell {0} ⊗ {name_i} → {0}", h.objects()[a]));
            } else if !h.is_iso(t.right[x][a]) {
                v.push(format!("ρ at {} is not invertible", h.objects()[a]));
            }
        }
        if !v.is_valid() {
            continue;
        }
        for f in 0..h.num_arrows() {
            let (s, e) = (h.src(f), h.tgt(f));
            let lhs = h.compose(c.tensor_arr(x, o, o, f, id_i), t.right[x][e]);
            let rhs = h.compose(t.right[x][s], f);
            if lhs != rhs {
                v.push(format!("ρ is not natural at {}", h.arrow(f).id));
            }
        }
    }
    if !v.is_valid() {
        return v;
    }
    for x in 0..n {
        for y in 0..n {
            let (hx, hy) = (c.hom(x, o), c.hom(o, y));
            for a in 0..hx.num_objects() {
                for b in 0..hy.num_objects() {
                    let lhs = c.tensor_arr(x, o, y, t.right[x][a], hy.identity(b));
                    let rhs = c.tensor_arr(x, o, y, hx.identity(a), t.left[y][b]);
                    if lhs != rhs {
                        v.push(format!(
                            "Kelly condition fails for ({}, {})",
                            hx.objects()[a],
                            hy.objects()[b]
                        ));
                    }
                }
            }
        }
    }
    v
}

pub fn validate_bicategory(c: &StrictCompBicategory) -> Verdict {
    validate_bicategory_with(c, Mode::default())
}

pub fn validate_bicategory_with(c: &StrictCompBicategory, mode: Mode) -> Verdict {
    let mut v = c.semi.validate_with(mode);
    if !v.is_valid() {
        return v;
    }
    for t in &c.units {
        let tv = validate_triple(&c.semi, t);
        v.extend_prefixed(&format!("unit of `{}`", c.semi.objects()[t.object]), tv);
    }
    v
}

/// All identity triples at one object, as a category whose arrows are the compatible
/// 2-cells between supporting 1-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCategory {
    pub category: FinCategory,
    pub triples: Vec<IdentityTriple>,
    pub contractible: bool,
    /// The 2-cell in `A(o,o)` underlying each arrow.
    pub cells: Vec<usize>,
}

pub fn identity_category(c: &StrictCompBicategory, o: usize) -> Result<IdentityCategory> {
    identity_category_with(c, o, Mode::default())
}

/// Exhaustive search: for every candidate `I`, natural invertible families `λ` are
/// built per hom-category by backtracking; for each, Kelly cuts down the admissible
/// `ρ_X` before the same backtracking runs for `ρ`.
pub fn identity_category_with(c: &StrictCompBicategory, o: usize, mode: Mode) -> Result<IdentityCategory> {
    validate_bicategory_with(c, mode).into_result()?;
    let triples = all_identity_triples(&c.semi, o, mode);
    let hom = c.semi.hom(o, o);
    let mut arrows = Vec::new();
    let mut cells = Vec::new();
    for (i, s) in triples.iter().enumerate() {
        for (j, t) in triples.iter().enumerate() {
            for &theta in hom.hom(s.unit, t.unit) {
                if compatible(&c.semi, s, t, theta) {
                    arrows.push(Arrow {
                        id: format!("{}:{i}>{j}", hom.arrow(theta).id),
                        src: i,
                        tgt: j,
                    });
                    cells.push(theta);
                }
            }
        }
    }
    let objects: Vec<String> = triples
        .iter()
        .enumerate()
        .map(|(k, t)| format!("{}#{k}", hom.objects()[t.unit]))
        .collect();
    let identities = triples
        .iter()
        .enumerate()
        .map(|(k, t)| {
            let id = hom.identity(t.unit);
            (0..arrows.len())
                .find(|&a| arrows[a].src == k && arrows[a].tgt == k && cells[a] == id)
                .expect("identity 2-cells are always compatible")
        })
        .collect();
    let ends: Vec<(usize, usize)> = arrows.iter().map(|a| (a.src, a.tgt)).collect();
    let category = FinCategory::from_indexed(objects, arrows, identities, |f, g| {
        let h = hom.compose(cells[f], cells[g])?;
        (0..cells.len()).find(|&k| cells[k] == h && ends[k] == (ends[f].0, ends[g].1))
    })?;
    let verdict = category.validate_with(mode);
    if !verdict.is_valid() {
        return Err(Error::Internal(format!(
            "identity category is not a category: {verdict}"
        )));
    }
    let contractible = category.is_contractible();
    Ok(IdentityCategory {
        category,
        triples,
        contractible,
        cells,
    })
}

/// `θ: I → J` is an arrow `s → t` when `λ^s = (θ ⊗ Y); λ^t` and `ρ^s = (X ⊗ θ); ρ^t`.
pub fn compatible(c: &SemiTwoCategory, s: &IdentityTriple, t: &IdentityTriple, theta: usize) -> bool {
    let o = s.object;
    let n = c.num_objects();
    (0..n).all(|y| {
        let h = c.hom(o, y);
        (0..h.num_objects())
            .all(|b| h.compose(c.tensor_arr(o, o, y, theta, h.identity(b)), t.left[y][b]) == Some(s.left[y][b]))
    }) && (0..n).all(|x| {
        let h = c.hom(x, o);
        (0..h.num_objects())
            .all(|a| h.compose(c.tensor_arr(x, o, o, h.identity(a), theta), t.right[x][a]) == Some(s.right[x][a]))
    })
}

fn all_identity_triples(c: &SemiTwoCategory, o: usize, mode: Mode) -> Vec<IdentityTriple> {
    let n = c.num_objects();
    let candidates: Vec<usize> = (0..c.hom(o, o).num_objects()).collect();
    par::map(mode, &candidates, |&i| {
        let id_i = c.hom(o, o).identity(i);
        let lefts: Vec<Vec<Vec<usize>>> = (0..n)
            .map(|y| {
                let h = c.hom(o, y);
                let options = iso_options(h, |a| c.tensor_obj(o, o, y, i, a));
                natural_families(h, options, &|f| c.tensor_arr(o, o, y, id_i, f))
            })
            .collect();
        let mut found = Vec::new();
        for left in cartesian(&lefts) {
            // Kelly pins down which ρ_X are admissible once λ is fixed
            let rights: Vec<Vec<Vec<usize>>> = (0..n)
                .map(|x| {
                    let h = c.hom(x, o);
                    let options = iso_options(h, |a| c.tensor_obj(x, o, o, a, i))
                        .into_iter()
                        .enumerate()
                        .map(|(a, opts)| {
                            opts.into_iter()
                                .filter(|&r| {
                                    (0..n).all(|y| {
                                        let hy = c.hom(o, y);
                                        (0..hy.num_objects()).all(|b| {
                                            c.tensor_arr(x, o, y, r, hy.identity(b))
                                                == c.tensor_arr(x, o, y, h.identity(a), left[y][b])
                                        })
                                    })
                                })
                                .collect()
                        })
                        .collect();
                    natural_families(h, options, &|f| c.tensor_arr(x, o, o, f, id_i))
                })
                .collect();
            for right in cartesian(&rights) {
                let t = IdentityTriple {
                    object: o,
                    unit: i,
                    left: left.clone(),
                    right,
                };
                debug_assert!(validate_triple(c, &t).is_valid());
                found.push(t);
            }
        }
        found
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Invertible arrows `shift(a) → a`, per object `a`.
fn iso_options(h: &FinCategory, shift: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    (0..h.num_objects())
        .map(|a| h.hom(shift(a), a).iter().copied().filter(|&f| h.is_iso(f)).collect())
        .collect()
}

/// Every family `η_a` drawn from `options[a]` that is natural with respect to
/// `shift_arr`, found by backtracking over the objects in order.
fn natural_families(h: &FinCategory, options: Vec<Vec<usize>>, shift_arr: &dyn Fn(usize) -> usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(options.len());
    fn rec(
        h: &FinCategory,
        options: &[Vec<usize>],
        shift_arr: &dyn Fn(usize) -> usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = chosen.len();
        if k == options.len() {
            out.push(chosen.clone());
            return;
        }
        for &eta in &options[k] {
            chosen.push(eta);
            // squares whose corners are now all assigned, with k among them
            let ok = (0..h.num_arrows()).all(|f| {
                let (s, e) = (h.src(f), h.tgt(f));
                if s > k || e > k || (s != k && e != k) {
                    return true;
                }
                h.compose(shift_arr(f), chosen[e]) == h.compose(chosen[s], f)
            });
            if ok {
                rec(h, options, shift_arr, chosen, out);
            }
            chosen.pop();
        }
    }
    rec(h, &options, shift_arr, &mut chosen, &mut out);
    out
}

fn cartesian(parts: &[Vec<Vec<usize>>]) -> Vec<Vec<Vec<usize>>> {
    parts.iter().fold(vec![Vec::new()], |acc, options| {
        acc.into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect()
    })
}

/// The 2-cell `I' → I' ⊗ I → I` from `t2 = (I', λ', ρ')` to `t1 = (I, λ, ρ)`: the
/// inverse of `ρ` at `I'`, then `λ'` at `I`. Checked to be compatible with both.
pub fn canonical_unit_iso(c: &SemiTwoCategory, t1: &IdentityTriple, t2: &IdentityTriple) -> Result<usize> {
    if t1.object != t2.object {
        return Err(Error::Mismatch {
            left: c.objects()[t1.object].clone(),
            right: c.objects()[t2.object].clone(),
        });
    }
    let o = t1.object;
    let hom = c.hom(o, o);
    let rho = t1.right[o][t2.unit];
    let rho_inv = hom
        .inverse(rho)
        .ok_or_else(|| Error::Invalid(vec!["ρ is not invertible".into()]))?;
    let lambda = t2.left[o][t1.unit];
    let cell = hom
        .compose(rho_inv, lambda)
        .ok_or_else(|| Error::Invalid(vec!["constraints do not compose".into()]))?;
    if !compatible(c, t2, t1, cell) {
        return Err(Error::Internal(
            "canonical 2-cell is not compatible with the constraints".into(),
        ));
    }
    Ok(cell)
}

/// Supporting 1-cell `I ⊗ I'`, with `λ'' = (I ⊗ λ'); λ` and `ρ'' = (ρ ⊗ I'); ρ'`.
pub fn tensor_identity_triples(
    c: &SemiTwoCategory,
    t1: &IdentityTriple,
    t2: &IdentityTriple,
) -> Result<IdentityTriple> {
    if t1.object != t2.object {
        return Err(Error::Mismatch {
            left: c.objects()[t1.object].clone(),
            right: c.objects()[t2.object].clone(),
        });
    }
    let o = t1.object;
    let n = c.num_objects();
    let id1 = c.hom(o, o).identity(t1.unit);
    let id2 = c.hom(o, o).identity(t2.unit);
    let left = (0..n)
        .map(|y| {
            let h = c.hom(o, y);
            (0..h.num_objects())
                .map(|b| h.comp(c.tensor_arr(o, o, y, id1, t2.left[y][b]), t1.left[y][b]))
                .collect()
        })
        .collect();
    let right = (0..n)
        .map(|x| {
            let h = c.hom(x, o);
            (0..h.num_objects())
                .map(|a| h.comp(c.tensor_arr(x, o, o, t1.right[x][a], id2), t2.right[x][a]))
                .collect()
        })
        .collect();
    Ok(IdentityTriple {
        object: o,
        unit: c.tensor_obj(o, o, o, t1.unit, t2.unit),
        left,
        right,
    })
}

/// Same 1- and 2-cells; `U(x)` is the category of identity triples at `x`.
pub fn bicat_to_fair2(c: &StrictCompBicategory) -> Result<FairTwoCategory> {
    bicat_to_fair2_with(c, Mode::default())
}

pub fn bicat_to_fair2_with(c: &StrictCompBicategory, mode: Mode) -> Result<FairTwoCategory> {
    validate_bicategory_with(c, mode).into_result()?;
    let semi = &c.semi;
    let n = semi.num_objects();
    let mut units = Vec::with_capacity(n);
    let mut tensors = Vec::with_capacity(n);
    let mut embeds = Vec::with_capacity(n);
    for o in 0..n {
        let ic = identity_category_with(c, o, mode)?;
        let u = &ic.category;
        let hom = semi.hom(o, o);
        let mut objects = Vec::with_capacity(u.num_objects().pow(2));
        for s in &ic.triples {
            for t in &ic.triples {
                let st = tensor_identity_triples(semi, s, t)?;
                let k = ic
                    .triples
                    .iter()
                    .position(|x| *x == st)
                    .ok_or_else(|| Error::Internal("composite of identity triples was not found".into()))?;
                objects.push(k);
            }
        }
        let m = u.num_objects();
        let mut arrows = Vec::with_capacity(u.num_arrows().pow(2));
        for f in 0..u.num_arrows() {
            for g in 0..u.num_arrows() {
                let cell = semi.tensor_arr(o, o, o, ic.cells[f], ic.cells[g]);
                let src = objects[u.src(f) * m + u.src(g)];
                let tgt = objects[u.tgt(f) * m + u.tgt(g)];
                let k = u
                    .hom(src, tgt)
                    .iter()
                    .copied()
                    .find(|&k| ic.cells[k] == cell)
                    .ok_or_else(|| Error::Internal("composite of unit 2-cells was not found".into()))?;
                arrows.push(k);
            }
        }
        tensors.push(TensorTable { objects, arrows });
        embeds.push(MapTable {
            objects: ic.triples.iter().map(|t| t.unit).collect(),
            arrows: ic.cells.clone(),
        });
        debug_assert!(ic.cells.iter().all(|&a| a < hom.num_arrows()));
        units.push(ic.category);
    }
    FairTwoCategory::new(semi.clone(), units, tensors, embeds)
}

/// Which weak unit of each `U(x)` is promoted to the chosen identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PseudoSection {
    #[default]
    First,
    Last,
}

/// Picks `I` in `U(o)`, takes `α: I ⊗ I → I` from the unique arrow of `U(o)`, and
/// solves `I ⊗ λ_Y = α ⊗ Y` and `ρ_X ⊗ I = X ⊗ α` for the constraints.
pub fn fair2_to_bicat(x: &FairTwoCategory, choice: PseudoSection) -> Result<StrictCompBicategory> {
    validate_fair_two(x).verdict.into_result()?;
    let semi = x.semi();
    let n = semi.num_objects();
    let mut triples = Vec::with_capacity(n);
    for o in 0..n {
        let u = x.unit_category(o);
        let w = match choice {
            PseudoSection::First => 0,
            PseudoSection::Last => u.num_objects() - 1,
        };
        let ww = x.unit_tensor_obj(o, w, w);
        let alpha_u = u.hom(ww, w)[0];
        let alpha = x.embed(o).arrows[alpha_u];
        let i = x.embed(o).objects[w];
        let id_i = semi.hom(o, o).identity(i);
        let mut left = Vec::with_capacity(n);
        for y in 0..n {
            let h = semi.hom(o, y);
            let solved = (0..h.num_objects())
                .map(|b| {
                    let target = semi.tensor_arr(o, o, y, alpha, h.identity(b));
                    unique(h.hom(semi.tensor_obj(o, o, y, i, b), b), |l| {
                        semi.tensor_arr(o, o, y, id_i, l) == target
                    })
                    .ok_or_else(|| Error::Internal(format!("no unique λ at {}", h.objects()[b])))
                })
                .collect::<Result<Vec<_>>>()?;
            left.push(solved);
        }
        let mut right = Vec::with_capacity(n);
        for z in 0..n {
            let h = semi.hom(z, o);
            let solved = (0..h.num_objects())
                .map(|a| {
                    let target = semi.tensor_arr(z, o, o, h.identity(a), alpha);
                    unique(h.hom(semi.tensor_obj(z, o, o, a, i), a), |r| {
                        semi.tensor_arr(z, o, o, r, id_i) == target
                    })
                    .ok_or_else(|| Error::Internal(format!("no unique ρ at {}", h.objects()[a])))
                })
                .collect::<Result<Vec<_>>>()?;
            right.push(solved);
        }
        triples.push(IdentityTriple {
            object: o,
            unit: i,
            left,
            right,
        });
    }
    let out = StrictCompBicategory::new(semi.clone(), triples)?;
    let v = validate_bicategory(&out);
    if !v.is_valid() {
        return Err(Error::Internal(format!("solved constraints are not coherent: {v}")));
    }
    Ok(out)
}

fn unique(candidates: &[usize], pred: impl Fn(usize) -> bool) -> Option<usize> {
    let mut hits = candidates.iter().copied().filter(|&c| pred(c));
    let first = hits.next()?;
    hits.next().is_none().then_some(first)
}

/// A homomorphism preserving composition strictly, with unit comparisons
/// `φ_o: I_{F(o)} → F(I_o)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BifunctorStrict {
    pub objects: Vec<usize>,
    /// Indexed `x * n + y`, mapping `A(x,y)` into `A'(Fx,Fy)`.
    pub homs: Vec<MapTable>,
    pub phi: Vec<usize>,
}

impl BifunctorStrict {
    pub fn identity(c: &StrictCompBicategory) -> Self {
        let n = c.semi.num_objects();
        Self {
            objects: (0..n).collect(),
            homs: (0..n * n)
                .map(|k| {
                    let h = c.semi.hom(k / n, k % n);
                    MapTable {
                        objects: (0..h.num_objects()).collect(),
                        arrows: (0..h.num_arrows()).collect(),
                    }
                })
                .collect(),
            phi: (0..n).map(|o| c.semi.hom(o, o).identity(c.units[o].unit)).collect(),
        }
    }
}

/// Hom maps are functors, composition is preserved strictly, and each `φ_o` is an
/// invertible 2-cell making both unit triangles commute.
pub fn validate_bifunctor(src: &StrictCompBicategory, dst: &StrictCompBicategory, f: &BifunctorStrict) -> Verdict {
    let (s, d) = (&src.semi, &dst.semi);
    let n = s.num_objects();
    let mut v = Verdict::default();
    if f.objects.len() != n
        || f.homs.len() != n * n
        || f.phi.len() != n
        || f.objects.iter().any(|&o| o >= d.num_objects())
    {
        v.push("bifunctor tables do not match the source");
        return v;
    }
    let fo = &f.objects;
    for x in 0..n {
        for y in 0..n {
            let m = &f.homs[x * n + y];
            let functor = crate::fincat::FinFunctor::new(
                s.hom(x, y).clone(),
                d.hom(fo[x], fo[y]).clone(),
                m.objects.clone(),
                m.arrows.clone(),
            );
            match functor {
                Ok(func) => v.extend_prefixed(
                    &format!("on Hom({}, {})", s.objects()[x], s.objects()[y]),
                    func.validate(),
                ),
                Err(e) => v.push(format!("on Hom({}, {}): {e}", s.objects()[x], s.objects()[y])),
            }
        }
    }
    if !v.is_valid() {
        return v;
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (l, r) = (s.hom(x, y), s.hom(y, z));
                let (ml, mr, mo) = (&f.homs[x * n + y], &f.homs[y * n + z], &f.homs[x * n + z]);
                for a in 0..l.num_objects() {
                    for b in 0..r.num_objects() {
                        if mo.objects[s.tensor_obj(x, y, z, a, b)]
                            != d.tensor_obj(fo[x], fo[y], fo[z], ml.objects[a], mr.objects[b])
                        {
                            v.push(format!(
                                "composition of {} and {} is not preserved",
                                l.objects()[a],
                                r.objects()[b]
                            ));
                        }
                    }
                }
                for g in 0..l.num_arrows() {
                    for h in 0..r.num_arrows() {
                        if mo.arrows[s.tensor_arr(x, y, z, g, h)]
                            != d.tensor_arr(fo[x], fo[y], fo[z], ml.arrows[g], mr.arrows[h])
                        {
                            v.push(format!(
                                "composition of {} and {} is not preserved",
                                l.arrow(g).id,
                                r.arrow(h).id
                            ));
                        }
                    }
                }
            }
        }
    }
    if !v.is_valid() {
        return v;
    }
    for o in 0..n {
        let (t, td) = (&src.units[o], &dst.units[fo[o]]);
        let fo_o = fo[o];
        let hd = d.hom(fo_o, fo_o);
        let phi = f.phi[o];
        let mo = &f.homs[o * n + o];
        let arrow = hd.arrow(phi);
        if arrow.src != td.unit || arrow.tgt != mo.objects[t.unit] || !hd.is_iso(phi) {
            v.push(format!(
                "φ at `{}` is not an invertible 2-cell from the unit to the image of the unit",
                s.objects()[o]
            ));
            continue;
        }
        for y in 0..n {
            let h = s.hom(o, y);
            let hdy = d.hom(fo_o, fo[y]);
            let m = &f.homs[o * n + y];
            for b in 0..h.num_objects() {
                let fb = m.objects[b];
                let via = hdy.compose(
                    d.tensor_arr(fo_o, fo_o, fo[y], phi, hdy.identity(fb)),
                    m.arrows[t.left[y][b]],
                );
                if via != Some(td.left[fo[y]][fb]) {
                    v.push(format!("left unit triangle fails at {}", h.objects()[b]));
                }
            }
        }
        for x in 0..n {
            let h = s.hom(x, o);
            let hdx = d.hom(fo[x], fo_o);
            let m = &f.homs[x * n + o];
            for a in 0..h.num_objects() {
                let fa = m.objects[a];
                let via = hdx.compose(
                    d.tensor_arr(fo[x], fo_o, fo_o, hdx.identity(fa), phi),
                    m.arrows[t.right[x][a]],
                );
                if via != Some(td.right[fo[x]][fa]) {
                    v.push(format!("right unit triangle fails at {}", h.objects()[a]));
                }
            }
        }
    }
    v
}
