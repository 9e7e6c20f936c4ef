//! Canonical JSON documents: keys sorted, no insignificant whitespace. Emitting a
//! parsed canonical document reproduces it byte for byte.
//!
//! Everything refers to objects and arrows by identifier, so documents are
//! independent of internal ordering of maps and compose entries.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::bicat::{IdentityTriple, StrictCompBicategory};
use crate::error::{Error, Result};
use crate::fairset::FairSetCategory;
use crate::fairtwo::{FairTwoCategory, MapTable};
use crate::fincat::{FinCategory, FinFunctor};
use crate::twocat::{SemiTwoCategory, TensorTable};

/// Serializes through `serde_json::Value`, whose maps keep keys sorted.
pub fn canonical<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents are plain data");
    serde_json::to_string(&v).expect("values always serialize")
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub identities: BTreeMap<String, String>,
    /// `[f, g, f then g]`.
    pub compose: Vec<(String, String, String)>,
}

impl CategoryDoc {
    pub fn from_category(c: &FinCategory) -> Self {
        let obj = |x: usize| c.objects()[x].clone();
        let arr = |f: usize| c.arrow(f).id.clone();
        Self {
            objects: c.objects().to_vec(),
            arrows: c
                .arrows()
                .iter()
                .map(|a| ArrowDoc {
                    id: a.id.clone(),
                    src: obj(a.src),
                    tgt: obj(a.tgt),
                })
                .collect(),
            identities: (0..c.num_objects()).map(|x| (obj(x), arr(c.identity(x)))).collect(),
            compose: c
                .composition_triples()
                .into_iter()
                .map(|(f, g, h)| (arr(f), arr(g), arr(h)))
                .collect(),
        }
    }

    pub fn to_category(&self) -> Result<FinCategory> {
        FinCategory::from_names(
            self.objects.clone(),
            self.arrows
                .iter()
                .map(|a| (a.id.clone(), a.src.clone(), a.tgt.clone()))
                .collect(),
            &self
                .identities
                .iter()
                .map(|(o, a)| (o.clone(), a.clone()))
                .collect::<Vec<_>>(),
            &self.compose,
        )
    }
}

pub fn category_to_json(c: &FinCategory) -> String {
    canonical(&CategoryDoc::from_category(c))
}

pub fn category_from_json(text: &str) -> Result<FinCategory> {
    parse::<CategoryDoc>(text)?.to_category()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct FunctorDoc {
    pub src: CategoryDoc,
    pub dst: CategoryDoc,
    pub obj_map: BTreeMap<String, String>,
    pub arr_map: BTreeMap<String, String>,
}

pub fn functor_to_json(f: &FinFunctor) -> String {
    let (s, d) = (f.src(), f.dst());
    canonical(&FunctorDoc {
        src: CategoryDoc::from_category(s),
        dst: CategoryDoc::from_category(d),
        obj_map: (0..s.num_objects())
            .map(|x| (s.objects()[x].clone(), d.objects()[f.on_object(x)].clone()))
            .collect(),
        arr_map: (0..s.num_arrows())
            .map(|a| (s.arrow(a).id.clone(), d.arrow(f.on_arrow(a)).id.clone()))
            .collect(),
    })
}

pub fn functor_from_json(text: &str) -> Result<FinFunctor> {
    let doc: FunctorDoc = parse(text)?;
    FinFunctor::from_names(
        doc.src.to_category()?,
        doc.dst.to_category()?,
        &doc.obj_map.into_iter().collect::<Vec<_>>(),
        &doc.arr_map.into_iter().collect::<Vec<_>>(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitDoc {
    pub id: String,
    pub object: String,
    pub arrow: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FairSetDoc {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub compose: Vec<(String, String, String)>,
    pub units: Vec<UnitDoc>,
}

pub fn fair_set_to_json(x: &FairSetCategory) -> String {
    let obj = |o: usize| x.objects()[o].clone();
    let arr = |a: usize| x.arrows()[a].id.clone();
    canonical(&FairSetDoc {
        objects: x.objects().to_vec(),
        arrows: x
            .arrows()
            .iter()
            .map(|a| ArrowDoc {
                id: a.id.clone(),
                src: obj(a.src),
                tgt: obj(a.tgt),
            })
            .collect(),
        compose: x
            .composition_triples()
            .into_iter()
            .map(|(f, g, h)| (arr(f), arr(g), arr(h)))
            .collect(),
        units: x
            .units()
            .iter()
            .map(|w| UnitDoc {
                id: w.id.clone(),
                object: obj(w.object),
                arrow: arr(w.arrow),
            })
            .collect(),
    })
}

pub fn fair_set_from_json(text: &str) -> Result<FairSetCategory> {
    let doc: FairSetDoc = parse(text)?;
    FairSetCategory::from_names(
        doc.objects,
        doc.arrows.into_iter().map(|a| (a.id, a.src, a.tgt)).collect(),
        &doc.compose,
        &doc.units
            .into_iter()
            .map(|w| (w.id, w.object, w.arrow))
            .collect::<Vec<_>>(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub src: String,
    pub tgt: String,
    pub category: CategoryDoc,
}

/// One composition functor `A(x,y) × A(y,z) → A(x,z)`, as `[a, b, a⊗b]` triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub path: (String, String, String),
    pub objects: Vec<(String, String, String)>,
    pub arrows: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiDoc {
    pub objects: Vec<String>,
    pub homs: Vec<HomDoc>,
    pub tensor: Vec<TensorDoc>,
}

/// `[left, right, composite]` rows by name.
type Rows = Vec<(String, String, String)>;

fn table_doc(l: &FinCategory, r: &FinCategory, out: &FinCategory, t: &TensorTable) -> (Rows, Rows) {
    let objects = (0..l.num_objects() * r.num_objects())
        .map(|k| {
            let (a, b) = (k / r.num_objects(), k % r.num_objects());
            (
                l.objects()[a].clone(),
                r.objects()[b].clone(),
                out.objects()[t.objects[k]].clone(),
            )
        })
        .collect();
    let arrows = (0..l.num_arrows() * r.num_arrows())
        .map(|k| {
            let (f, g) = (k / r.num_arrows(), k % r.num_arrows());
            (
                l.arrow(f).id.clone(),
                r.arrow(g).id.clone(),
                out.arrow(t.arrows[k]).id.clone(),
            )
        })
        .collect();
    (objects, arrows)
}

fn table_from_doc(
    l: &FinCategory,
    r: &FinCategory,
    out: &FinCategory,
    objects: &[(String, String, String)],
    arrows: &[(String, String, String)],
) -> Result<TensorTable> {
    let obj = |c: &FinCategory, n: &str| c.object_index(n).ok_or_else(|| Error::UnknownObject(n.to_string()));
    let arr = |c: &FinCategory, n: &str| {
        c.arrow_index(n)
            .ok_or_else(|| Error::Parse(format!("unknown arrow `{n}`")))
    };
    let mut t = TensorTable {
        objects: vec![usize::MAX; l.num_objects() * r.num_objects()],
        arrows: vec![usize::MAX; l.num_arrows() * r.num_arrows()],
    };
    for (a, b, c) in objects {
        t.objects[obj(l, a)? * r.num_objects() + obj(r, b)?] = obj(out, c)?;
    }
    for (f, g, h) in arrows {
        t.arrows[arr(l, f)? * r.num_arrows() + arr(r, g)?] = arr(out, h)?;
    }
    if t.objects.contains(&usize::MAX) || t.arrows.contains(&usize::MAX) {
        return Err(Error::Parse("composition table is incomplete".into()));
    }
    Ok(t)
}

impl SemiDoc {
    pub fn from_semi(c: &SemiTwoCategory) -> Self {
        let n = c.num_objects();
        let names = c.objects();
        let mut homs = Vec::new();
        let mut tensor = Vec::new();
        for x in 0..n {
            for y in 0..n {
                homs.push(HomDoc {
                    src: names[x].clone(),
                    tgt: names[y].clone(),
                    category: CategoryDoc::from_category(c.hom(x, y)),
                });
                for z in 0..n {
                    let (objects, arrows) = table_doc(c.hom(x, y), c.hom(y, z), c.hom(x, z), c.table(x, y, z));
                    tensor.push(TensorDoc {
                        path: (names[x].clone(), names[y].clone(), names[z].clone()),
                        objects,
                        arrows,
                    });
                }
            }
        }
        Self {
            objects: names.to_vec(),
            homs,
            tensor,
        }
    }

    pub fn to_semi(&self) -> Result<SemiTwoCategory> {
        let n = self.objects.len();
        let idx = |name: &str| {
            self.objects
                .iter()
                .position(|o| o == name)
                .ok_or_else(|| Error::UnknownObject(name.to_string()))
        };
        let mut homs: Vec<Option<FinCategory>> = vec![None; n * n];
        for h in &self.homs {
            let slot = &mut homs[idx(&h.src)? * n + idx(&h.tgt)?];
            if slot.is_some() {
                return Err(Error::Parse(format!("Hom({}, {}) given twice", h.src, h.tgt)));
            }
            *slot = Some(h.category.to_category()?);
        }
        let homs: Vec<FinCategory> = homs
            .into_iter()
            .map(|h| h.ok_or_else(|| Error::Parse("a hom-category is missing".into())))
            .collect::<Result<_>>()?;
        let mut tables: Vec<Option<TensorTable>> = vec![None; n * n * n];
        for t in &self.tensor {
            let (x, y, z) = (idx(&t.path.0)?, idx(&t.path.1)?, idx(&t.path.2)?);
            let table = table_from_doc(
                &homs[x * n + y],
                &homs[y * n + z],
                &homs[x * n + z],
                &t.objects,
                &t.arrows,
            )?;
            let slot = &mut tables[(x * n + y) * n + z];
            if slot.is_some() {
                return Err(Error::Parse("composition table given twice".into()));
            }
            *slot = Some(table);
        }
        let tables = tables
            .into_iter()
            .map(|t| t.ok_or_else(|| Error::Parse("a composition table is missing".into())))
            .collect::<Result<_>>()?;
        SemiTwoCategory::from_tables(self.objects.clone(), homs, tables)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub objects: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitCategoryDoc {
    pub object: String,
    pub category: CategoryDoc,
    pub objects: Vec<(String, String, String)>,
    pub arrows: Vec<(String, String, String)>,
    pub embed: MapDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FairTwoDoc {
    #[serde(flatten)]
    pub semi: SemiDoc,
    pub units: Vec<UnitCategoryDoc>,
}

pub fn fair_two_to_json(x: &FairTwoCategory) -> String {
    let semi = x.semi();
    let units = (0..semi.num_objects())
        .map(|o| {
            let u = x.unit_category(o);
            let hom = semi.hom(o, o);
            let (objects, arrows) = table_doc(u, u, u, x.unit_tensor(o));
            let e = x.embed(o);
            UnitCategoryDoc {
                object: semi.objects()[o].clone(),
                category: CategoryDoc::from_category(u),
                objects,
                arrows,
                embed: MapDoc {
                    objects: (0..u.num_objects())
                        .map(|k| (u.objects()[k].clone(), hom.objects()[e.objects[k]].clone()))
                        .collect(),
                    arrows: (0..u.num_arrows())
                        .map(|k| (u.arrow(k).id.clone(), hom.arrow(e.arrows[k]).id.clone()))
                        .collect(),
                },
            }
        })
        .collect();
    canonical(&FairTwoDoc {
        semi: SemiDoc::from_semi(semi),
        units,
    })
}

pub fn fair_two_from_json(text: &str) -> Result<FairTwoCategory> {
    let doc: FairTwoDoc = parse(text)?;
    let semi = doc.semi.to_semi()?;
    let n = semi.num_objects();
    let mut slots: Vec<Option<(FinCategory, TensorTable, MapTable)>> = vec![None; n];
    for u in &doc.units {
        let o = semi
            .object_index(&u.object)
            .ok_or_else(|| Error::UnknownObject(u.object.clone()))?;
        let cat = u.category.to_category()?;
        let table = table_from_doc(&cat, &cat, &cat, &u.objects, &u.arrows)?;
        let hom = semi.hom(o, o);
        let embed = FinFunctor::from_names(
            cat.clone(),
            hom.clone(),
            &u.embed.objects.clone().into_iter().collect::<Vec<_>>(),
            &u.embed.arrows.clone().into_iter().collect::<Vec<_>>(),
        )?;
        slots[o] = Some((
            cat,
            table,
            MapTable {
                objects: embed.obj_map().to_vec(),
                arrows: embed.arr_map().to_vec(),
            },
        ));
    }
    let mut units = Vec::with_capacity(n);
    let mut tensors = Vec::with_capacity(n);
    let mut embeds = Vec::with_capacity(n);
    for s in slots {
        let (u, t, e) = s.ok_or_else(|| Error::Parse("an object has no unit category".into()))?;
        units.push(u);
        tensors.push(t);
        embeds.push(e);
    }
    FairTwoCategory::new(semi, units, tensors, embeds)
}

/// `left[y][Y]` and `right[x][X]` by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleDoc {
    pub object: String,
    pub unit: String,
    pub left: BTreeMap<String, BTreeMap<String, String>>,
    pub right: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicatDoc {
    #[serde(flatten)]
    pub semi: SemiDoc,
    pub units: Vec<TripleDoc>,
}

pub fn triple_doc(c: &SemiTwoCategory, t: &IdentityTriple) -> TripleDoc {
    let names = c.objects();
    let o = t.object;
    let family = |cells: &[Vec<usize>], homs: Vec<&FinCategory>| {
        (0..names.len())
            .map(|k| {
                let h = homs[k];
                let comps = (0..h.num_objects())
                    .map(|a| (h.objects()[a].clone(), h.arrow(cells[k][a]).id.clone()))
                    .collect();
                (names[k].clone(), comps)
            })
            .collect()
    };
    TripleDoc {
        object: names[o].clone(),
        unit: c.hom(o, o).objects()[t.unit].clone(),
        left: family(&t.left, (0..names.len()).map(|y| c.hom(o, y)).collect()),
        right: family(&t.right, (0..names.len()).map(|x| c.hom(x, o)).collect()),
    }
}

pub fn triple_from_doc(c: &SemiTwoCategory, doc: &TripleDoc) -> Result<IdentityTriple> {
    let n = c.num_objects();
    let o = c
        .object_index(&doc.object)
        .ok_or_else(|| Error::UnknownObject(doc.object.clone()))?;
    let unit = c
        .hom(o, o)
        .object_index(&doc.unit)
        .ok_or_else(|| Error::UnknownObject(doc.unit.clone()))?;
    let family = |given: &BTreeMap<String, BTreeMap<String, String>>, homs: Vec<&FinCategory>| {
        (0..n)
            .map(|k| {
                let h = homs[k];
                let comps = given.get(&c.objects()[k]);
                (0..h.num_objects())
                    .map(|a| {
                        let name = comps
                            .and_then(|m| m.get(&h.objects()[a]))
                            .ok_or_else(|| Error::Parse(format!("no constraint given at `{}`", h.objects()[a])))?;
                        h.arrow_index(name)
                            .ok_or_else(|| Error::Parse(format!("unknown arrow `{name}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
    };
    Ok(IdentityTriple {
        object: o,
        unit,
        left: family(&doc.left, (0..n).map(|y| c.hom(o, y)).collect())?,
        right: family(&doc.right, (0..n).map(|x| c.hom(x, o)).collect())?,
    })
}

pub fn bicat_to_json(c: &StrictCompBicategory) -> String {
    canonical(&BicatDoc {
        semi: SemiDoc::from_semi(c.semi()),
        units: c.units().iter().map(|t| triple_doc(c.semi(), t)).collect(),
    })
}

pub fn bicat_from_json(text: &str) -> Result<StrictCompBicategory> {
    let doc: BicatDoc = parse(text)?;
    let semi = doc.semi.to_semi()?;
    let mut units: Vec<Option<IdentityTriple>> = vec![None; semi.num_objects()];
    for t in &doc.units {
        let triple = triple_from_doc(&semi, t)?;
        let o = triple.object;
        units[o] = Some(triple);
    }
    let units = units
        .into_iter()
        .map(|t| t.ok_or_else(|| Error::Parse("an object has no unit triple".into())))
        .collect::<Result<_>>()?;
    StrictCompBicategory::new(semi, units)
}

/// A one-object bicategory presented as a monoidal category with strict
/// associativity: one category, its tensor, and the chosen unit with constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalDoc {
    pub category: CategoryDoc,
    pub objects: Vec<(String, String, String)>,
    pub arrows: Vec<(String, String, String)>,
    pub unit: String,
    pub left: BTreeMap<String, String>,
    pub right: BTreeMap<String, String>,
}

/// The single object used when reading a monoidal document as a bicategory.
pub const MONOIDAL_OBJECT: &str = "*";

pub fn monoidal_from_json(text: &str) -> Result<StrictCompBicategory> {
    let doc: MonoidalDoc = parse(text)?;
    let o = MONOIDAL_OBJECT.to_string();
    let wrap = |m: &BTreeMap<String, String>| BTreeMap::from([(o.clone(), m.clone())]);
    let bicat = BicatDoc {
        semi: SemiDoc {
            objects: vec![o.clone()],
            homs: vec![HomDoc {
                src: o.clone(),
                tgt: o.clone(),
                category: doc.category,
            }],
            tensor: vec![TensorDoc {
                path: (o.clone(), o.clone(), o.clone()),
                objects: doc.objects,
                arrows: doc.arrows,
            }],
        },
        units: vec![TripleDoc {
            object: o.clone(),
            unit: doc.unit,
            left: wrap(&doc.left),
            right: wrap(&doc.right),
        }],
    };
    bicat_from_json(&canonical(&bicat))
}

pub fn monoidal_to_json(c: &StrictCompBicategory) -> Result<String> {
    if c.semi().num_objects() != 1 {
        return Err(Error::Invalid(vec![format!(
            "a monoidal document needs exactly one object, found {}",
            c.semi().num_objects()
        )]));
    }
    let semi = SemiDoc::from_semi(c.semi());
    let triple = triple_doc(c.semi(), c.unit(0));
    let name = &c.semi().objects()[0];
    let tensor = semi.tensor.into_iter().next().expect("one table");
    Ok(canonical(&MonoidalDoc {
        category: semi.homs.into_iter().next().expect("one hom").category,
        objects: tensor.objects,
        arrows: tensor.arrows,
        unit: triple.unit,
        left: triple.left[name].clone(),
        right: triple.right[name].clone(),
    }))
}
