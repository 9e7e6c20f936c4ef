//! Fair categories in `Cat`: hom-categories with strict composition, plus for each
//! object a category `U(x)` of weak identity arrows mapped into `A(x,x)`.

use crate::error::{Error, Result};
use crate::fincat::{binary_product, equimorphism_report_with, terminal, FinCategory, FinFunctor, Verdict};
use crate::par::Mode;
use crate::twocat::{SemiTwoCategory, TensorTable};

/// A functor given by its object and arrow tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapTable {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairTwoCategory {
    semi: SemiTwoCategory,
    units: Vec<FinCategory>,
    unit_tensor: Vec<TensorTable>,
    embed: Vec<MapTable>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceKind {
    Hom,
    Unit,
}

impl FairTwoCategory {
    pub fn new(
        semi: SemiTwoCategory,
        units: Vec<FinCategory>,
        unit_tensor: Vec<TensorTable>,
        embed: Vec<MapTable>,
    ) -> Result<Self> {
        let n = semi.num_objects();
        if units.len() != n || unit_tensor.len() != n || embed.len() != n {
            return Err(Error::Malformed("unit data does not match the objects".into()));
        }
        for x in 0..n {
            let (u, t, e) = (&units[x], &unit_tensor[x], &embed[x]);
            let hom = semi.hom(x, x);
            let sizes_ok = t.objects.len() == u.num_objects().pow(2)
                && t.arrows.len() == u.num_arrows().pow(2)
                && e.objects.len() == u.num_objects()
                && e.arrows.len() == u.num_arrows();
            let ranges_ok = t.objects.iter().all(|&c| c < u.num_objects())
                && t.arrows.iter().all(|&c| c < u.num_arrows())
                && e.objects.iter().all(|&c| c < hom.num_objects())
                && e.arrows.iter().all(|&c| c < hom.num_arrows());
            if !sizes_ok || !ranges_ok {
                return Err(Error::Malformed(format!(
                    "unit tables of `{}` are inconsistent",
                    semi.objects()[x]
                )));
            }
        }
        Ok(Self {
            semi,
            units,
            unit_tensor,
            embed,
        })
    }

    /// A 2-category with strict units, with `U(x)` terminal and sent to `units[x]`.
    pub fn from_strict(semi: SemiTwoCategory, units: &[usize]) -> Result<Self> {
        let n = semi.num_objects();
        if units.len() != n {
            return Err(Error::Malformed("one unit per object expected".into()));
        }
        let embed = (0..n)
            .map(|x| MapTable {
                objects: vec![units[x]],
                arrows: vec![semi.hom(x, x).identity(units[x])],
            })
            .collect();
        let one = TensorTable {
            objects: vec![0],
            arrows: vec![0],
        };
        Self::new(semi, vec![terminal(); n], vec![one; n], embed)
    }

    pub fn semi(&self) -> &SemiTwoCategory {
        &self.semi
    }

    pub fn unit_category(&self, x: usize) -> &FinCategory {
        &self.units[x]
    }

    pub fn unit_tensor(&self, x: usize) -> &TensorTable {
        &self.unit_tensor[x]
    }

    pub fn embed(&self, x: usize) -> &MapTable {
        &self.embed[x]
    }

    pub fn num_objects(&self) -> usize {
        self.semi.num_objects()
    }

    pub fn unit_tensor_obj(&self, x: usize, a: usize, b: usize) -> usize {
        self.unit_tensor[x].objects[a * self.units[x].num_objects() + b]
    }

    pub fn unit_tensor_arr(&self, x: usize, f: usize, g: usize) -> usize {
        self.unit_tensor[x].arrows[f * self.units[x].num_arrows() + g]
    }

    pub fn embed_functor(&self, x: usize) -> FinFunctor {
        FinFunctor::new(
            self.units[x].clone(),
            self.semi.hom(x, x).clone(),
            self.embed[x].objects.clone(),
            self.embed[x].arrows.clone(),
        )
        .expect("checked on construction")
    }

    pub fn unit_tensor_functor(&self, x: usize) -> FinFunctor {
        let u = &self.units[x];
        let p = binary_product(u, u);
        FinFunctor::new(
            p.category,
            u.clone(),
            p.obj_pairs
                .iter()
                .map(|&(a, b)| self.unit_tensor_obj(x, a, b))
                .collect(),
            p.arr_pairs
                .iter()
                .map(|&(f, g)| self.unit_tensor_arr(x, f, g))
                .collect(),
        )
        .expect("checked on construction")
    }

    /// `U(x) × A(x,y) → A(x,y)`, composing with the embedded unit on the left.
    pub fn left_action(&self, x: usize, y: usize) -> FinFunctor {
        let (u, a) = (&self.units[x], self.semi.hom(x, y));
        let p = binary_product(u, a);
        let e = &self.embed[x];
        FinFunctor::new(
            p.category,
            a.clone(),
            p.obj_pairs
                .iter()
                .map(|&(w, b)| self.semi.tensor_obj(x, x, y, e.objects[w], b))
                .collect(),
            p.arr_pairs
                .iter()
                .map(|&(w, f)| self.semi.tensor_arr(x, x, y, e.arrows[w], f))
                .collect(),
        )
        .expect("tensor tables stay in range")
    }

    /// `A(x,y) × U(y) → A(x,y)`.
    pub fn right_action(&self, x: usize, y: usize) -> FinFunctor {
        let (a, u) = (self.semi.hom(x, y), &self.units[y]);
        let p = binary_product(a, u);
        let e = &self.embed[y];
        FinFunctor::new(
            p.category,
            a.clone(),
            p.obj_pairs
                .iter()
                .map(|&(b, w)| self.semi.tensor_obj(x, y, y, b, e.objects[w]))
                .collect(),
            p.arr_pairs
                .iter()
                .map(|&(f, w)| self.semi.tensor_arr(x, y, y, f, e.arrows[w]))
                .collect(),
        )
        .expect("tensor tables stay in range")
    }

    pub fn slice(&self, kind: SliceKind, x: &str, y: Option<&str>) -> Result<FinCategory> {
        let find = |name: &str| {
            self.semi
                .object_index(name)
                .ok_or_else(|| Error::UnknownObject(name.to_string()))
        };
        let xi = find(x)?;
        match kind {
            SliceKind::Unit => Ok(self.units[xi].clone()),
            SliceKind::Hom => {
                let yi = find(y.unwrap_or(x))?;
                Ok(self.semi.hom(xi, yi).clone())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairTwoVerdict {
    pub verdict: Verdict,
    pub is_fair_monoidal: bool,
}

impl FairTwoVerdict {
    pub fn is_valid(&self) -> bool {
        self.verdict.is_valid()
    }
}

pub fn validate_fair_two(x: &FairTwoCategory) -> FairTwoVerdict {
    validate_fair_two_with(x, Mode::default())
}

/// Strict composition laws, functoriality of the unit data, contractibility of each
/// `U(x)`, and the colour functors being equivalences.
pub fn validate_fair_two_with(x: &FairTwoCategory, mode: Mode) -> FairTwoVerdict {
    let mut v = x.semi.validate_with(mode);
    let n = x.num_objects();
    let names = x.semi.objects();
    if v.is_valid() {
        for o in 0..n {
            let label = |what: &str| format!("{what} of `{}`", names[o]);
            let u = &x.units[o];
            let uv = u.validate_with(mode);
            if !uv.is_valid() {
                v.extend_prefixed(&label("unit category"), uv);
                continue;
            }
            if !u.is_contractible() {
                v.push(format!("unit category of `{}` is not contractible", names[o]));
            }
            let tensor = x.unit_tensor_functor(o);
            let tv = tensor.validate();
            if !tv.is_valid() {
                v.extend_prefixed(&label("unit composition"), tv);
                continue;
            }
            let embed = x.embed_functor(o);
            let ev = embed.validate();
            if !ev.is_valid() {
                v.extend_prefixed(&label("unit embedding"), ev);
                continue;
            }
            for a in 0..u.num_objects() {
                for b in 0..u.num_objects() {
                    for c in 0..u.num_objects() {
                        let lhs = x.unit_tensor_obj(o, x.unit_tensor_obj(o, a, b), c);
                        let rhs = x.unit_tensor_obj(o, a, x.unit_tensor_obj(o, b, c));
                        if lhs != rhs {
                            v.push(format!("unit composition of `{}` is not associative", names[o]));
                        }
                    }
                    let e = &x.embed[o];
                    if e.objects[x.unit_tensor_obj(o, a, b)] != x.semi.tensor_obj(o, o, o, e.objects[a], e.objects[b]) {
                        v.push(format!(
                            "embedding of `{}` does not commute with composition on ({}, {})",
                            names[o],
                            u.objects()[a],
                            u.objects()[b]
                        ));
                    }
                }
            }
            for f in 0..u.num_arrows() {
                for g in 0..u.num_arrows() {
                    let e = &x.embed[o];
                    if e.arrows[x.unit_tensor_arr(o, f, g)] != x.semi.tensor_arr(o, o, o, e.arrows[f], e.arrows[g]) {
                        v.push(format!(
                            "embedding of `{}` does not commute with composition on ({}, {})",
                            names[o],
                            u.arrow(f).id,
                            u.arrow(g).id
                        ));
                    }
                }
            }
        }
    }
    if v.is_valid() {
        for o in 0..n {
            let to_point = FinFunctor::new(
                x.units[o].clone(),
                terminal(),
                vec![0; x.units[o].num_objects()],
                vec![0; x.units[o].num_arrows()],
            )
            .expect("constant functor");
            // source and target of a weak unit both land on o, giving the same functor twice
            for side in ["source", "target"] {
                if !equimorphism_report_with(&to_point, mode).equimorphism {
                    v.push(format!("{side} map on units of `{}` is not an equivalence", names[o]));
                }
            }
            if !equimorphism_report_with(&x.unit_tensor_functor(o), mode).equimorphism {
                v.push(format!("unit composition of `{}` is not an equivalence", names[o]));
            }
            for y in 0..n {
                if !equimorphism_report_with(&x.left_action(o, y), mode).equimorphism {
                    v.push(format!(
                        "composing with units on the left, U({}) × A({}, {}) → A({}, {}), is not an equivalence",
                        names[o], names[o], names[y], names[o], names[y]
                    ));
                }
                if !equimorphism_report_with(&x.right_action(y, o), mode).equimorphism {
                    v.push(format!(
                        "composing with units on the right, A({}, {}) × U({}) → A({}, {}), is not an equivalence",
                        names[y], names[o], names[o], names[y], names[o]
                    ));
                }
            }
        }
    }
    FairTwoVerdict {
        verdict: v,
        is_fair_monoidal: n == 1,
    }
}

/// Composing with any weak unit is a bijection on every set of 2-cells.
pub fn check_unit_composition_bijective(x: &FairTwoCategory) -> Verdict {
    let semi = &x.semi;
    let n = x.num_objects();
    let mut v = Verdict::default();
    for o in 0..n {
        for &i in &x.embed[o].objects {
            let ii = semi.hom(o, o).identity(i);
            for y in 0..n {
                let h = semi.hom(o, y);
                for a in 0..h.num_objects() {
                    for b in 0..h.num_objects() {
                        let image: Vec<usize> = h.hom(a, b).iter().map(|&f| semi.tensor_arr(o, o, y, ii, f)).collect();
                        let target = semi
                            .hom(o, y)
                            .hom(semi.tensor_obj(o, o, y, i, a), semi.tensor_obj(o, o, y, i, b));
                        if !same_set(&image, target) {
                            v.push(format!(
                                "left composition with {} is not bijective on 2-cells {}→{}",
                                semi.hom(o, o).objects()[i],
                                h.objects()[a],
                                h.objects()[b]
                            ));
                        }
                    }
                }
                let h = semi.hom(y, o);
                for a in 0..h.num_objects() {
                    for b in 0..h.num_objects() {
                        let image: Vec<usize> = h.hom(a, b).iter().map(|&f| semi.tensor_arr(y, o, o, f, ii)).collect();
                        let target = semi
                            .hom(y, o)
                            .hom(semi.tensor_obj(y, o, o, a, i), semi.tensor_obj(y, o, o, b, i));
                        if !same_set(&image, target) {
                            v.push(format!(
                                "right composition with {} is not bijective on 2-cells {}→{}",
                                semi.hom(o, o).objects()[i],
                                h.objects()[a],
                                h.objects()[b]
                            ));
                        }
                    }
                }
            }
        }
    }
    v
}

fn same_set(image: &[usize], target: &[usize]) -> bool {
    let mut a = image.to_vec();
    a.sort_unstable();
    a.dedup();
    let mut b = target.to_vec();
    b.sort_unstable();
    a.len() == image.len() && a == b
}
