//! Hom-categories with a strictly associative composition, with no units chosen.
//! Both fair 2-categories and bicategories with strict composition are built on this.

use crate::error::{Error, Result};
use crate::fincat::{binary_product, FinCategory, FinFunctor, Verdict};
use crate::par::{self, Mode};

/// The action of one composition functor `A(x,y) × A(y,z) → A(x,z)`, indexed
/// `a * |right| + b` on objects and likewise on arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorTable {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiTwoCategory {
    objects: Vec<String>,
    homs: Vec<FinCategory>,
    tensor: Vec<TensorTable>,
}

/// Which piece of a composition is being asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Object,
    Arrow,
}

impl SemiTwoCategory {
    /// `homs[x * n + y]` is `A(x,y)`; `tensor(x, y, z, cell, a, b)` composes `a` in
    /// `A(x,y)` with `b` in `A(y,z)`.
    pub fn new<F>(objects: Vec<String>, homs: Vec<FinCategory>, tensor: F) -> Result<Self>
    where
        F: Fn(usize, usize, usize, Cell, usize, usize) -> usize,
    {
        let n = objects.len();
        if homs.len() != n * n {
            return Err(Error::Malformed(format!(
                "expected {} hom-categories, found {}",
                n * n,
                homs.len()
            )));
        }
        let mut tables = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (l, r) = (&homs[x * n + y], &homs[y * n + z]);
                    let objs = (0..l.num_objects() * r.num_objects())
                        .map(|k| tensor(x, y, z, Cell::Object, k / r.num_objects(), k % r.num_objects()))
                        .collect();
                    let arrs = (0..l.num_arrows() * r.num_arrows())
                        .map(|k| tensor(x, y, z, Cell::Arrow, k / r.num_arrows(), k % r.num_arrows()))
                        .collect();
                    tables.push(TensorTable {
                        objects: objs,
                        arrows: arrs,
                    });
                }
            }
        }
        Self::from_tables(objects, homs, tables)
    }

    pub fn from_tables(objects: Vec<String>, homs: Vec<FinCategory>, tensor: Vec<TensorTable>) -> Result<Self> {
        let n = objects.len();
        if homs.len() != n * n || tensor.len() != n * n * n {
            return Err(Error::Malformed(
                "hom or tensor table count does not match the objects".into(),
            ));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = &tensor[(x * n + y) * n + z];
                    let (l, r, out) = (&homs[x * n + y], &homs[y * n + z], &homs[x * n + z]);
                    if t.objects.len() != l.num_objects() * r.num_objects()
                        || t.arrows.len() != l.num_arrows() * r.num_arrows()
                    {
                        return Err(Error::Malformed(format!(
                            "tensor table for ({}, {}, {}) has the wrong size",
                            objects[x], objects[y], objects[z]
                        )));
                    }
                    if t.objects.iter().any(|&c| c >= out.num_objects())
                        || t.arrows.iter().any(|&c| c >= out.num_arrows())
                    {
                        return Err(Error::Malformed(format!(
                            "tensor table for ({}, {}, {}) leaves the target",
                            objects[x], objects[y], objects[z]
                        )));
                    }
                }
            }
        }
        Ok(Self { objects, homs, tensor })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom(&self, x: usize, y: usize) -> &FinCategory {
        &self.homs[x * self.objects.len() + y]
    }

    pub fn homs(&self) -> &[FinCategory] {
        &self.homs
    }

    pub fn table(&self, x: usize, y: usize, z: usize) -> &TensorTable {
        let n = self.objects.len();
        &self.tensor[(x * n + y) * n + z]
    }

    pub fn tables(&self) -> &[TensorTable] {
        &self.tensor
    }

    /// `a ⊗ b` for 1-cells `a: x → y`, `b: y → z`.
    pub fn tensor_obj(&self, x: usize, y: usize, z: usize, a: usize, b: usize) -> usize {
        self.table(x, y, z).objects[a * self.hom(y, z).num_objects() + b]
    }

    /// `f ⊗ g` for 2-cells `f` in `A(x,y)`, `g` in `A(y,z)`.
    pub fn tensor_arr(&self, x: usize, y: usize, z: usize, f: usize, g: usize) -> usize {
        self.table(x, y, z).arrows[f * self.hom(y, z).num_arrows() + g]
    }

    /// The composition functor as a [`FinFunctor`] out of the product category.
    pub fn tensor_functor(&self, x: usize, y: usize, z: usize) -> FinFunctor {
        let p = binary_product(self.hom(x, y), self.hom(y, z));
        FinFunctor::new(
            p.category,
            self.hom(x, z).clone(),
            p.obj_pairs
                .iter()
                .map(|&(a, b)| self.tensor_obj(x, y, z, a, b))
                .collect(),
            p.arr_pairs
                .iter()
                .map(|&(f, g)| self.tensor_arr(x, y, z, f, g))
                .collect(),
        )
        .expect("tables were checked against the hom-categories")
    }

    pub fn validate(&self) -> Verdict {
        self.validate_with(Mode::default())
    }

    /// Hom-categories are categories, each composition is a functor, and composition
    /// is strictly associative on 1-cells and 2-cells.
    pub fn validate_with(&self, mode: Mode) -> Verdict {
        let n = self.objects.len();
        let mut verdict = Verdict::default();
        for x in 0..n {
            for y in 0..n {
                let v = self.hom(x, y).validate_with(mode);
                verdict.extend_prefixed(&format!("Hom({}, {})", self.objects[x], self.objects[y]), v);
            }
        }
        if !verdict.is_valid() {
            return verdict;
        }
        let triples: Vec<(usize, usize, usize)> = (0..n * n * n).map(|k| (k / (n * n), (k / n) % n, k % n)).collect();
        for v in par::map(mode, &triples, |&(x, y, z)| self.check_functor(x, y, z)) {
            verdict.violations.extend(v.violations);
        }
        if !verdict.is_valid() {
            return verdict;
        }
        let quads: Vec<(usize, usize, usize, usize)> = (0..n.pow(4))
            .map(|k| (k / n.pow(3), (k / (n * n)) % n, (k / n) % n, k % n))
            .collect();
        for v in par::map(mode, &quads, |&(w, x, y, z)| self.check_associativity(w, x, y, z)) {
            verdict.violations.extend(v.violations);
        }
        verdict
    }

    fn check_functor(&self, x: usize, y: usize, z: usize) -> Verdict {
        let (l, r, out) = (self.hom(x, y), self.hom(y, z), self.hom(x, z));
        let label = format!(
            "composition {}→{}→{}",
            self.objects[x], self.objects[y], self.objects[z]
        );
        let mut v = Verdict::default();
        for f in 0..l.num_arrows() {
            for g in 0..r.num_arrows() {
                let h = out.arrow(self.tensor_arr(x, y, z, f, g));
                let (fa, ga) = (l.arrow(f), r.arrow(g));
                if h.src != self.tensor_obj(x, y, z, fa.src, ga.src)
                    || h.tgt != self.tensor_obj(x, y, z, fa.tgt, ga.tgt)
                {
                    v.push(format!("{label}: {} ⊗ {} has the wrong endpoints", fa.id, ga.id));
                }
            }
        }
        for a in 0..l.num_objects() {
            for b in 0..r.num_objects() {
                if self.tensor_arr(x, y, z, l.identity(a), r.identity(b))
                    != out.identity(self.tensor_obj(x, y, z, a, b))
                {
                    v.push(format!(
                        "{label}: identities of {} and {} do not compose to an identity",
                        l.objects()[a],
                        r.objects()[b]
                    ));
                }
            }
        }
        if !v.is_valid() {
            return v;
        }
        for (f, f2, ff) in l.composition_triples() {
            for (g, g2, gg) in r.composition_triples() {
                let lhs = self.tensor_arr(x, y, z, ff, gg);
                let rhs = out.compose(self.tensor_arr(x, y, z, f, g), self.tensor_arr(x, y, z, f2, g2));
                if rhs != Some(lhs) {
                    v.push(format!(
                        "{label}: interchange fails for ({}, {}) and ({}, {})",
                        l.arrow(f).id,
                        l.arrow(f2).id,
                        r.arrow(g).id,
                        r.arrow(g2).id
                    ));
                }
            }
        }
        v
    }

    fn check_associativity(&self, w: usize, x: usize, y: usize, z: usize) -> Verdict {
        let (a, b, c) = (self.hom(w, x), self.hom(x, y), self.hom(y, z));
        let mut v = Verdict::default();
        for p in 0..a.num_objects() {
            for q in 0..b.num_objects() {
                for r in 0..c.num_objects() {
                    let lhs = self.tensor_obj(w, y, z, self.tensor_obj(w, x, y, p, q), r);
                    let rhs = self.tensor_obj(w, x, z, p, self.tensor_obj(x, y, z, q, r));
                    if lhs != rhs {
                        v.push(format!(
                            "associativity fails on 1-cells ({}, {}, {})",
                            a.objects()[p],
                            b.objects()[q],
                            c.objects()[r]
                        ));
                    }
                }
            }
        }
        for f in 0..a.num_arrows() {
            for g in 0..b.num_arrows() {
                for h in 0..c.num_arrows() {
                    let lhs = self.tensor_arr(w, y, z, self.tensor_arr(w, x, y, f, g), h);
                    let rhs = self.tensor_arr(w, x, z, f, self.tensor_arr(x, y, z, g, h));
                    if lhs != rhs {
                        v.push(format!(
                            "associativity fails on 2-cells ({}, {}, {})",
                            a.arrow(f).id,
                            b.arrow(g).id,
                            c.arrow(h).id
                        ));
                    }
                }
            }
        }
        v
    }

    /// Additionally, `units[x]` (a 1-cell in `A(x,x)`) is a strict two-sided unit on
    /// 1-cells and its identity 2-cell a strict unit on 2-cells.
    pub fn validate_strict_two(&self, units: &[usize]) -> Verdict {
        let mut verdict = self.validate();
        let n = self.objects.len();
        if units.len() != n {
            verdict.push(format!("{} units for {} objects", units.len(), n));
            return verdict;
        }
        if !verdict.is_valid() {
            return verdict;
        }
        for (o, &i) in units.iter().enumerate() {
            let ii = self.hom(o, o).identity(i);
            for y in 0..n {
                let h = self.hom(o, y);
                for a in 0..h.num_objects() {
                    if self.tensor_obj(o, o, y, i, a) != a {
                        verdict.push(format!(
                            "{} is not a strict left unit for {}",
                            self.hom(o, o).objects()[i],
                            h.objects()[a]
                        ));
                    }
                }
                for f in 0..h.num_arrows() {
                    if self.tensor_arr(o, o, y, ii, f) != f {
                        verdict.push(format!(
                            "identity on {} is not a strict left unit for {}",
                            self.hom(o, o).objects()[i],
                            h.arrow(f).id
                        ));
                    }
                }
                let h = self.hom(y, o);
                for a in 0..h.num_objects() {
                    if self.tensor_obj(y, o, o, a, i) != a {
                        verdict.push(format!(
                            "{} is not a strict right unit for {}",
                            self.hom(o, o).objects()[i],
                            h.objects()[a]
                        ));
                    }
                }
                for f in 0..h.num_arrows() {
                    if self.tensor_arr(y, o, o, f, ii) != f {
                        verdict.push(format!(
                            "identity on {} is not a strict right unit for {}",
                            self.hom(o, o).objects()[i],
                            h.arrow(f).id
                        ));
                    }
                }
            }
        }
        verdict
    }
}
