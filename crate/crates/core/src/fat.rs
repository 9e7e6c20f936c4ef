//! Coloured ordinals, the category `T` of their colour-preserving maps, and the fat
//! delta: the dot-injective part of `T`.
//!
//! A coloured ordinal is a string of dots in which each consecutive edge is either
//! linked (coloured) or not. Textually, `o-o.o` is three dots whose bottom edge is
//! linked. Maps send dots to dots monotonically, and a link may be set but never
//! broken: a linked source edge must land on a run of linked target edges.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ordinal::{self, compose_delta, enum_hom_delta, DeltaMap, Ordinal};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredOrdinal {
    links: Vec<bool>,
}

impl ColouredOrdinal {
    /// Builds the object with `links.len() + 1` dots.
    pub fn new(links: Vec<bool>) -> Self {
        Self { links }
    }

    /// The single dot.
    pub fn dot() -> Self {
        Self { links: Vec::new() }
    }

    pub fn unlinked(dots: usize) -> Self {
        assert!(dots >= 1, "coloured ordinals are nonempty");
        Self {
            links: vec![false; dots - 1],
        }
    }

    pub fn linked(dots: usize) -> Self {
        assert!(dots >= 1, "coloured ordinals are nonempty");
        Self {
            links: vec![true; dots - 1],
        }
    }

    /// All `2^(dots-1)` objects with the given number of dots, ordered by their link
    /// pattern read as a binary number with the bottom edge most significant.
    pub fn all_with_dots(dots: usize) -> Vec<Self> {
        assert!(dots >= 1, "coloured ordinals are nonempty");
        let edges = dots - 1;
        (0..1usize << edges)
            .map(|code| Self {
                links: (0..edges).map(|e| code & (1 << (edges - 1 - e)) != 0).collect(),
            })
            .collect()
    }

    pub fn dots(&self) -> usize {
        self.links.len() + 1
    }

    pub fn top(&self) -> usize {
        self.links.len()
    }

    pub fn links(&self) -> &[bool] {
        &self.links
    }

    /// Whether edge `e` (between dots `e` and `e + 1`) is linked.
    pub fn is_linked(&self, edge: usize) -> bool {
        self.links[edge]
    }

    /// Whether every edge between dots `lo` and `hi` is linked.
    pub fn linked_between(&self, lo: usize, hi: usize) -> bool {
        self.links[lo..hi].iter().all(|&l| l)
    }

    /// Number of linked components.
    pub fn components(&self) -> usize {
        1 + self.links.iter().filter(|&&l| !l).count()
    }

    /// Index of the linked component containing `dot`.
    pub fn component_of(&self, dot: usize) -> usize {
        self.links[..dot].iter().filter(|&&l| !l).count()
    }

    /// The sub-object on dots `lo..=hi`.
    pub fn slice(&self, lo: usize, hi: usize) -> Self {
        Self {
            links: self.links[lo..hi].to_vec(),
        }
    }

    /// The sub-object on the given increasing dot positions; an edge is linked when
    /// every edge it spans is linked.
    pub fn restrict(&self, dots: &[usize]) -> Self {
        Self {
            links: dots.windows(2).map(|w| self.linked_between(w[0], w[1])).collect(),
        }
    }
}

impl fmt::Display for ColouredOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("o")?;
        for &l in &self.links {
            f.write_str(if l { "-o" } else { ".o" })?;
        }
        Ok(())
    }
}

impl FromStr for ColouredOrdinal {
    type Err = Error;

    /// Grammar: `o ( ('-' | '.') o )*`, whitespace ignored.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() || chars.len().is_multiple_of(2) {
            return Err(Error::Parse(format!("`{s}` is not a coloured ordinal")));
        }
        let mut links = Vec::with_capacity(chars.len() / 2);
        for (i, c) in chars.iter().enumerate() {
            match (i % 2, c) {
                (0, 'o') => {}
                (1, '-') => links.push(true),
                (1, '.') => links.push(false),
                _ => return Err(Error::Parse(format!("unexpected `{c}` at position {i} in `{s}`"))),
            }
        }
        Ok(Self { links })
    }
}

/// A map of coloured ordinals: monotone on dots, and never breaking a link.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TMap {
    src: ColouredOrdinal,
    dst: ColouredOrdinal,
    images: Vec<usize>,
}

fn check_coloured_map(src: &ColouredOrdinal, dst: &ColouredOrdinal, images: &[usize], strict: bool) -> Result<()> {
    if images.len() != src.dots() {
        return Err(Error::WrongArity {
            expected: src.dots(),
            found: images.len(),
        });
    }
    for (position, &image) in images.iter().enumerate() {
        if image > dst.top() {
            return Err(Error::ImageOutOfRange {
                position,
                image,
                dots: dst.dots(),
            });
        }
    }
    for (i, w) in images.windows(2).enumerate() {
        if w[0] > w[1] {
            return Err(Error::NotMonotone(i));
        }
        if strict && w[0] == w[1] {
            return Err(Error::NotInjective(i));
        }
        if src.is_linked(i) {
            if let Some(j) = (w[0]..w[1]).find(|&j| !dst.is_linked(j)) {
                return Err(Error::LinkBroken {
                    edge: i,
                    target_edge: j,
                });
            }
        }
    }
    Ok(())
}

impl TMap {
    pub fn new(src: ColouredOrdinal, dst: ColouredOrdinal, images: Vec<usize>) -> Result<Self> {
        check_coloured_map(&src, &dst, &images, false)?;
        Ok(Self { src, dst, images })
    }

    pub fn identity(k: ColouredOrdinal) -> Self {
        let images = (0..k.dots()).collect();
        Self {
            src: k.clone(),
            dst: k,
            images,
        }
    }

    pub fn src(&self) -> &ColouredOrdinal {
        &self.src
    }

    pub fn dst(&self) -> &ColouredOrdinal {
        &self.dst
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_injective(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }

    /// Reinterprets the map as a fat-delta arrow, if it is injective on dots.
    pub fn to_fat(&self) -> Result<FatMap> {
        FatMap::new(self.src.clone(), self.dst.clone(), self.images.clone())
    }
}

impl fmt::Display for TMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} : {}",
            self.src,
            self.dst,
            ordinal::fmt_images(&self.images)
        )
    }
}

fn parse_map_parts(s: &str) -> Result<(ColouredOrdinal, ColouredOrdinal, Vec<usize>)> {
    let (head, images) = ordinal::split_map_text(s)?;
    let (src, dst) = head
        .split_once("->")
        .ok_or_else(|| Error::Parse(format!("expected `SRC -> DST` in `{head}`")))?;
    Ok((src.parse()?, dst.parse()?, images))
}

impl FromStr for TMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (src, dst, images) = parse_map_parts(s)?;
        TMap::new(src, dst, images)
    }
}

/// An arrow of the fat delta: a [`TMap`] that is injective on dots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FatMap(TMap);

impl FatMap {
    pub fn new(src: ColouredOrdinal, dst: ColouredOrdinal, images: Vec<usize>) -> Result<Self> {
        check_coloured_map(&src, &dst, &images, true)?;
        Ok(Self(TMap { src, dst, images }))
    }

    pub fn identity(k: ColouredOrdinal) -> Self {
        Self(TMap::identity(k))
    }

    pub fn src(&self) -> &ColouredOrdinal {
        &self.0.src
    }

    pub fn dst(&self) -> &ColouredOrdinal {
        &self.0.dst
    }

    pub fn images(&self) -> &[usize] {
        &self.0.images
    }

    pub fn as_tmap(&self) -> &TMap {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.src() == self.dst() && self.images().iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Display for FatMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for FatMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (src, dst, images) = parse_map_parts(s)?;
        FatMap::new(src, dst, images)
    }
}

fn enum_coloured(k: &ColouredOrdinal, l: &ColouredOrdinal, strict: bool) -> Vec<TMap> {
    ordinal::monotone_sequences(k.dots(), l.top(), strict)
        .into_iter()
        .filter(|images| check_coloured_map(k, l, images, strict).is_ok())
        .map(|images| TMap {
            src: k.clone(),
            dst: l.clone(),
            images,
        })
        .collect()
}

/// All fat-delta arrows `K → L`, lexicographic in their image sequences.
pub fn enum_hom_fat(k: &ColouredOrdinal, l: &ColouredOrdinal) -> Vec<FatMap> {
    enum_coloured(k, l, true).into_iter().map(FatMap).collect()
}

/// All arrows of `T` from `K` to `L` (dots may collapse).
pub fn enum_hom_t(k: &ColouredOrdinal, l: &ColouredOrdinal) -> Vec<TMap> {
    enum_coloured(k, l, false)
}

/// `g ∘ f` in `T`.
pub fn compose_t(f: &TMap, g: &TMap) -> Result<TMap> {
    if f.dst != g.src {
        return Err(Error::Mismatch {
            left: f.dst.to_string(),
            right: g.src.to_string(),
        });
    }
    let images: Vec<usize> = f.images.iter().map(|&i| g.images[i]).collect();
    check_coloured_map(&f.src, &g.dst, &images, false)
        .map_err(|e| Error::Internal(format!("composite of {f} and {g} is not a map: {e}")))?;
    Ok(TMap {
        src: f.src.clone(),
        dst: g.dst.clone(),
        images,
    })
}

/// `g ∘ f` in the fat delta. The link condition of the result is re-checked.
pub fn compose_fat(f: &FatMap, g: &FatMap) -> Result<FatMap> {
    let t = compose_t(&f.0, &g.0)?;
    check_coloured_map(&t.src, &t.dst, &t.images, true)
        .map_err(|e| Error::Internal(format!("composite of {f} and {g} is not injective: {e}")))?;
    Ok(FatMap(t))
}

/// The ordinal of linked components.
pub fn project(k: &ColouredOrdinal) -> Ordinal {
    Ordinal(k.components() - 1)
}

/// The induced map on linked components.
pub fn project_map(f: &TMap) -> DeltaMap {
    let images = (0..f.src.dots())
        .filter(|&i| i == 0 || !f.src.is_linked(i - 1))
        .map(|i| f.dst.component_of(f.images[i]))
        .collect();
    DeltaMap::new(project(&f.src), project(&f.dst), images)
        .expect("the link condition makes the component map well defined")
}

/// Whether `f` projects to an identity of `Δ`.
pub fn is_vertical(f: &FatMap) -> bool {
    project_map(&f.0).is_identity()
}

/// `K ∔ L`: glue the last dot of `K` to the first dot of `L`.
pub fn dotsum(k: &ColouredOrdinal, l: &ColouredOrdinal) -> ColouredOrdinal {
    let mut links = k.links.clone();
    links.extend_from_slice(&l.links);
    ColouredOrdinal { links }
}

/// The induced map `K ∔ L → K' ∔ L'` of `f: K → K'` and `g: L → L'`. Requires `f` to
/// keep the last dot last and `g` to keep the first dot first.
pub fn dotsum_maps(f: &FatMap, g: &FatMap) -> Result<FatMap> {
    if f.images().last() != Some(&f.dst().top()) {
        return Err(Error::Gluing(format!("{f} does not send last dot to last dot")));
    }
    if g.images()[0] != 0 {
        return Err(Error::Gluing(format!("{g} does not send first dot to first dot")));
    }
    let shift = f.dst().top();
    let mut images = f.images().to_vec();
    images.extend(g.images()[1..].iter().map(|&i| i + shift));
    FatMap::new(dotsum(f.src(), g.src()), dotsum(f.dst(), g.dst()), images)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Embedding {
    /// Nothing coloured.
    Horizontal,
    /// Everything coloured.
    Vertical,
}

/// The two inclusions of monotone injections into the fat delta.
pub fn embed(f: &DeltaMap, mode: Embedding) -> Result<FatMap> {
    if let Some(i) = f.images().windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::NotInjective(i));
    }
    let build = match mode {
        Embedding::Horizontal => ColouredOrdinal::unlinked,
        Embedding::Vertical => ColouredOrdinal::linked,
    };
    FatMap::new(build(f.src().dots()), build(f.dst().dots()), f.images().to_vec())
}

/// The epimorphism `[dots-1] ↠ [components-1]` describing an object.
pub fn object_epi(k: &ColouredOrdinal) -> DeltaMap {
    DeltaMap::new(
        Ordinal(k.top()),
        project(k),
        (0..k.dots()).map(|i| k.component_of(i)).collect(),
    )
    .expect("component indices are monotone")
}

/// Inverse of [`object_epi`].
pub fn object_from_epi(e: &DeltaMap) -> Result<ColouredOrdinal> {
    if !e.is_epi() {
        return Err(Error::BadSquare(format!("{e} is not an epimorphism")));
    }
    Ok(ColouredOrdinal {
        links: e.images().windows(2).map(|w| w[0] == w[1]).collect(),
    })
}

/// A fat-delta arrow seen as a commutative square in `Δ`:
///
/// ```text
///   . --top--> .
///   |          |
/// srcEpi     dstEpi
///   v          v
///   . -bottom> .
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpiSquare {
    pub top: DeltaMap,
    pub bottom: DeltaMap,
    pub src_epi: DeltaMap,
    pub dst_epi: DeltaMap,
}

impl EpiSquare {
    pub fn new(top: DeltaMap, bottom: DeltaMap, src_epi: DeltaMap, dst_epi: DeltaMap) -> Result<Self> {
        if !top.is_mono() {
            return Err(Error::BadSquare("top arrow is not a monomorphism".into()));
        }
        if !src_epi.is_epi() || !dst_epi.is_epi() {
            return Err(Error::BadSquare("vertical arrows must be epimorphisms".into()));
        }
        let right =
            compose_delta(&top, &dst_epi).map_err(|e| Error::BadSquare(format!("top/right do not compose: {e}")))?;
        let left = compose_delta(&src_epi, &bottom)
            .map_err(|e| Error::BadSquare(format!("left/bottom do not compose: {e}")))?;
        if left != right {
            return Err(Error::BadSquare("the square does not commute".into()));
        }
        Ok(Self {
            top,
            bottom,
            src_epi,
            dst_epi,
        })
    }

    pub fn from_fat(f: &FatMap) -> Self {
        Self {
            top: DeltaMap::new(Ordinal(f.src().top()), Ordinal(f.dst().top()), f.images().to_vec())
                .expect("fat maps are monotone"),
            bottom: project_map(f.as_tmap()),
            src_epi: object_epi(f.src()),
            dst_epi: object_epi(f.dst()),
        }
    }

    pub fn to_fat(&self) -> Result<FatMap> {
        let src = object_from_epi(&self.src_epi)?;
        let dst = object_from_epi(&self.dst_epi)?;
        FatMap::new(src, dst, self.top.images().to_vec())
            .map_err(|e| Error::Internal(format!("commuting square is not a fat map: {e}")))
    }
}

/// Counts arrows `K → L` through the square description: monos `u` of `Δ` for which
/// `dstEpi ∘ u` is constant on the fibres of `srcEpi`. Independent of the link
/// bookkeeping used by [`enum_hom_fat`].
pub fn count_epi_squares(k: &ColouredOrdinal, l: &ColouredOrdinal) -> usize {
    let e_src = object_epi(k);
    let e_dst = object_epi(l);
    enum_hom_delta(Ordinal(k.top()), Ordinal(l.top()))
        .into_iter()
        .filter(DeltaMap::is_mono)
        .filter(|u| {
            let eu = compose_delta(u, &e_dst).expect("composable");
            (0..k.top()).all(|i| e_src.apply(i) != e_src.apply(i + 1) || eu.apply(i) == eu.apply(i + 1))
        })
        .count()
}

/// The five vertical maps that generate all vertical arrows under `∔`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `[0]: o → o-o`, a linked dot on top.
    G1,
    /// `[1]: o → o-o`, a linked dot below.
    G2,
    /// `[0,2]: o.o → o-o.o`
    G3,
    /// `[0,2]: o.o → o.o-o`
    G4,
    /// `[0,2]: o-o → o-o-o`
    G5,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::G1,
        Generator::G2,
        Generator::G3,
        Generator::G4,
        Generator::G5,
    ];

    pub fn map(self) -> FatMap {
        let (src, dst, images): (&str, &str, &[usize]) = match self {
            Generator::G1 => ("o", "o-o", &[0]),
            Generator::G2 => ("o", "o-o", &[1]),
            Generator::G3 => ("o.o", "o-o.o", &[0, 2]),
            Generator::G4 => ("o.o", "o.o-o", &[0, 2]),
            Generator::G5 => ("o-o", "o-o-o", &[0, 2]),
        };
        FatMap::new(src.parse().unwrap(), dst.parse().unwrap(), images.to_vec()).expect("generators are fat maps")
    }

    /// Number of source edges the generator occupies.
    fn width(self) -> usize {
        match self {
            Generator::G1 | Generator::G2 => 0,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::G1 => "g1",
            Generator::G2 => "g2",
            Generator::G3 => "g3",
            Generator::G4 => "g4",
            Generator::G5 => "g5",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn vertical_generators() -> Vec<FatMap> {
    Generator::ALL.iter().map(|g| g.map()).collect()
}

/// One elementary vertical arrow: `id ∔ generator ∔ id`, with the generator's source
/// glued at dot `position` of the current object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecompositionStep {
    pub generator: Generator,
    pub position: usize,
}

/// The elementary arrow out of `source` described by `step`.
pub fn elementary_map(source: &ColouredOrdinal, step: DecompositionStep) -> Result<FatMap> {
    let DecompositionStep { generator, position } = step;
    let end = position + generator.width();
    if end > source.top() {
        return Err(Error::Gluing(format!("{generator} at {position} runs past {source}")));
    }
    let g = generator.map();
    // a one-dot side is the unit of the dot-sum, so it is left off
    let mut m = g;
    if position > 0 {
        m = dotsum_maps(&FatMap::identity(source.slice(0, position)), &m)?;
    }
    if end < source.top() {
        m = dotsum_maps(&m, &FatMap::identity(source.slice(end, source.top())))?;
    }
    if m.src() != source {
        return Err(Error::Gluing(format!(
            "{generator} does not fit {source} at dot {position}"
        )));
    }
    Ok(m)
}

/// Composes the elementary arrows of `steps`, starting at `source`.
pub fn recompose(source: &ColouredOrdinal, steps: &[DecompositionStep]) -> Result<FatMap> {
    steps.iter().try_fold(FatMap::identity(source.clone()), |acc, &step| {
        let e = elementary_map(acc.dst(), step)?;
        compose_fat(&acc, &e)
    })
}

/// Writes a vertical arrow as a composite of elementary arrows, each inserting one
/// linked dot. Missing target dots are inserted bottom to top; a dot below (above)
/// everything present uses `g2` (`g1`), and a dot inside a gap uses `g5`, `g3` or `g4`
/// according to which of its two new edges are linked.
pub fn vertical_decompose(f: &FatMap) -> Result<Vec<DecompositionStep>> {
    if !is_vertical(f) {
        return Err(Error::NotVertical);
    }
    let dst = f.dst();
    let mut present = f.images().to_vec();
    let mut steps = Vec::with_capacity(dst.dots() - present.len());
    for d in 0..dst.dots() {
        let pos = present.partition_point(|&p| p < d);
        if present.get(pos) == Some(&d) {
            continue;
        }
        let step = if pos == 0 {
            if !dst.linked_between(d, present[0]) {
                return Err(Error::Internal(format!("dot {d} of {dst} is not linked upward")));
            }
            DecompositionStep {
                generator: Generator::G2,
                position: 0,
            }
        } else if pos == present.len() {
            if !dst.linked_between(present[pos - 1], d) {
                return Err(Error::Internal(format!("dot {d} of {dst} is not linked downward")));
            }
            DecompositionStep {
                generator: Generator::G1,
                position: pos - 1,
            }
        } else {
            let below = dst.linked_between(present[pos - 1], d);
            let above = dst.linked_between(d, present[pos]);
            let generator = match (below, above) {
                (true, true) => Generator::G5,
                (true, false) => Generator::G3,
                (false, true) => Generator::G4,
                (false, false) => return Err(Error::Internal(format!("dot {d} of {dst} would be isolated"))),
            };
            DecompositionStep {
                generator,
                position: pos - 1,
            }
        };
        steps.push(step);
        present.insert(pos, d);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> ColouredOrdinal {
        s.parse().unwrap()
    }

    fn fat(s: &str, d: &str, images: &[usize]) -> FatMap {
        FatMap::new(k(s), k(d), images.to_vec()).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(k("o.o-o").links(), &[false, true]);
        assert_eq!(k(" o - o ").to_string(), "o-o");
        for bad in ["", "oo", "o-", "-o", "o-x-o", "o--o"] {
            assert!(bad.parse::<ColouredOrdinal>().is_err(), "{bad}");
        }
        let f: FatMap = "o.o -> o-o.o : [0,2]".parse().unwrap();
        assert_eq!(f.to_string(), "o.o -> o-o.o : [0,2]");
    }

    #[test]
    fn hom_examples() {
        assert_eq!(
            enum_hom_fat(&k("o"), &k("o-o")),
            vec![fat("o", "o-o", &[0]), fat("o", "o-o", &[1])]
        );
        assert!(enum_hom_fat(&k("o-o"), &k("o.o")).is_empty());
        assert_eq!(
            enum_hom_fat(&k("o-o"), &k("o-o-o")),
            vec![
                fat("o-o", "o-o-o", &[0, 1]),
                fat("o-o", "o-o-o", &[0, 2]),
                fat("o-o", "o-o-o", &[1, 2])
            ]
        );
    }

    #[test]
    fn collapsing_map_lives_in_t_only() {
        let t = TMap::new(k("o.o"), k("o"), vec![0, 0]).unwrap();
        assert!(matches!(t.to_fat(), Err(Error::NotInjective(0))));
        assert_eq!(enum_hom_t(&k("o.o"), &k("o")).len(), 1);
        assert!(enum_hom_fat(&k("o.o"), &k("o")).is_empty());
    }

    #[test]
    fn broken_links_are_rejected() {
        assert!(matches!(
            FatMap::new(k("o-o"), k("o.o-o"), vec![0, 2]),
            Err(Error::LinkBroken {
                edge: 0,
                target_edge: 0
            })
        ));
    }

    #[test]
    fn composition_examples() {
        let f = fat("o", "o-o", &[0]);
        assert_eq!(compose_fat(&FatMap::identity(k("o")), &f).unwrap(), f);
        let r = compose_fat(&f, &fat("o-o", "o-o-o", &[0, 2])).unwrap();
        assert_eq!(r, fat("o", "o-o-o", &[0]));
        let r = compose_fat(&fat("o", "o-o", &[1]), &fat("o-o", "o-o.o", &[0, 1])).unwrap();
        assert_eq!(r, fat("o", "o-o.o", &[1]));
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project(&k("o-o")), Ordinal(0));
        assert_eq!(project(&k("o.o-o")), Ordinal(1));
        let p = project_map(fat("o.o", "o-o.o", &[0, 2]).as_tmap());
        assert!(p.is_identity());
        assert_eq!(p.src(), Ordinal(1));
    }

    #[test]
    fn verticality_examples() {
        assert!(is_vertical(&fat("o", "o-o", &[0])));
        assert!(!is_vertical(&fat("o", "o.o", &[0])));
        for obj in ColouredOrdinal::all_with_dots(4) {
            assert!(is_vertical(&FatMap::identity(obj)));
        }
    }

    #[test]
    fn dotsum_examples() {
        assert_eq!(dotsum(&k("o.o"), &k("o-o")), k("o.o-o"));
        assert_eq!(dotsum(&k("o"), &k("o")), k("o"));
        let m = dotsum_maps(&fat("o", "o-o", &[1]), &FatMap::identity(k("o.o"))).unwrap();
        assert_eq!(m, fat("o.o", "o-o.o", &[1, 2]));
        assert!(dotsum_maps(&FatMap::identity(k("o")), &fat("o", "o-o", &[1])).is_err());
        assert!(matches!(
            dotsum_maps(&fat("o", "o-o", &[0]), &FatMap::identity(k("o-o"))),
            Err(Error::Gluing(_))
        ));
        // verticality survives dot-sums
        let v = dotsum_maps(&fat("o", "o-o", &[1]), &fat("o.o", "o-o.o", &[0, 2])).unwrap();
        assert!(is_vertical(&v));
    }

    #[test]
    fn embedding_examples() {
        let h = embed(&"1 -> 2 : [0,2]".parse().unwrap(), Embedding::Horizontal).unwrap();
        assert_eq!(h, fat("o.o", "o.o.o", &[0, 2]));
        let v = embed(&DeltaMap::identity(Ordinal(1)), Embedding::Vertical).unwrap();
        assert_eq!(v, FatMap::identity(k("o-o")));
        let v = embed(&"1 -> 2 : [0,1]".parse().unwrap(), Embedding::Vertical).unwrap();
        assert_eq!(v, fat("o-o", "o-o-o", &[0, 1]));
        assert!(embed(&"1 -> 1 : [0,0]".parse().unwrap(), Embedding::Vertical).is_err());
    }

    #[test]
    fn embeddings_are_functorial_and_project_to_inclusions() {
        for a in 0..=2 {
            for b in 0..=3 {
                for c in 0..=3 {
                    let fs: Vec<_> = enum_hom_delta(Ordinal(a), Ordinal(b))
                        .into_iter()
                        .filter(DeltaMap::is_mono)
                        .collect();
                    let gs: Vec<_> = enum_hom_delta(Ordinal(b), Ordinal(c))
                        .into_iter()
                        .filter(DeltaMap::is_mono)
                        .collect();
                    for f in &fs {
                        assert_eq!(&project_map(embed(f, Embedding::Horizontal).unwrap().as_tmap()), f);
                        for g in &gs {
                            let gf = compose_delta(f, g).unwrap();
                            for mode in [Embedding::Horizontal, Embedding::Vertical] {
                                let lhs = embed(&gf, mode).unwrap();
                                let rhs = compose_fat(&embed(f, mode).unwrap(), &embed(g, mode).unwrap()).unwrap();
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn epi_square_examples() {
        assert_eq!(object_epi(&k("o-o")), "1 -> 0 : [0,0]".parse().unwrap());
        assert!(object_epi(&k("o.o")).is_identity());
        let sq = EpiSquare::from_fat(&fat("o.o", "o-o.o", &[0, 2]));
        assert_eq!(sq.top, "1 -> 2 : [0,2]".parse().unwrap());
        assert!(sq.bottom.is_identity() && sq.bottom.src() == Ordinal(1));
        let bad = EpiSquare::new(
            "1 -> 2 : [0,2]".parse().unwrap(),
            "1 -> 1 : [0,1]".parse().unwrap(),
            "1 -> 0 : [0,0]".parse().unwrap(),
            "2 -> 1 : [0,0,1]".parse().unwrap(),
        );
        assert!(matches!(bad, Err(Error::BadSquare(_))));
    }

    #[test]
    fn square_round_trip_is_exhaustively_identity() {
        for m in 1..=4 {
            for n in 1..=4 {
                for a in ColouredOrdinal::all_with_dots(m) {
                    assert_eq!(object_from_epi(&object_epi(&a)).unwrap(), a);
                    for b in ColouredOrdinal::all_with_dots(n) {
                        let hom = enum_hom_fat(&a, &b);
                        assert_eq!(hom.len(), count_epi_squares(&a, &b));
                        for f in hom {
                            let sq = EpiSquare::from_fat(&f);
                            let checked = EpiSquare::new(
                                sq.top.clone(),
                                sq.bottom.clone(),
                                sq.src_epi.clone(),
                                sq.dst_epi.clone(),
                            )
                            .unwrap();
                            assert_eq!(checked.to_fat().unwrap(), f);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn object_counts_are_powers_of_two() {
        for n in 1..=8 {
            let all = ColouredOrdinal::all_with_dots(n);
            assert_eq!(all.len(), 1 << (n - 1));
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn generators() {
        let gens = vertical_generators();
        assert_eq!(gens.len(), 5);
        assert!(gens.iter().all(is_vertical));
        assert!(gens.iter().all(|g| g.src().components() == g.dst().components()));
        assert_eq!(gens[4].src().components(), 1);
        assert_eq!(gens[4].dst().components(), 1);
    }

    #[test]
    fn decomposition_examples() {
        assert!(vertical_decompose(&FatMap::identity(k("o.o-o"))).unwrap().is_empty());
        let g3 = Generator::G3.map();
        assert_eq!(
            vertical_decompose(&g3).unwrap(),
            vec![DecompositionStep {
                generator: Generator::G3,
                position: 0
            }]
        );
        // o.o → o-o.o-o keeps both components in place, so it is vertical
        let f = fat("o.o", "o-o.o-o", &[0, 2]);
        assert!(is_vertical(&f));
        let steps = vertical_decompose(&f).unwrap();
        assert_eq!(
            steps,
            vec![
                DecompositionStep {
                    generator: Generator::G3,
                    position: 0
                },
                DecompositionStep {
                    generator: Generator::G1,
                    position: 2
                },
            ]
        );
        assert_eq!(recompose(f.src(), &steps).unwrap(), f);

        let f = fat("o-o", "o-o-o-o", &[0, 3]);
        let steps = vertical_decompose(&f).unwrap();
        assert_eq!(steps.len(), 2);
        assert!(steps.iter().all(|s| s.generator == Generator::G5));
        assert_eq!(recompose(f.src(), &steps).unwrap(), f);

        assert!(matches!(
            vertical_decompose(&fat("o", "o.o", &[0])),
            Err(Error::NotVertical)
        ));
    }

    #[test]
    fn elementary_map_rejects_misplaced_generators() {
        let src = k("o.o");
        let step = |generator, position| DecompositionStep { generator, position };
        assert!(elementary_map(&src, step(Generator::G5, 0)).is_err());
        assert!(elementary_map(&src, step(Generator::G1, 0)).is_err());
        assert!(elementary_map(&src, step(Generator::G2, 1)).is_err());
        assert_eq!(
            elementary_map(&src, step(Generator::G4, 0)).unwrap(),
            fat("o.o", "o.o-o", &[0, 2])
        );
        assert_eq!(
            elementary_map(&src, step(Generator::G1, 1)).unwrap(),
            fat("o.o", "o.o-o", &[0, 1])
        );
    }
}
