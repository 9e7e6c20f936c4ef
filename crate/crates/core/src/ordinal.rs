//! The simplex category: nonempty finite ordinals and monotone maps.
//!
//! The ordinal **n** has `n + 1` dots `0 ≤ 1 ≤ … ≤ n`. A map is stored as its full
//! image sequence, so two maps are equal exactly when their sources, targets and
//! images agree.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ordinal **n**, with `n + 1` dots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ordinal(pub usize);

impl Ordinal {
    pub fn dots(self) -> usize {
        self.0 + 1
    }

    /// Index of the last dot.
    pub fn top(self) -> usize {
        self.0
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A monotone map between ordinals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMap {
    src: Ordinal,
    dst: Ordinal,
    images: Vec<usize>,
}

impl DeltaMap {
    pub fn new(src: Ordinal, dst: Ordinal, images: Vec<usize>) -> Result<Self> {
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
        if let Some(i) = images.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotMonotone(i));
        }
        Ok(Self { src, dst, images })
    }

    pub fn identity(n: Ordinal) -> Self {
        Self {
            src: n,
            dst: n,
            images: (0..n.dots()).collect(),
        }
    }

    /// The coface `δ_i : n-1 → n` missing dot `i`.
    pub fn coface(n: usize, i: usize) -> Result<Self> {
        if n == 0 || i > n {
            return Err(Error::Malformed(format!("no coface δ_{i} into {n}")));
        }
        let images = (0..n).map(|k| if k < i { k } else { k + 1 }).collect();
        Self::new(Ordinal(n - 1), Ordinal(n), images)
    }

    /// The codegeneracy `σ_j : n+1 → n` hitting dot `j` twice.
    pub fn codegeneracy(n: usize, j: usize) -> Result<Self> {
        if j > n {
            return Err(Error::Malformed(format!("no codegeneracy σ_{j} onto {n}")));
        }
        let images = (0..n + 2).map(|k| if k <= j { k } else { k - 1 }).collect();
        Self::new(Ordinal(n + 1), Ordinal(n), images)
    }

    pub fn src(&self) -> Ordinal {
        self.src
    }

    pub fn dst(&self) -> Ordinal {
        self.dst
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, dot: usize) -> usize {
        self.images[dot]
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_mono(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_epi(&self) -> bool {
        // monotone, so surjective iff it starts at 0, ends at the top and never skips
        self.images[0] == 0
            && *self.images.last().unwrap() == self.dst.top()
            && self.images.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &DeltaMap) -> Result<DeltaMap> {
        compose_delta(self, g)
    }
}

impl fmt::Display for DeltaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} : {}", self.src, self.dst, fmt_images(&self.images))
    }
}

impl FromStr for DeltaMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, images) = split_map_text(s)?;
        let (src, dst) = head
            .split_once("->")
            .ok_or_else(|| Error::Parse(format!("expected `m -> n` in `{head}`")))?;
        let parse_ord = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map(Ordinal)
                .map_err(|e| Error::Parse(format!("bad ordinal `{}`: {e}", t.trim())))
        };
        DeltaMap::new(parse_ord(src)?, parse_ord(dst)?, images)
    }
}

pub(crate) fn fmt_images(images: &[usize]) -> String {
    let parts: Vec<String> = images.iter().map(|i| i.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Splits `HEAD : [i0,i1,...]` into the head text and the image list.
pub(crate) fn split_map_text(s: &str) -> Result<(&str, Vec<usize>)> {
    let (head, tail) = s
        .rsplit_once(':')
        .ok_or_else(|| Error::Parse(format!("expected `... : [..]` in `{s}`")))?;
    Ok((head, parse_images(tail)?))
}

pub(crate) fn parse_images(s: &str) -> Result<Vec<usize>> {
    let body = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed image list, got `{}`", s.trim())))?;
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad image `{}`: {e}", t.trim())))
        })
        .collect()
}

/// All sequences of length `len` over `0..=max`, weakly (or strictly) increasing,
/// in lexicographic order.
pub(crate) fn monotone_sequences(len: usize, max: usize, strict: bool) -> Vec<Vec<usize>> {
    fn go(len: usize, max: usize, strict: bool, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let start = match current.last() {
            None => 0,
            Some(&last) if strict => last + 1,
            Some(&last) => last,
        };
        for v in start..=max {
            current.push(v);
            go(len, max, strict, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max, strict, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Every monotone map `m → n`, lexicographic in the image sequences.
pub fn enum_hom_delta(m: Ordinal, n: Ordinal) -> Vec<DeltaMap> {
    monotone_sequences(m.dots(), n.top(), false)
        .into_iter()
        .map(|images| DeltaMap { src: m, dst: n, images })
        .collect()
}

/// `g ∘ f`, defined when `f.dst == g.src`.
pub fn compose_delta(f: &DeltaMap, g: &DeltaMap) -> Result<DeltaMap> {
    if f.dst != g.src {
        return Err(Error::Mismatch {
            left: f.dst.to_string(),
            right: g.src.to_string(),
        });
    }
    Ok(DeltaMap {
        src: f.src,
        dst: g.dst,
        images: f.images.iter().map(|&i| g.images[i]).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub epi: DeltaMap,
    pub mono: DeltaMap,
    pub is_epi: bool,
    pub is_mono: bool,
}

/// Factors `f` through its image ordinal as `mono ∘ epi`.
pub fn epi_mono_factor(f: &DeltaMap) -> Factorization {
    let mut image: Vec<usize> = f.images.clone();
    image.dedup();
    let mid = Ordinal(image.len() - 1);
    let mut epi = Vec::with_capacity(f.images.len());
    let mut k = 0;
    for &i in &f.images {
        while image[k] != i {
            k += 1;
        }
        epi.push(k);
    }
    Factorization {
        epi: DeltaMap {
            src: f.src,
            dst: mid,
            images: epi,
        },
        mono: DeltaMap {
            src: mid,
            dst: f.dst,
            images: image,
        },
        is_epi: f.is_epi(),
        is_mono: f.is_mono(),
    }
}

/// The pushout `m ∔ n` of `m ← 0 → n` gluing the last dot of `m` to the first dot of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaDotSum {
    pub sum: Ordinal,
    pub left: DeltaMap,
    pub right: DeltaMap,
}

pub fn dotsum_delta(m: Ordinal, n: Ordinal) -> DeltaDotSum {
    let sum = Ordinal(m.0 + n.0);
    DeltaDotSum {
        sum,
        left: DeltaMap {
            src: m,
            dst: sum,
            images: (0..m.dots()).collect(),
        },
        right: DeltaMap {
            src: n,
            dst: sum,
            images: (0..n.dots()).map(|i| i + m.0).collect(),
        },
    }
}
