//! Finite tolerance approximation spaces.
//!
//! Points are the indices `0..n`. Subsets are bit sets over a `u64`, so a
//! universe holds at most [`MAX_POINTS`] points.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub const MAX_POINTS: usize = 64;

/// A set of universe indices.
///
/// The parent space is not stored; operations on a [`ToleranceSpace`]
/// validate that every member is in range. The derived `Ord` compares raw
/// bits; use [`Subset::cmp_lex`] or [`Subset::cmp_rank`] for the canonical
/// orders.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The first `n` points.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_POINTS);
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1u64 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending member lists.
    pub fn cmp_lex(self, other: Subset) -> Ordering {
        lex_cmp_bits(self.0, other.0)
    }

    /// Subset-rank: smaller sets first, ties broken lexicographically.
    pub fn cmp_rank(self, other: Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.cmp_lex(other))
    }

    /// All subsets of `self`, including `∅` and `self`, in increasing bit order.
    pub fn subsets(self) -> SubMasks {
        SubMasks {
            mask: self.0,
            next: Some(0),
        }
    }
}

/// Lexicographic comparison of two bit masks read as ascending index lists.
pub(crate) fn lex_cmp_bits(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff.trailing_zeros();
    let above = |m: u64| if low >= 63 { 0 } else { m >> (low + 1) };
    if a & (1u64 << low) != 0 {
        // `a` lists `low` where `b` lists something larger or has ended.
        if above(b) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if above(a) != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> core::result::Result<Self, D::Error> {
        struct IndexList;
        impl<'de> Visitor<'de> for IndexList {
            type Value = Subset;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of point indices below 64")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> core::result::Result<Subset, A::Error> {
                let mut s = Subset::EMPTY;
                while let Some(i) = seq.next_element::<usize>()? {
                    if i >= MAX_POINTS {
                        return Err(serde::de::Error::custom("point index out of range"));
                    }
                    s = s.with(i);
                }
                Ok(s)
            }
        }
        deserializer.deserialize_seq(IndexList)
    }
}

/// Ascending member indices of a [`Subset`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Submask enumeration of a fixed mask.
pub struct SubMasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for SubMasks {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// A finite universe `0..n` with a reflexive, symmetric relation.
#[derive(Clone, PartialEq, Eq)]
pub struct ToleranceSpace {
    size: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for ToleranceSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ToleranceSpace(n={}, edges=[", self.size)?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        f.write_str("])")
    }
}

impl ToleranceSpace {
    /// Builds a space from index pairs.
    ///
    /// The reflexive closure is always taken. Without `symmetrize`, every
    /// off-diagonal pair must come with its mirror.
    pub fn build(size: usize, pairs: &[(usize, usize)], symmetrize: bool) -> Result<Self> {
        Self::check_size(size)?;
        let mut rows: Vec<u64> = (0..size).map(|i| 1u64 << i).collect();
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= size {
                    return Err(Error::IndexOutOfRange { index, size });
                }
            }
            rows[i] |= 1u64 << j;
            if symmetrize {
                rows[j] |= 1u64 << i;
            }
        }
        Self::from_rows(size, rows)
    }

    /// Builds a space from a full boolean matrix; the diagonal is forced true.
    pub fn from_matrix(matrix: &[Vec<bool>]) -> Result<Self> {
        let size = matrix.len();
        Self::check_size(size)?;
        let mut rows = Vec::with_capacity(size);
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != size {
                return Err(Error::IndexOutOfRange {
                    index: row.len().max(size),
                    size,
                });
            }
            let mut bits = 1u64 << i;
            for (j, &related) in row.iter().enumerate() {
                if related {
                    bits |= 1u64 << j;
                }
            }
            rows.push(bits);
        }
        Self::from_rows(size, rows)
    }

    fn from_rows(size: usize, rows: Vec<u64>) -> Result<Self> {
        for i in 0..size {
            for j in (i + 1)..size {
                let ij = rows[i] & (1u64 << j) != 0;
                let ji = rows[j] & (1u64 << i) != 0;
                if ij != ji {
                    return Err(if ij {
                        Error::Asymmetric(i, j)
                    } else {
                        Error::Asymmetric(j, i)
                    });
                }
            }
        }
        Ok(ToleranceSpace {
            size,
            rows,
            labels: None,
        })
    }

    fn check_size(size: usize) -> Result<()> {
        if size == 0 {
            return Err(Error::EmptyUniverse);
        }
        if size > MAX_POINTS {
            return Err(Error::UniverseTooLarge {
                size,
                max: MAX_POINTS,
            });
        }
        Ok(())
    }

    /// The identity relation on `0..n`.
    pub fn discrete(size: usize) -> Result<Self> {
        Self::build(size, &[], false)
    }

    /// The relation with every point related to every other.
    pub fn complete(size: usize) -> Result<Self> {
        Self::check_size(size)?;
        let full = Subset::full(size).bits();
        Self::from_rows(size, alloc::vec![full; size])
    }

    /// The equivalence relation whose classes are `classes`.
    pub fn from_classes(size: usize, classes: &[&[usize]]) -> Result<Self> {
        let mut pairs = Vec::new();
        for class in classes {
            for &a in class.iter() {
                for &b in class.iter() {
                    pairs.push((a, b));
                }
            }
        }
        Self::build(size, &pairs, false)
    }

    /// Number of unordered off-diagonal pairs, the width of an edge code.
    pub fn edge_slots(size: usize) -> usize {
        size * size.saturating_sub(1) / 2
    }

    /// Decodes the exhaustive-enumeration encoding: bit `k` of `code` is the
    /// `k`-th pair `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_edge_code(size: usize, code: u64) -> Result<Self> {
        Self::check_size(size)?;
        let slots = Self::edge_slots(size);
        if slots < 64 && code >> slots != 0 {
            return Err(Error::InvalidSweep(alloc::format!(
                "edge code {code} too wide for {size} points"
            )));
        }
        let mut rows: Vec<u64> = (0..size).map(|i| 1u64 << i).collect();
        let mut k = 0;
        for i in 0..size {
            for j in (i + 1)..size {
                if k < 64 && code & (1u64 << k) != 0 {
                    rows[i] |= 1u64 << j;
                    rows[j] |= 1u64 << i;
                }
                k += 1;
            }
        }
        Self::from_rows(size, rows)
    }

    /// Inverse of [`ToleranceSpace::from_edge_code`]; `None` when the pair slots do
    /// not fit in 64 bits.
    pub fn edge_code(&self) -> Option<u64> {
        if Self::edge_slots(self.size) > 64 {
            return None;
        }
        let mut code = 0u64;
        let mut k = 0;
        for i in 0..self.size {
            for j in (i + 1)..self.size {
                if self.related(i, j) {
                    code |= 1u64 << k;
                }
                k += 1;
            }
        }
        Some(code)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::LabelCount {
                expected: self.size,
                got: labels.len(),
            });
        }
        for (k, label) in labels.iter().enumerate() {
            if labels[..k].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn universe(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rows[x] & (1u64 << y) != 0
    }

    /// Off-diagonal pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in (i + 1)..self.size {
                if self.related(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn check_subset(&self, a: Subset) -> Result<()> {
        if a.is_subset(self.universe()) {
            Ok(())
        } else {
            let index = a.difference(self.universe()).min().unwrap_or(self.size);
            Err(Error::IndexOutOfRange {
                index,
                size: self.size,
            })
        }
    }

    /// `[x]_T`, every point related to `x`.
    pub fn neighborhood(&self, x: usize) -> Subset {
        Subset(self.rows[x])
    }

    /// `dom_T(z)`: the intersection of all neighborhoods containing `z`.
    pub fn dom(&self, z: usize) -> Subset {
        // z ∈ [x] iff x ∈ [z] by symmetry.
        self.neighborhood(z)
            .iter()
            .fold(self.universe(), |acc, x| acc & self.neighborhood(x))
    }

    /// Points with equal `dom` values, as a partition.
    pub fn theta0(&self) -> Partition {
        let doms: Vec<Subset> = (0..self.size).map(|z| self.dom(z)).collect();
        let mut classes: Vec<Subset> = Vec::new();
        let mut assigned = Subset::EMPTY;
        for z in 0..self.size {
            if assigned.contains(z) {
                continue;
            }
            let class = Subset::from_indices((z..self.size).filter(|&w| doms[w] == doms[z]));
            assigned = assigned | class;
            classes.push(class);
        }
        Partition { classes }
    }

    pub fn is_equivalence(&self) -> bool {
        (0..self.size).all(|x| {
            let nx = self.neighborhood(x);
            nx.iter().all(|y| self.neighborhood(y) == nx)
        })
    }

    /// Whether every pair of members is related.
    pub fn is_clique(&self, a: Subset) -> bool {
        a.iter().all(|x| a.is_subset(self.neighborhood(x)))
    }

    /// `A^l`: union of the neighborhoods contained in `A`.
    pub fn classical_lower(&self, a: Subset) -> Subset {
        (0..self.size)
            .map(|x| self.neighborhood(x))
            .filter(|nx| nx.is_subset(a))
            .fold(Subset::EMPTY, |acc, nx| acc | nx)
    }

    /// `A^u`: union of the neighborhoods of points of `A` meeting `A`.
    pub fn classical_upper(&self, a: Subset) -> Subset {
        a.iter()
            .map(|x| self.neighborhood(x))
            .filter(|nx| nx.intersects(a))
            .fold(Subset::EMPTY, |acc, nx| acc | nx)
    }

    /// `A^{l*}`: points related to some `y` with `[y] ⊆ A`.
    pub fn star_lower(&self, a: Subset) -> Subset {
        Subset::from_indices((0..self.size).filter(|&x| {
            self.neighborhood(x)
                .iter()
                .any(|y| self.neighborhood(y).is_subset(a))
        }))
    }

    /// `A^{u*}`: points all of whose related `y` have `[y]` meeting `A`.
    pub fn star_upper(&self, a: Subset) -> Subset {
        Subset::from_indices((0..self.size).filter(|&x| {
            self.neighborhood(x)
                .iter()
                .all(|y| self.neighborhood(y).intersects(a))
        }))
    }
}

/// Pairwise disjoint classes covering the universe, ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    classes: Vec<Subset>,
}

impl Partition {
    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> Option<Subset> {
        self.classes.iter().copied().find(|c| c.contains(x))
    }

    /// Pawlak lower approximation: union of classes inside `a`.
    pub fn lower(&self, a: Subset) -> Subset {
        self.classes
            .iter()
            .filter(|c| c.is_subset(a))
            .fold(Subset::EMPTY, |acc, &c| acc | c)
    }

    /// Pawlak upper approximation: union of classes meeting `a`.
    pub fn upper(&self, a: Subset) -> Subset {
        self.classes
            .iter()
            .filter(|c| c.intersects(a))
            .fold(Subset::EMPTY, |acc, &c| acc | c)
    }
}
