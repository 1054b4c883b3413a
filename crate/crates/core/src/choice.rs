//! Block collections, the disjoint-subfamily searches, and the
//! lattice-coherent choice function `λ`.
//!
//! Collections are ordered by `≺`: `E ≺ B` iff `E ⊆ B` and the blocks of `E`
//! are pairwise disjoint. Cones are taken with respect to the reflexive
//! closure `⪯` of `≺`, which is a partial order on `℘(𝕊)`.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::audit::verdict::{AuditVerdict, Counterexample, SpaceCode, Status};
use crate::blocks::{Block, BlockFamily, MAX_BLOCKS};
use crate::space::{lex_cmp_bits, Subset, ToleranceSpace};
use crate::{Error, Result};

/// A subfamily of a [`BlockFamily`], addressed by block positions.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockCollection {
    mask: u64,
    disjoint: bool,
}

impl BlockCollection {
    pub fn new<I: IntoIterator<Item = usize>>(family: &BlockFamily, indices: I) -> Result<Self> {
        family.ensure_addressable()?;
        let mut mask = 0u64;
        for index in indices {
            if index >= family.len() {
                return Err(Error::FamilyMismatch {
                    index,
                    len: family.len(),
                });
            }
            mask |= 1u64 << index;
        }
        Ok(Self::from_mask(family, mask))
    }

    pub(crate) fn from_mask(family: &BlockFamily, mask: u64) -> Self {
        BlockCollection {
            mask,
            disjoint: family.is_disjoint_mask(mask),
        }
    }

    pub const EMPTY: BlockCollection = BlockCollection {
        mask: 0,
        disjoint: true,
    };

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn indices(self) -> crate::space::Members {
        Subset::from_bits(self.mask).iter()
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    /// Whether the referenced blocks are pairwise disjoint.
    pub fn is_disjoint(self) -> bool {
        self.disjoint
    }

    pub fn is_subcollection(self, other: BlockCollection) -> bool {
        self.mask & !other.mask == 0
    }

    /// Union of the referenced blocks.
    pub fn union(self, family: &BlockFamily) -> Subset {
        family.union_mask(self.mask)
    }

    pub fn blocks(self, family: &BlockFamily) -> Vec<Block> {
        self.indices().map(|i| family.blocks()[i]).collect()
    }

    /// Canonical order: lexicographic on the sorted index lists.
    pub fn cmp_canonical(self, other: BlockCollection) -> Ordering {
        lex_cmp_bits(self.mask, other.mask)
    }

    fn check(self, family: &BlockFamily) -> Result<()> {
        let stray = self.mask & !family.all_mask();
        if stray != 0 {
            return Err(Error::FamilyMismatch {
                index: stray.trailing_zeros() as usize,
                len: family.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for BlockCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", Subset::from_bits(self.mask))
    }
}

impl Serialize for BlockCollection {
    fn serialize<S: Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.indices() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

/// A duplicate-free family of collections in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CollectionFamily {
    members: Vec<BlockCollection>,
}

impl CollectionFamily {
    pub fn new<I: IntoIterator<Item = BlockCollection>>(members: I) -> Self {
        let mut members: Vec<BlockCollection> = members.into_iter().collect();
        members.sort_by(|a, b| a.cmp_canonical(*b));
        members.dedup();
        CollectionFamily { members }
    }

    pub fn members(&self) -> &[BlockCollection] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: BlockCollection) -> bool {
        self.members
            .binary_search_by(|m| m.cmp_canonical(c))
            .is_ok()
    }
}

/// `E ≺ B`: `E ⊆ B` and `E` is pairwise disjoint.
pub fn prec(family: &BlockFamily, e: BlockCollection, b: BlockCollection) -> Result<bool> {
    e.check(family)?;
    b.check(family)?;
    Ok(e.is_subcollection(b) && e.is_disjoint())
}

/// Reflexive closure of `≺`.
fn preceq(e: BlockCollection, b: BlockCollection) -> bool {
    e == b || (e.is_subcollection(b) && e.is_disjoint())
}

fn block_mask(family: &BlockFamily, blocks: &[Block]) -> Result<u64> {
    family.ensure_addressable()?;
    let mut mask = 0u64;
    for b in blocks {
        let i = family
            .index_of(b.members())
            .ok_or(Error::FamilyMismatch {
                index: family.len(),
                len: family.len(),
            })?;
        mask |= 1u64 << i;
    }
    Ok(mask)
}

/// All ⊆-maximal pairwise-disjoint subfamilies of `candidates`; `[∅]` when
/// `candidates` is empty.
pub fn maximal_disjoint_subcollections(
    family: &BlockFamily,
    candidates: &[Block],
) -> Result<CollectionFamily> {
    let mask = block_mask(family, candidates)?;
    Ok(maximal_disjoint_in(family, mask))
}

pub(crate) fn maximal_disjoint_in(family: &BlockFamily, candidates: u64) -> CollectionFamily {
    // Maximal cliques of the "disjoint from" graph on the candidates.
    let adj: Vec<u64> = (0..family.len())
        .map(|i| candidates & !family.overlaps(i) & !(1u64 << i))
        .collect();
    let mut found = Vec::new();
    crate::blocks::bron_kerbosch(&adj, 0, candidates, 0, &mut found);
    CollectionFamily::new(found.into_iter().map(|m| BlockCollection::from_mask(family, m)))
}

/// All ⊆-minimal pairwise-disjoint subfamilies of `𝕊_u(A)` whose union
/// contains `a`. Empty when no disjoint cover exists; `[∅]` for `a = ∅`.
pub fn minimal_disjoint_covers(family: &BlockFamily, a: Subset) -> Result<CollectionFamily> {
    family.ensure_addressable()?;
    Ok(minimal_disjoint_covers_in(family, a))
}

pub(crate) fn minimal_disjoint_covers_in(family: &BlockFamily, a: Subset) -> CollectionFamily {
    let candidates = family.meeting_mask(a);
    let mut found = Vec::new();
    cover_search(family, candidates, a, 0, Subset::EMPTY, &mut found);
    CollectionFamily::new(found.into_iter().map(|m| BlockCollection::from_mask(family, m)))
}

// Branch on the least uncovered point. Each chosen block is the only one
// covering the point it was picked for, so every cover found is minimal, and
// every minimal disjoint cover is reached this way.
fn cover_search(
    family: &BlockFamily,
    candidates: u64,
    uncovered: Subset,
    chosen: u64,
    used: Subset,
    out: &mut Vec<u64>,
) {
    let Some(p) = uncovered.min() else {
        out.push(chosen);
        return;
    };
    for i in Subset::from_bits(candidates).iter() {
        let b = family.block(i);
        if b.contains(p) && !b.intersects(used) {
            cover_search(
                family,
                candidates & !(1u64 << i),
                uncovered - b,
                chosen | (1u64 << i),
                used | b,
                out,
            );
        }
    }
}

/// Whether `a` is exactly the union of some pairwise-disjoint blocks.
pub fn is_disjoint_block_union(family: &BlockFamily, a: Subset) -> bool {
    fn go(family: &BlockFamily, rest: Subset) -> bool {
        let Some(p) = rest.min() else { return true };
        family
            .blocks()
            .iter()
            .any(|b| b.members().contains(p) && b.members().is_subset(rest) && go(family, rest - b.members()))
    }
    go(family, a)
}

/// Number of pairwise-disjoint subcollections of `mask`, stopping once the
/// count passes `limit`.
fn count_disjoint_subcollections(family: &BlockFamily, mask: u64, limit: usize) -> usize {
    if mask == 0 {
        return 1;
    }
    let v = mask.trailing_zeros() as usize;
    let bit = 1u64 << v;
    let without = count_disjoint_subcollections(family, mask & !bit, limit);
    if without > limit {
        return without;
    }
    let with = count_disjoint_subcollections(family, mask & !bit & !family.overlaps(v), limit);
    without.saturating_add(with)
}

fn pow2(k: usize) -> usize {
    if k >= usize::BITS as usize {
        usize::MAX
    } else {
        1usize << k
    }
}

/// The choice function.
///
/// 1. If `family` is the principal down-set `{x ⪯ g}` of one of its members,
///    return `g`.
/// 2. Else if it is the principal up-set `{x : m ⪯ x}` in `℘(𝕊)`, return `m`.
/// 3. Else return the canonically least member.
///
/// Rules 1 and 2 give lattice coherence on cones; on the antichains produced by
/// the approximation searches only rule 3 applies.
pub fn lambda_select(family: &BlockFamily, choices: &CollectionFamily) -> Result<BlockCollection> {
    let members = choices.members();
    let first = *members.first().ok_or(Error::EmptyChoice)?;
    for c in members {
        c.check(family)?;
    }
    if members.len() == 1 {
        return Ok(first);
    }

    let top = members.iter().fold(0u64, |m, c| m | c.mask);
    if let Some(&g) = members.iter().find(|c| c.mask == top) {
        if members.iter().all(|&x| preceq(x, g)) {
            // A non-disjoint g sits above its disjoint subcollections only.
            let expected = if g.disjoint {
                pow2(g.len())
            } else {
                count_disjoint_subcollections(family, g.mask, members.len()).saturating_add(1)
            };
            if expected == members.len() {
                return Ok(g);
            }
        }
    }

    let bottom = members.iter().fold(u64::MAX, |m, c| m & c.mask);
    if let Some(&m) = members.iter().find(|c| c.mask == bottom) {
        if members.iter().all(|&x| preceq(m, x)) {
            let expected = if m.disjoint {
                pow2(family.len() - m.len())
            } else {
                1
            };
            if expected == members.len() {
                return Ok(m);
            }
        }
    }

    Ok(first)
}

/// `L(a, b)` for `a ≺ b`: the disjoint collections below `a`, i.e. `℘(a)`.
pub fn lower_cone(family: &BlockFamily, a: BlockCollection, b: BlockCollection) -> CollectionFamily {
    CollectionFamily::new(
        Subset::from_bits(a.mask)
            .subsets()
            .map(|s| BlockCollection::from_mask(family, s.bits()))
            .filter(|&x| preceq(x, a) && preceq(x, b)),
    )
}

/// `U(a, b)` for `a ≺ b`: collections above both.
pub fn upper_cone(family: &BlockFamily, a: BlockCollection, b: BlockCollection) -> CollectionFamily {
    let rest = family.all_mask() & !b.mask;
    CollectionFamily::new(
        Subset::from_bits(rest)
            .subsets()
            .map(|s| BlockCollection::from_mask(family, b.mask | s.bits()))
            .filter(|&x| preceq(a, x) && preceq(b, x)),
    )
}

/// Largest family for which [`coherence_audit`] sweeps all collection pairs.
pub const COHERENCE_MAX_BLOCKS: usize = 12;

/// Checks `λ(L(a,b)) = a` and `λ(U(a,b)) = b` for every pair `a ≺ b`, `a ≠ b`.
///
/// Reflexive pairs are excluded: when all blocks are disjoint, `L(𝕊,𝕊)` and
/// `U(∅,∅)` are both `℘(𝕊)` and no function can satisfy both.
pub fn coherence_audit(space: &ToleranceSpace) -> Result<AuditVerdict> {
    let family = BlockFamily::enumerate(space);
    if family.len() > COHERENCE_MAX_BLOCKS {
        return Err(Error::CapExceeded {
            what: "block family for coherence audit",
            size: family.len(),
            max: COHERENCE_MAX_BLOCKS,
        });
    }
    let all = family.all_mask();
    let scope = format!("all strict ≺ pairs over ℘(𝕊), |𝕊| = {}", family.len());
    let mut instances = 0u64;
    for a_set in Subset::from_bits(all).subsets() {
        let a = BlockCollection::from_mask(&family, a_set.bits());
        if !a.disjoint {
            continue;
        }
        let rest = all & !a.mask;
        for extra in Subset::from_bits(rest).subsets().skip(1) {
            let b = BlockCollection::from_mask(&family, a.mask | extra.bits());
            instances += 1;
            let low = lambda_select(&family, &lower_cone(&family, a, b))?;
            let high = lambda_select(&family, &upper_cone(&family, a, b))?;
            if low != a || high != b {
                let trace = format!(
                    "a = {:?}, b = {:?}: λ(L(a,b)) = {:?}, λ(U(a,b)) = {:?}",
                    a, b, low, high
                );
                return Ok(AuditVerdict {
                    claim: "COH".into(),
                    scope,
                    status: Status::Refuted,
                    instances,
                    vacuous: 0,
                    counterexample: Some(Counterexample {
                        space: SpaceCode::of(space),
                        witnesses: alloc::vec![a.union(&family), b.union(&family)],
                        trace,
                    }),
                });
            }
        }
    }
    Ok(AuditVerdict {
        claim: "COH".into(),
        scope,
        status: if instances > 0 {
            Status::Verified
        } else {
            Status::Vacuous
        },
        instances,
        vacuous: 0,
        counterexample: None,
    })
}

const _: () = assert!(MAX_BLOCKS <= 64);
