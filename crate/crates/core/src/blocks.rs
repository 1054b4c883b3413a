//! Blocks of a tolerance: maximal sets of pairwise related points.

use alloc::vec::Vec;
use core::fmt;

use serde::Serialize;

use crate::space::{Subset, ToleranceSpace};
use crate::{Error, Result};

/// Families larger than this cannot be addressed by a [`crate::BlockCollection`].
pub const MAX_BLOCKS: usize = 64;

/// A maximal clique of the tolerance.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Block(Subset);

impl Block {
    pub fn members(self) -> Subset {
        self.0
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Block{}", self.0)
    }
}

/// Every block of a space, in canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockFamily {
    blocks: Vec<Block>,
    // overlaps[i]: the other blocks sharing a point with block i. Empty when
    // the family exceeds MAX_BLOCKS.
    overlaps: Vec<u64>,
}

impl BlockFamily {
    /// Enumerates all maximal cliques with Bron–Kerbosch (Tomita pivoting).
    pub fn enumerate(space: &ToleranceSpace) -> Self {
        let n = space.size();
        // Open neighborhoods.
        let adj: Vec<u64> = (0..n)
            .map(|x| space.neighborhood(x).without(x).bits())
            .collect();
        let mut found = Vec::new();
        bron_kerbosch(&adj, 0, space.universe().bits(), 0, &mut found);
        let mut blocks: Vec<Block> = found.into_iter().map(|b| Block(Subset::from_bits(b))).collect();
        blocks.sort_by(|a, b| a.0.cmp_lex(b.0));
        Self::from_sorted(blocks)
    }

    fn from_sorted(blocks: Vec<Block>) -> Self {
        let overlaps = if blocks.len() <= MAX_BLOCKS {
            (0..blocks.len())
                .map(|i| {
                    let mut m = 0u64;
                    for (j, b) in blocks.iter().enumerate() {
                        if j != i && b.0.intersects(blocks[i].0) {
                            m |= 1u64 << j;
                        }
                    }
                    m
                })
                .collect()
        } else {
            Vec::new()
        };
        BlockFamily { blocks, overlaps }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> Subset {
        self.blocks[i].0
    }

    pub fn index_of(&self, members: Subset) -> Option<usize> {
        self.blocks.iter().position(|b| b.0 == members)
    }

    pub fn is_block(&self, members: Subset) -> bool {
        self.index_of(members).is_some()
    }

    /// `𝕊(A)`: blocks included in `a`.
    pub fn blocks_within(&self, a: Subset) -> Vec<Block> {
        self.blocks.iter().copied().filter(|b| b.0.is_subset(a)).collect()
    }

    /// `𝕊_u(A)`: blocks meeting `a`.
    pub fn blocks_meeting(&self, a: Subset) -> Vec<Block> {
        self.blocks.iter().copied().filter(|b| b.0.intersects(a)).collect()
    }

    pub fn union_of(&self, blocks: &[Block]) -> Subset {
        blocks.iter().fold(Subset::EMPTY, |acc, b| acc | b.0)
    }

    /// Fails when the family has more than [`MAX_BLOCKS`] blocks.
    pub fn ensure_addressable(&self) -> Result<()> {
        if self.blocks.len() > MAX_BLOCKS {
            Err(Error::CapExceeded {
                what: "block family",
                size: self.blocks.len(),
                max: MAX_BLOCKS,
            })
        } else {
            Ok(())
        }
    }

    // Index-mask helpers; only valid for addressable families.

    pub(crate) fn all_mask(&self) -> u64 {
        if self.blocks.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.blocks.len()) - 1
        }
    }

    pub(crate) fn overlaps(&self, i: usize) -> u64 {
        self.overlaps[i]
    }

    pub(crate) fn within_mask(&self, a: Subset) -> u64 {
        self.mask_where(|b| b.is_subset(a))
    }

    pub(crate) fn meeting_mask(&self, a: Subset) -> u64 {
        self.mask_where(|b| b.intersects(a))
    }

    fn mask_where(&self, pred: impl Fn(Subset) -> bool) -> u64 {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| pred(b.0))
            .fold(0u64, |m, (i, _)| m | (1u64 << i))
    }

    pub(crate) fn is_disjoint_mask(&self, mask: u64) -> bool {
        Subset::from_bits(mask)
            .iter()
            .all(|i| self.overlaps[i] & mask == 0)
    }

    pub(crate) fn union_mask(&self, mask: u64) -> Subset {
        Subset::from_bits(mask)
            .iter()
            .fold(Subset::EMPTY, |acc, i| acc | self.blocks[i].0)
    }
}

/// Maximal cliques of the graph `adj` (open neighborhoods) extending `r`
/// with vertices of `p` and none of `x`.
pub(crate) fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let mut pivot = 0;
    let mut best = -1i32;
    for u in Subset::from_bits(p | x).iter() {
        let score = (p & adj[u]).count_ones() as i32;
        if score > best {
            best = score;
            pivot = u;
        }
    }
    for v in Subset::from_bits(p & !adj[pivot]).iter() {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}
