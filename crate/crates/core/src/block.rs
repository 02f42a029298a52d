//! Blocks and block systems, the container shared by every design in the crate.

use crate::combin::{binom, rank, Bits};
use crate::error::{Error, Result};
use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// A block: strictly increasing element indices.
pub type Block = Vec<u32>;

/// `n` points, blocks of size `r`, kept in canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockSystem {
    n: u32,
    r: u32,
    blocks: Vec<Block>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    multiset: bool,
}

impl BlockSystem {
    /// Sorts every block and the block list; rejects bad sizes, out-of-range
    /// elements, repeated elements and duplicate blocks.
    pub fn new(n: u32, r: u32, blocks: Vec<Block>) -> Result<Self> {
        Self::build(n, r, blocks, false)
    }

    /// Like [`BlockSystem::new`] but keeps repeated blocks.
    pub fn new_multiset(n: u32, r: u32, blocks: Vec<Block>) -> Result<Self> {
        Self::build(n, r, blocks, true)
    }

    fn build(n: u32, r: u32, mut blocks: Vec<Block>, multiset: bool) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
            if b.len() != r as usize {
                return Err(Error::Shape(format!("block {b:?} has size {} (r={r})", b.len())));
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Shape(format!("block {b:?} repeats an element")));
            }
            if let Some(&x) = b.last() {
                if x >= n {
                    return Err(Error::Shape(format!("block {b:?} leaves the ground set 0..{n}")));
                }
            }
        }
        blocks.sort_unstable();
        if !multiset {
            if let Some(w) = blocks.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Shape(format!("duplicate block {:?}", w[0])));
            }
        }
        Ok(BlockSystem { n, r, blocks, multiset })
    }

    pub fn empty(n: u32, r: u32) -> Self {
        BlockSystem { n, r, blocks: Vec::new(), multiset: false }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_multiset(&self) -> bool {
        self.multiset
    }

    pub fn contains(&self, block: &[u32]) -> bool {
        self.blocks.binary_search_by(|b| b.as_slice().cmp(block)).is_ok()
    }

    /// Image under `perm` (element `x` goes to `perm[x]`) on a ground set of size `n`.
    pub fn map(&self, n: u32, perm: &[u32]) -> Result<Self> {
        let blocks = self.blocks.iter().map(|b| b.iter().map(|&x| perm[x as usize]).collect()).collect();
        Self::build(n, self.r, blocks, self.multiset)
    }

    /// How many times each `t`-subset of the ground set lies inside a block,
    /// indexed by colex rank and saturating at 255.
    pub fn subset_multiplicity(&self, t: usize) -> Vec<u8> {
        let mut m = vec![0u8; binom(self.n as u64, t as u64) as usize];
        for b in &self.blocks {
            for s in b.iter().copied().combinations(t) {
                let c = &mut m[rank(&s)];
                *c = c.saturating_add(1);
            }
        }
        m
    }

    /// Bitmap of triples lying inside at least one block.
    pub fn covered_triples(&self) -> Bits {
        let mut bits = Bits::new(binom(self.n as u64, 3) as usize);
        for b in &self.blocks {
            for (i, &x) in b.iter().enumerate() {
                for (j, &y) in b.iter().enumerate().skip(i + 1) {
                    for &z in &b[j + 1..] {
                        bits.set(rank(&[x, y, z]));
                    }
                }
            }
        }
        bits
    }
}
