//! (A,B)-systems: the coverage check, the constructions and the bound calculators.
//!
//! Points `0..a` form `A` and `a..a+b` form `B`. A triple needs covering when
//! at least two of its points are in `A`; with `A` a prefix that is exactly
//! when its middle element is below `a`.

pub mod bounds;
pub mod constructions;
pub mod dispatch;

use crate::block::BlockSystem;
use crate::combin::{rank, Bits};
use crate::error::{Error, Result};
use crate::format::DesignFile;
use serde::{Deserialize, Serialize};

pub use bounds::{lower_bound_f, theorem_value, LowerBound};
pub use constructions::*;
pub use dispatch::{exact_f, ABBoundReport, Method, Recipe, Step};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ABInstance {
    pub a: u32,
    pub b: u32,
    pub system: BlockSystem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Valid,
    /// Lexicographically first triple that no block contains.
    Uncovered(Vec<u32>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl ABInstance {
    pub fn new(a: u32, b: u32, system: BlockSystem) -> Result<Self> {
        if system.n() != a + b {
            return Err(Error::Shape(format!("system on {} points but a + b = {}", system.n(), a + b)));
        }
        Ok(ABInstance { a, b, system })
    }

    pub fn from_blocks(a: u32, b: u32, blocks: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(a, b, BlockSystem::new(a + b, 4, blocks)?)
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    pub fn verify(&self) -> Result<Verdict> {
        verify_ab(self)
    }

    /// Verifies and returns `self`, or fails naming the uncovered triple.
    pub fn verified(self) -> Result<Self> {
        match verify_ab(&self)? {
            Verdict::Valid => Ok(self),
            Verdict::Uncovered(t) => Err(Error::PreconditionFailed(format!(
                "({},{})-system of size {} misses triple {t:?}",
                self.a,
                self.b,
                self.len()
            ))),
        }
    }

    pub fn to_file(&self) -> DesignFile {
        DesignFile::single("ab_system", &self.system).with_field("a", self.a as u64).with_field("b", self.b as u64)
    }

    pub fn from_file(f: &DesignFile) -> Result<Self> {
        let a = f.require("a")? as u32;
        let b = f.require("b")? as u32;
        Self::new(a, b, f.system()?)
    }
}

/// First triple of `0..n` with at least two points below `a` that lies in no
/// block. Works for any block size.
pub fn first_uncovered(a: u32, sys: &BlockSystem) -> Option<Vec<u32>> {
    let covered: Bits = sys.covered_triples();
    let n = sys.n();
    for x in 0..a.min(n) {
        for y in x + 1..a.min(n) {
            for z in y + 1..n {
                if !covered.get(rank(&[x, y, z])) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

/// Checks all C(a,3) + C(a,2)·b triples that must be covered.
pub fn verify_ab(inst: &ABInstance) -> Result<Verdict> {
    if inst.system.r() != 4 {
        return Err(Error::Shape(format!("(A,B)-systems use blocks of size 4, got {}", inst.system.r())));
    }
    if inst.system.n() != inst.a + inst.b {
        return Err(Error::Shape("ground set is not a + b".into()));
    }
    Ok(match first_uncovered(inst.a, &inst.system) {
        None => Verdict::Valid,
        Some(t) => Verdict::Uncovered(t),
    })
}
