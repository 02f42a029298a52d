//! (n,4,3,4)-lottery systems: every 4-subset of the ground set must meet some
//! block in at least three points. Three (A,B)-systems on the parts of an
//! ordered partition n = a + b + c glue into one.

pub mod formulas;
pub mod search;

use crate::absystems::dispatch::{best_recipe, Availability, Recipe};
use crate::block::{Block, BlockSystem};
use crate::combin::rank;
use crate::designs::Catalog;
use crate::error::{Error, Result};
use crate::format::DesignFile;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use formulas::{bound_l, polynomial_table, residue_rule, turan_construction_size, LBound, PolyRow, ResidueRule};
pub use search::{partition_search, PartitionPlan};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LotterySystem {
    pub n: u32,
    pub system: BlockSystem,
    pub partition: Option<PartitionPlan>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LotteryVerdict {
    Valid,
    /// Lexicographically first 4-set meeting every block in at most 2 points.
    Uncovered([u32; 4]),
}

impl LotteryVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, LotteryVerdict::Valid)
    }
}

impl LotterySystem {
    pub fn new(system: BlockSystem) -> Self {
        LotterySystem { n: system.n(), system, partition: None }
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    pub fn verify(&self) -> LotteryVerdict {
        verify_lottery(&self.system)
    }

    pub fn to_file(&self) -> DesignFile {
        let mut f = DesignFile::single("lottery", &self.system);
        if let Some(p) = &self.partition {
            f = f
                .with_field("pa", p.parts[0] as u64)
                .with_field("pb", p.parts[1] as u64)
                .with_field("pc", p.parts[2] as u64);
        }
        f
    }

    pub fn from_file(f: &DesignFile) -> Result<Self> {
        Ok(LotterySystem::new(f.system()?))
    }
}

/// Exhaustive check over all C(n,4) quadruples, for any block size >= 3.
/// A quadruple is hit exactly when one of its four triples lies in a block.
/// The scan is split by smallest element across threads; the reported
/// failure is always the lexicographically first.
pub fn verify_lottery(sys: &BlockSystem) -> LotteryVerdict {
    let n = sys.n();
    let covered = sys.covered_triples();
    let hit = |k: [u32; 4]| {
        let [p, q, r, s] = k;
        covered.get(rank(&[p, q, r]))
            || covered.get(rank(&[p, q, s]))
            || covered.get(rank(&[p, r, s]))
            || covered.get(rank(&[q, r, s]))
    };
    let first = (0..n).into_par_iter().find_map_first(|p| {
        for q in p + 1..n {
            for r in q + 1..n {
                for s in r + 1..n {
                    if !hit([p, q, r, s]) {
                        return Some([p, q, r, s]);
                    }
                }
            }
        }
        None
    });
    match first {
        None => LotteryVerdict::Valid,
        Some(k) => LotteryVerdict::Uncovered(k),
    }
}

/// Places the (a,b)-, (b,c)- and (c,a)-systems, given as `(a, b, system)`
/// with A first, on the parts `[0,a)`, `[a,a+b)`, `[a+b,n)` and unions the
/// blocks. Works for any common block size.
pub fn glue(parts: [u32; 3], systems: [(u32, u32, &BlockSystem); 3]) -> Result<BlockSystem> {
    let n: u32 = parts.iter().sum();
    let start = [0, parts[0], parts[0] + parts[1]];
    let r = systems[0].2.r();
    let mut blocks: Vec<Block> = Vec::new();
    for (i, &(a, b, sys)) in systems.iter().enumerate() {
        let (x, y) = (i, (i + 1) % 3);
        if a != parts[x] || b != parts[y] || sys.n() != a + b || sys.r() != r {
            return Err(Error::Shape(format!(
                "system {i} is an ({a},{b})-system with r = {}, parts need ({},{}) and r = {r}",
                sys.r(),
                parts[x],
                parts[y]
            )));
        }
        let map = |z: u32| if z < a { start[x] + z } else { start[y] + z - a };
        for blk in sys.blocks() {
            let mut b: Block = blk.iter().map(|&z| map(z)).collect();
            b.sort_unstable();
            blocks.push(b);
        }
    }
    blocks.sort();
    blocks.dedup();
    BlockSystem::new(n, r, blocks)
}

/// Builds the cheapest constructive recipe for each pair and glues them.
pub fn assemble(parts: [u32; 3], cat: &Catalog) -> Result<LotterySystem> {
    let recipes = pair_recipes(parts, cat)?;
    assemble_with(parts, recipes, cat)
}

pub(crate) fn pair_recipes(parts: [u32; 3], cat: &Catalog) -> Result<[Recipe; 3]> {
    let get = |i: usize| {
        let (a, b) = (parts[i], parts[(i + 1) % 3]);
        best_recipe(a, b, cat, Availability::Constructive)
            .ok_or_else(|| Error::UnsupportedParameters(format!("no construction for f({a},{b})")))
    };
    Ok([get(0)?, get(1)?, get(2)?])
}

pub fn assemble_with(parts: [u32; 3], recipes: [Recipe; 3], cat: &Catalog) -> Result<LotterySystem> {
    let built = [recipes[0].build(cat)?, recipes[1].build(cat)?, recipes[2].build(cat)?];
    let system = glue(parts, [0, 1, 2].map(|i| (built[i].a, built[i].b, &built[i].system)))?;
    let predicted = recipes.iter().map(|r| r.size).sum();
    if let LotteryVerdict::Uncovered(k) = verify_lottery(&system) {
        return Err(Error::PreconditionFailed(format!("assembled system misses {k:?}")));
    }
    Ok(LotterySystem {
        n: system.n(),
        system,
        partition: Some(PartitionPlan { parts, recipes: recipes.to_vec(), predicted }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_verdicts() {
        let one = BlockSystem::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(verify_lottery(&one), LotteryVerdict::Valid);
        let five = BlockSystem::new(5, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(verify_lottery(&five), LotteryVerdict::Valid);
        let six = BlockSystem::new(6, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(verify_lottery(&six), LotteryVerdict::Uncovered([0, 1, 4, 5]));
    }

    #[test]
    fn assembled_sizes() {
        let cat = Catalog::bundled();
        for (parts, size) in [([3, 3, 3], 9), ([3, 3, 4], 15)] {
            let l = assemble(parts, cat).unwrap();
            assert_eq!(l.len(), size, "{parts:?}");
            assert!(l.verify().is_valid());
        }
    }
}
