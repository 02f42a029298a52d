//! (A,B)-systems with blocks of size r >= 4 and the (n,r,3,4)-lottery bound
//! they give.

use crate::absystems::dispatch::construct_ab;
use crate::absystems::{first_uncovered, Verdict};
use crate::block::{Block, BlockSystem};
use crate::combin::{binom, ceil_div};
use crate::designs::ingredients::{IngredientKind, IngredientRecord};
use crate::designs::Catalog;
use crate::error::{domain, Error, Result};
use crate::format::DesignFile;
use crate::lottery::{glue, verify_lottery, LotteryVerdict};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RSystemInstance {
    pub a: u32,
    pub b: u32,
    pub r: u32,
    pub system: BlockSystem,
}

impl RSystemInstance {
    pub fn new(a: u32, b: u32, system: BlockSystem) -> Result<Self> {
        if system.n() != a + b {
            return Err(Error::Shape(format!("system on {} points but a + b = {}", system.n(), a + b)));
        }
        Ok(RSystemInstance { a, b, r: system.r(), system })
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    pub fn verify(&self) -> Result<Verdict> {
        verify_r(self)
    }

    pub fn to_file(&self) -> DesignFile {
        DesignFile::single("r_system", &self.system).with_field("a", self.a as u64).with_field("b", self.b as u64)
    }

    pub fn from_file(f: &DesignFile) -> Result<Self> {
        Self::new(f.require("a")? as u32, f.require("b")? as u32, f.system()?)
    }
}

/// Same contract as the r = 4 verifier: every triple with two points in A.
pub fn verify_r(inst: &RSystemInstance) -> Result<Verdict> {
    if inst.system.r() < 4 || inst.system.r() != inst.r {
        return Err(Error::Shape(format!("block size {} (declared r = {})", inst.system.r(), inst.r)));
    }
    if inst.system.n() != inst.a + inst.b {
        return Err(Error::Shape("ground set is not a + b".into()));
    }
    Ok(match first_uncovered(inst.a, &inst.system) {
        None => Verdict::Valid,
        Some(t) => Verdict::Uncovered(t),
    })
}

fn valid(inst: RSystemInstance, expected: u64, what: &str) -> Result<RSystemInstance> {
    if let Verdict::Uncovered(t) = verify_r(&inst)? {
        return Err(Error::PreconditionFailed(format!("{what} misses triple {t:?}")));
    }
    if inst.len() as u64 != expected {
        return Err(Error::PreconditionFailed(format!("{what} built {} blocks, expected {expected}", inst.len())));
    }
    Ok(inst)
}

/// Number of A-points in a block that covers the most (A-pair, B-point) triples.
/// Ties at r = 3m+2 go to the smaller choice.
pub fn t_opt(r: u32) -> Result<u32> {
    if r < 4 {
        return domain(format!("t(r) needs r >= 4, got {r}"));
    }
    let m = r / 3;
    Ok(match r % 3 {
        0 => 2 * m,
        _ => 2 * m + 1,
    })
}

/// ⌈b·C(a,2) / ((r−t)·C(t,2))⌉ with t = t(r).
pub fn lower_bound_fr(a: u32, b: u32, r: u32) -> Result<u64> {
    if a < 2 || b < 1 {
        return domain(format!("f_r(a,b) needs a >= 2, b >= 1 (got {a}, {b})"));
    }
    let t = t_opt(r)? as u64;
    let num = b as u64 * binom(a as u64, 2);
    let den = (r as u64 - t) * binom(t, 2);
    Ok(ceil_div(num as i64, den as i64) as u64)
}

/// f_5(a,a) from an S(3,5,a+1): for each i < a the blocks through i lose i,
/// have the extra point a renamed to i, and gain the B point a+i.
pub fn construct_f5(s35: &IngredientRecord) -> Result<RSystemInstance> {
    if s35.kind != IngredientKind::SteinerS35 || !s35.verified {
        return Err(Error::InvalidIngredient(format!("expected a verified S(3,5,n), got {}", s35.kind.name())));
    }
    let s = &s35.payload[0];
    let a = s.n() - 1;
    let mut blocks: Vec<Block> = Vec::new();
    for i in 0..a {
        for blk in s.blocks().iter().filter(|b| b.contains(&i)) {
            let mut nb: Block = blk.iter().copied().filter(|&z| z != i).map(|z| if z == a { i } else { z }).collect();
            nb.push(a + i);
            nb.sort_unstable();
            blocks.push(nb);
        }
    }
    let a64 = a as u64;
    valid(RSystemInstance::new(a, a, BlockSystem::new(2 * a, 5, blocks)?)?, a64 * a64 * (a64 - 1) / 12, "f5")
}

/// f_6(a,b) for even b >= a-2: class j of a 2-resolution (taken cyclically)
/// padded with the B pair {a+2j, a+2j+1}.
pub fn construct_f6(resolution: &IngredientRecord, b: u32) -> Result<RSystemInstance> {
    if resolution.kind != IngredientKind::ResolvableSqs || !resolution.verified {
        return Err(Error::InvalidIngredient(format!(
            "expected a verified 2-resolvable SQS, got {}",
            resolution.kind.name()
        )));
    }
    let a = resolution.n;
    if b % 2 == 1 || b + 2 < a {
        return Err(Error::PreconditionFailed(format!("f6 needs even b >= a - 2 = {}, got {b}", a - 2)));
    }
    let classes = &resolution.payload;
    let mut blocks: Vec<Block> = Vec::new();
    for j in 0..b / 2 {
        for blk in classes[j as usize % classes.len()].blocks() {
            let mut nb = blk.clone();
            nb.extend([a + 2 * j, a + 2 * j + 1]);
            blocks.push(nb);
        }
    }
    let (a64, b64) = (a as u64, b as u64);
    valid(RSystemInstance::new(a, b, BlockSystem::new(a + b, 6, blocks)?)?, b64 * a64 * (a64 - 1) / 24, "f6")
}

/// Builds an f_r(a,b) system from the catalog: r = 4 by the (A,B) dispatcher,
/// r = 5 with a = b from S(3,5,a+1), r = 6 from a 2-resolvable SQS(a).
pub fn construct_fr(a: u32, b: u32, r: u32, cat: &Catalog) -> Result<RSystemInstance> {
    match r {
        4 => {
            let inst = construct_ab(a, b, None, cat)?;
            Ok(RSystemInstance { a, b, r, system: inst.system })
        }
        5 if a == b => construct_f5(&*cat.steiner_s35(a + 1)?),
        6 => construct_f6(&*cat.resolvable_sqs(a)?, b),
        _ => Err(Error::MissingIngredient(format!("no f_{r}({a},{b}) construction available"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrBound {
    pub n: u32,
    pub r: u32,
    pub value: u64,
    pub system: BlockSystem,
}

/// L(a+b+c, r, 3, 4) <= f_r(a,b) + f_r(b,c) + f_r(c,a); the glued system is
/// built and checked against every 4-subset.
pub fn bound_l_r(a: u32, b: u32, c: u32, r: u32, cat: &Catalog) -> Result<LrBound> {
    let parts = [a, b, c];
    let mut built = Vec::with_capacity(3);
    for i in 0..3 {
        built.push(construct_fr(parts[i], parts[(i + 1) % 3], r, cat)?);
    }
    let value = built.iter().map(|s| s.len() as u64).sum();
    let system = glue(parts, [0, 1, 2].map(|i| (built[i].a, built[i].b, &built[i].system)))?;
    if let LotteryVerdict::Uncovered(k) = verify_lottery(&system) {
        return Err(Error::PreconditionFailed(format!("glued r = {r} system misses {k:?}")));
    }
    Ok(LrBound { n: a + b + c, r, value, system })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_values() {
        assert_eq!(t_opt(4).unwrap(), 3);
        assert_eq!(t_opt(5).unwrap(), 3);
        assert_eq!(t_opt(6).unwrap(), 4);
        assert!(t_opt(3).is_err());
        // the r = 3m+2 tie: both choices give the same denominator
        for r in (5..40).step_by(3) {
            let t = t_opt(r).unwrap() as u64;
            let r = r as u64;
            assert_eq!((r - t) * binom(t, 2), (r - t - 1) * binom(t + 1, 2));
        }
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound_fr(4, 4, 5).unwrap(), 4);
        assert_eq!(lower_bound_fr(4, 4, 6).unwrap(), 2);
        assert_eq!(lower_bound_fr(2, 1, 4).unwrap(), 1);
    }

    #[test]
    fn small_constructions() {
        let cat = Catalog::bundled();
        let f5 = construct_fr(4, 4, 5, cat).unwrap();
        assert_eq!(f5.len(), 4);
        assert!(construct_fr(16, 16, 5, cat).is_err());
        let l = bound_l_r(4, 4, 4, 5, cat).unwrap();
        assert_eq!(l.value, 12);
    }
}
