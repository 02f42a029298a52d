//! Predicates over block systems: exact designs, coverings and packings.

use crate::block::BlockSystem;
use crate::combin::{binom, rank};
use crate::error::{Error, Result};
use itertools::Itertools;

fn shape(sys: &BlockSystem, r: u32) -> Result<()> {
    if sys.r() != r {
        return Err(Error::Shape(format!("expected blocks of size {r}, got {}", sys.r())));
    }
    Ok(())
}

/// First `t`-subset (in lexicographic order) whose multiplicity fails `ok`.
fn first_violation(sys: &BlockSystem, t: usize, ok: impl Fn(u8) -> bool) -> Option<(Vec<u32>, u8)> {
    let m = sys.subset_multiplicity(t);
    (0..sys.n())
        .combinations(t)
        .map(|s| {
            let c = m[rank(&s)];
            (s, c)
        })
        .find(|(_, c)| !ok(*c))
}

fn explain(what: &str, found: Option<(Vec<u32>, u8)>) -> Result<()> {
    match found {
        None => Ok(()),
        Some((s, c)) => Err(Error::InvalidIngredient(format!("{what}: {s:?} lies in {c} blocks"))),
    }
}

/// S(t, r, n): every t-subset in exactly one block.
pub fn verify_steiner(sys: &BlockSystem, t: usize, r: u32) -> Result<()> {
    shape(sys, r)?;
    explain(&format!("not an S({t},{r},{})", sys.n()), first_violation(sys, t, |c| c == 1))
}

pub fn verify_sts(sys: &BlockSystem) -> Result<()> {
    verify_steiner(sys, 2, 3)
}

pub fn verify_sqs(sys: &BlockSystem) -> Result<()> {
    verify_steiner(sys, 3, 4)
}

/// Every pair in at least one triple.
pub fn verify_pair_covering(sys: &BlockSystem) -> Result<()> {
    shape(sys, 3)?;
    explain("pair not covered", first_violation(sys, 2, |c| c >= 1))
}

/// Every pair in at most one triple.
pub fn verify_packing(sys: &BlockSystem) -> Result<()> {
    shape(sys, 3)?;
    explain("pair covered twice", first_violation(sys, 2, |c| c <= 1))
}

/// Uncovered pairs of a triple system, in lexicographic order.
pub fn leave(sys: &BlockSystem) -> Vec<[u32; 2]> {
    let m = sys.subset_multiplicity(2);
    (0..sys.n()).tuple_combinations().filter(|&(x, y)| m[rank(&[x, y])] == 0).map(|(x, y)| [x, y]).collect()
}

/// Blocks shared by two systems on the same ground set.
pub fn common_block(x: &BlockSystem, y: &BlockSystem) -> Option<Vec<u32>> {
    x.blocks().iter().find(|b| y.contains(b)).cloned()
}

/// Check that members are pairwise block-disjoint.
pub fn verify_disjoint(members: &[BlockSystem]) -> Result<()> {
    for (i, j) in (0..members.len()).tuple_combinations() {
        if let Some(b) = common_block(&members[i], &members[j]) {
            return Err(Error::InvalidIngredient(format!("members {i} and {j} share block {b:?}")));
        }
    }
    Ok(())
}

/// Triples of `0..a` contained in no member (members may live on larger ground sets).
pub fn triples_missed(a: u32, members: &[BlockSystem]) -> Vec<[u32; 3]> {
    let mut hit = vec![false; binom(a as u64, 3) as usize];
    for m in members {
        for b in m.blocks() {
            if b.iter().all(|&x| x < a) && b.len() == 3 {
                hit[rank(b)] = true;
            }
        }
    }
    (0..a).tuple_combinations().filter(|&(x, y, z)| !hit[rank(&[x, y, z])]).map(|(x, y, z)| [x, y, z]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> BlockSystem {
        BlockSystem::new(
            7,
            3,
            vec![
                vec![0, 1, 3],
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![3, 4, 6],
                vec![0, 4, 5],
                vec![1, 5, 6],
                vec![0, 2, 6],
            ],
        )
        .unwrap()
    }

    #[test]
    fn fano_is_an_sts() {
        verify_sts(&fano()).unwrap();
        verify_pair_covering(&fano()).unwrap();
        verify_packing(&fano()).unwrap();
        assert!(leave(&fano()).is_empty());
    }

    #[test]
    fn broken_systems_are_rejected() {
        let mut blocks = fano().into_blocks();
        blocks.pop();
        let s = BlockSystem::new(7, 3, blocks).unwrap();
        assert!(verify_sts(&s).is_err());
        assert!(verify_pair_covering(&s).is_err());
        verify_packing(&s).unwrap();
        assert_eq!(leave(&s).len(), 3);
        assert!(verify_sqs(&s).is_err());
    }

    #[test]
    fn disjointness() {
        let f = fano();
        assert!(verify_disjoint(&[f.clone(), f.clone()]).is_err());
        assert_eq!(triples_missed(7, &[f]).len(), 28);
    }
}
