//! Optimal coverings, maximum packings and packings with a prescribed leave.

use super::numbers::{covering_number, packing_number};
use super::sts::construct_sts;
use super::triangles::{decompose_with_restarts, Multigraph};
use super::verify::{leave, verify_packing, verify_pair_covering};
use crate::block::BlockSystem;
use crate::error::{domain, unsupported, Error, Result};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeaveKind {
    /// a/2 disjoint uncovered pairs (a = 0, 2 mod 6).
    PerfectMatching,
    /// (a-2)/2 disjoint uncovered pairs and one pair covered twice (a = 4 mod 6).
    NearOnePairShort,
    /// A star K_{1,3} plus a matching on the remaining points (a = 4 mod 6).
    K13PlusMatching,
    /// Any maximum packing.
    Any,
}

impl FromStr for LeaveKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "perfect_matching" => Ok(LeaveKind::PerfectMatching),
            "near_one_pair_short" => Ok(LeaveKind::NearOnePairShort),
            "k13_plus_matching" => Ok(LeaveKind::K13PlusMatching),
            "any" => Ok(LeaveKind::Any),
            _ => Err(Error::Domain(format!("unknown leave kind `{s}`"))),
        }
    }
}

fn from_triangles(a: u32, tris: Vec<[u32; 3]>) -> Result<BlockSystem> {
    BlockSystem::new(a, 3, tris.into_iter().map(|t| t.to_vec()).collect())
}

fn search(g: &Multigraph, a: u32, what: &str) -> Result<BlockSystem> {
    let tris =
        decompose_with_restarts(g, a as u64).ok_or_else(|| Error::SearchExhausted(format!("{what} on {a} points")))?;
    from_triangles(a, tris)
}

/// A (a,3,2)-covering with exactly C(a) triples.
pub fn construct_optimal_covering(a: u32) -> Result<BlockSystem> {
    if a < 3 {
        return domain(format!("optimal covering needs a >= 3, got {a}"));
    }
    let sys = match a % 6 {
        1 | 3 => construct_sts(a)?,
        2 | 4 => {
            let base = construct_sts(a - 1)?;
            let p = a - 1;
            let mut blocks = base.into_blocks();
            let mut x = 0;
            while x < p {
                let y = if x + 1 < p { x + 1 } else { 0 };
                blocks.push(vec![x, y, p]);
                x += 2;
            }
            BlockSystem::new(a, 3, blocks)?
        }
        0 => {
            let mut g = Multigraph::complete(a as usize);
            for x in (0..a as usize).step_by(2) {
                g.set(x, x + 1, 2);
            }
            search(&g, a, "covering K_a plus a perfect matching")?
        }
        _ => {
            let mut g = Multigraph::complete(a as usize);
            g.set(0, 1, 3);
            search(&g, a, "covering K_a with one tripled pair")?
        }
    };
    verify_pair_covering(&sys)?;
    if sys.len() as u64 != covering_number(a)? {
        return Err(Error::PreconditionFailed(format!("covering of size {} is not optimal", sys.len())));
    }
    Ok(sys)
}

fn canonical_leave(a: u32, kind: LeaveKind) -> Vec<[u32; 2]> {
    match kind {
        LeaveKind::PerfectMatching => (0..a / 2).map(|i| [2 * i, 2 * i + 1]).collect(),
        LeaveKind::K13PlusMatching | LeaveKind::NearOnePairShort => {
            let mut l = vec![[0, 1], [0, 2], [0, 3]];
            l.extend((2..a / 2).map(|i| [2 * i, 2 * i + 1]));
            l
        }
        LeaveKind::Any => Vec::new(),
    }
}

/// Packing whose uncovered-pair graph has the requested shape.
pub fn construct_packing_with_leave(a: u32, kind: LeaveKind) -> Result<BlockSystem> {
    if a < 3 {
        return domain(format!("packing needs a >= 3, got {a}"));
    }
    let need_even = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            unsupported(format!("{what} leave is impossible for a={a}"))
        }
    };
    match kind {
        LeaveKind::Any => return construct_max_packing(a),
        LeaveKind::PerfectMatching => need_even(a % 6 == 0 || a % 6 == 2, "perfect matching")?,
        LeaveKind::K13PlusMatching => need_even(a % 6 == 4, "K13 plus matching")?,
        LeaveKind::NearOnePairShort => need_even(a % 6 == 4, "near one pair short")?,
    }
    let sys = match kind {
        LeaveKind::PerfectMatching => {
            // STS(a+1) with its last point deleted
            let s = construct_sts(a + 1)?;
            let blocks = s.blocks().iter().filter(|b| b[2] != a).cloned().collect();
            let sys = BlockSystem::new(a, 3, blocks)?;
            let perm = align_perm(&leave(&sys), &canonical_leave(a, kind), a)?;
            sys.map(a, &perm)?
        }
        LeaveKind::K13PlusMatching => {
            let mut g = Multigraph::complete(a as usize);
            for [x, y] in canonical_leave(a, kind) {
                g.set(x as usize, y as usize, 0);
            }
            search(&g, a, "packing with a K13 plus matching leave")?
        }
        _ => {
            let base = construct_packing_with_leave(a, LeaveKind::K13PlusMatching)?;
            let mut blocks = base.into_blocks();
            blocks.push(vec![0, 1, 2]);
            BlockSystem::new(a, 3, blocks)?
        }
    };
    check_leave_kind(&sys, kind)?;
    Ok(sys)
}

/// Leave shape and size checks for a packing of the given kind.
pub fn check_leave_kind(sys: &BlockSystem, kind: LeaveKind) -> Result<()> {
    let a = sys.n();
    let l = leave(sys);
    let mut deg = vec![0u32; a as usize];
    for [x, y] in &l {
        deg[*x as usize] += 1;
        deg[*y as usize] += 1;
    }
    let bad = |msg: String| Err(Error::PreconditionFailed(msg));
    match kind {
        LeaveKind::PerfectMatching => {
            verify_packing(sys)?;
            if l.len() as u32 != a / 2 || deg.iter().any(|&d| d != 1) {
                return bad(format!("leave {l:?} is not a perfect matching"));
            }
        }
        LeaveKind::K13PlusMatching => {
            verify_packing(sys)?;
            let centers = deg.iter().filter(|&&d| d == 3).count();
            if centers != 1 || deg.iter().any(|&d| d != 1 && d != 3) || l.len() as u32 != (a + 2) / 2 {
                return bad(format!("leave {l:?} is not K13 plus a matching"));
            }
        }
        LeaveKind::NearOnePairShort => {
            let zero = deg.iter().filter(|&&d| d == 0).count();
            if l.len() as u32 != (a - 2) / 2 || zero != 2 || deg.iter().any(|&d| d > 1) {
                return bad(format!("leave {l:?} is not {} disjoint pairs", (a - 2) / 2));
            }
            if sys.len() as u32 != (a * a - 2 * a + 4) / 6 {
                return bad(format!("{} triples, expected (a^2-2a+4)/6", sys.len()));
            }
        }
        LeaveKind::Any => {
            verify_packing(sys)?;
            if sys.len() as u64 != packing_number(a)? {
                return bad(format!("packing of size {} is not maximum", sys.len()));
            }
        }
    }
    Ok(())
}

/// A maximum packing. Its weight is C_*(a), so it doubles as a minimum-weight system.
pub fn construct_max_packing(a: u32) -> Result<BlockSystem> {
    if a < 3 {
        return domain(format!("packing needs a >= 3, got {a}"));
    }
    let sys = match a % 6 {
        1 | 3 => construct_sts(a)?,
        0 | 2 => construct_packing_with_leave(a, LeaveKind::PerfectMatching)?,
        4 => construct_packing_with_leave(a, LeaveKind::K13PlusMatching)?,
        _ => {
            let mut g = Multigraph::complete(a as usize);
            for (x, y) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
                g.set(x, y, 0);
            }
            search(&g, a, "packing with a 4-cycle leave")?
        }
    };
    verify_packing(&sys)?;
    if sys.len() as u64 != packing_number(a)? {
        return Err(Error::PreconditionFailed(format!("packing of size {} is not maximum", sys.len())));
    }
    Ok(sys)
}

/// Triple system of least weight on `a` points (also defined for a = 2: no triples).
pub fn min_weight_system(a: u32) -> Result<BlockSystem> {
    match a {
        0 | 1 => domain(format!("weight needs a >= 2, got {a}")),
        2 => Ok(BlockSystem::empty(2, 3)),
        _ => construct_max_packing(a),
    }
}

/// Relabeling of `0..n` carrying the star forest `from` onto the isomorphic star
/// forest `to`; points outside both forests are matched in increasing order.
pub fn align_perm(from: &[[u32; 2]], to: &[[u32; 2]], n: u32) -> Result<Vec<u32>> {
    let fa = star_components(from, n)?;
    let ta = star_components(to, n)?;
    let mismatch = || Error::PreconditionFailed(format!("leave {from:?} cannot be aligned to {to:?}"));
    if fa.len() != ta.len() {
        return Err(mismatch());
    }
    let mut perm = vec![u32::MAX; n as usize];
    let mut used_src = vec![false; fa.len()];
    for (c, leaves) in &ta {
        let k = (0..fa.len()).find(|&k| !used_src[k] && fa[k].1.len() == leaves.len()).ok_or_else(mismatch)?;
        used_src[k] = true;
        perm[fa[k].0 as usize] = *c;
        for (s, t) in fa[k].1.iter().zip(leaves) {
            perm[*s as usize] = *t;
        }
    }
    let mut taken = vec![false; n as usize];
    for &p in perm.iter().filter(|&&p| p != u32::MAX) {
        taken[p as usize] = true;
    }
    let mut free = (0..n).filter(|&x| !taken[x as usize]);
    for p in perm.iter_mut().filter(|p| **p == u32::MAX) {
        *p = free.next().ok_or_else(mismatch)?;
    }
    Ok(perm)
}

/// (center, leaves) per star; a single edge is a star with its smaller end as center.
fn star_components(edges: &[[u32; 2]], n: u32) -> Result<Vec<(u32, Vec<u32>)>> {
    let mut deg = vec![0u32; n as usize];
    for [x, y] in edges {
        deg[*x as usize] += 1;
        deg[*y as usize] += 1;
    }
    let mut stars: Vec<(u32, Vec<u32>)> = Vec::new();
    for [x, y] in edges {
        let (c, l) = if deg[*y as usize] > 1 { (*y, *x) } else { (*x, *y) };
        if deg[l as usize] > 1 {
            return Err(Error::PreconditionFailed(format!("leave {edges:?} is not a star forest")));
        }
        match stars.iter_mut().find(|s| s.0 == c) {
            Some(s) => s.1.push(l),
            None => stars.push((c, vec![l])),
        }
    }
    Ok(stars)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coverings_for_all_residues() {
        for a in 3..=20 {
            let c = construct_optimal_covering(a).unwrap();
            assert_eq!(c.len() as u64, covering_number(a).unwrap(), "a={a}");
        }
        assert_eq!(construct_optimal_covering(4).unwrap().len(), 3);
        assert!(construct_optimal_covering(2).is_err());
    }

    #[test]
    fn packings_for_all_residues() {
        for a in 3..=20 {
            construct_max_packing(a).unwrap();
        }
    }

    #[test]
    fn leave_kinds() {
        let k = construct_packing_with_leave(4, LeaveKind::K13PlusMatching).unwrap();
        assert_eq!(k.len(), 1);
        let m = construct_packing_with_leave(12, LeaveKind::PerfectMatching).unwrap();
        assert_eq!(m.len(), 20);
        assert_eq!(leave(&m), canonical_leave(12, LeaveKind::PerfectMatching));
        let s = construct_packing_with_leave(16, LeaveKind::NearOnePairShort).unwrap();
        assert_eq!(s.len(), 38);
        assert_eq!(leave(&s).len(), 7);
        assert!(construct_packing_with_leave(12, LeaveKind::K13PlusMatching).is_err());
        assert!(construct_packing_with_leave(7, LeaveKind::PerfectMatching).is_err());
    }

    #[test]
    fn alignment_moves_the_leave() {
        let m = construct_packing_with_leave(8, LeaveKind::PerfectMatching).unwrap();
        let target = vec![[0, 4], [1, 5], [2, 6], [3, 7]];
        let perm = align_perm(&leave(&m), &target, 8).unwrap();
        assert_eq!(leave(&m.map(8, &perm).unwrap()), target);
    }
}
