//! Upper-bound constructions for f(a,b). Every public constructor returns a
//! verified system whose size equals its closed form.

use super::ABInstance;
use crate::block::{Block, BlockSystem};
use crate::combin::{binom, rank};
use crate::designs::ingredients::{Catalog, IngredientKind, IngredientRecord};
use crate::designs::triples::align_perm;
use crate::designs::verify::leave;
use crate::designs::{
    c_star, construct_max_packing, construct_optimal_covering, construct_packing_with_leave, covering_number,
    lambda_value, min_weight_system, mu_value, LeaveKind,
};
use crate::error::{domain, unsupported, Error, Result};
use itertools::Itertools;
use std::collections::HashSet;

fn with(t: &[u32], extra: &[u32]) -> Block {
    let mut b: Block = t.iter().chain(extra).copied().collect();
    b.sort_unstable();
    b
}

/// Wraps blocks as a verified instance, asserting the expected size.
fn finish(a: u32, b: u32, blocks: Vec<Block>, expected: u64, what: &str) -> Result<ABInstance> {
    let inst = ABInstance::from_blocks(a, b, blocks)?.verified()?;
    if inst.len() as u64 != expected {
        return Err(Error::PreconditionFailed(format!(
            "{what}: built {} blocks, closed form says {expected}",
            inst.len()
        )));
    }
    Ok(inst)
}

/// Even-parity 0/1 vectors of length 4.
fn even_parities() -> impl Iterator<Item = [u32; 4]> {
    (0u32..16).filter(|m| m.count_ones() % 2 == 0).map(|m| [m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1])
}

/// b·C(a): the i-th point of B joins every triple of the i-th covering in a
/// family whose union holds all triples (members reused cyclically past the
/// family size).
pub fn construct_mu(a: u32, b: u32, cat: &Catalog) -> Result<ABInstance> {
    let mu = mu_value(a)?;
    if b < mu {
        return Err(Error::PreconditionFailed(format!("b={b} is below mu({a})={mu}")));
    }
    let fam = cat.covering_family(a)?;
    if fam.len() as u32 > b {
        return Err(Error::MissingIngredient(format!(
            "covering family for a={a} has {} members, more than b={b}",
            fam.len()
        )));
    }
    let blocks =
        (0..b).flat_map(|i| fam[i as usize % fam.len()].blocks().iter().map(move |t| with(t, &[a + i]))).collect();
    finish(a, b, blocks, b as u64 * covering_number(a)?, "mu")
}

/// At most C(a,3): b disjoint optimal coverings lifted by B, then quadruples
/// inside A for the triples no covering contains, chosen greedily.
pub fn construct_lambda(a: u32, b: u32, cat: &Catalog) -> Result<ABInstance> {
    let lam = lambda_value(a)?;
    if b == 0 || b > lam {
        return Err(Error::PreconditionFailed(format!("b={b} outside 1..=lambda({a})={lam}")));
    }
    let fam = cat.disjoint_coverings(a, b as usize)?;
    let mut blocks: Vec<Block> = Vec::new();
    let mut hit = vec![false; binom(a as u64, 3) as usize];
    for (i, cov) in fam.iter().take(b as usize).enumerate() {
        for t in cov.blocks() {
            hit[rank(t)] = true;
            blocks.push(with(t, &[a + i as u32]));
        }
    }
    let left: Vec<[u32; 3]> =
        (0..a).tuple_combinations().map(|(x, y, z)| [x, y, z]).filter(|t| !hit[rank(t)]).collect();
    for t in &left {
        if hit[rank(t)] {
            continue;
        }
        let gain = |w: u32| {
            let q = with(t, &[w]);
            q.iter().copied().combinations(3).filter(|s| !hit[rank(s)]).count()
        };
        let w = (0..a).filter(|w| !t.contains(w)).max_by_key(|&w| (gain(w), std::cmp::Reverse(w)));
        let w = w.ok_or_else(|| Error::Domain("lambda needs a >= 4".into()))?;
        let q = with(t, &[w]);
        for s in q.iter().copied().combinations(3) {
            hit[rank(&s)] = true;
        }
        blocks.push(q);
    }
    let inst = ABInstance::from_blocks(a, b, blocks)?.verified()?;
    if inst.len() as u64 > binom(a as u64, 3) {
        return Err(Error::PreconditionFailed(format!("lambda built {} > C(a,3) blocks", inst.len())));
    }
    Ok(inst)
}

/// One more point of B, joined to an optimal covering: adds C(a) blocks.
pub fn extend_b_plus_1(inst: &ABInstance) -> Result<ABInstance> {
    let (a, b) = (inst.a, inst.b);
    let y = a + b;
    let mut blocks = inst.system.blocks().to_vec();
    if a == 2 {
        blocks.push(vec![0, 1, 2, y]);
    } else {
        for t in construct_optimal_covering(a)?.blocks() {
            blocks.push(with(t, &[y]));
        }
    }
    finish(a, b + 1, blocks, inst.len() as u64 + covering_number(a)?, "b+1 extension")
}

/// Two more points of B: a minimum-weight triple system lifted by each, and
/// every pair it misses joined to both. Adds 2·C_*(a) blocks.
pub fn extend_b_plus_2(inst: &ABInstance) -> Result<ABInstance> {
    let (a, b) = (inst.a, inst.b);
    let (y1, y2) = (a + b, a + b + 1);
    let mut blocks = inst.system.blocks().to_vec();
    let t = min_weight_system(a)?;
    for tr in t.blocks() {
        blocks.push(with(tr, &[y1]));
        blocks.push(with(tr, &[y2]));
    }
    for [x, y] in leave(&t) {
        blocks.push(vec![x, y, y1, y2]);
    }
    let add = c_star(a)?.halves() as u64;
    finish(a, b + 2, blocks, inst.len() as u64 + add, "b+2 extension")
}

/// f(a,a) <= (2a³-a²)/12 for a = 2, 6 mod 12, from an SQS on n+1 points (n = a/2).
pub fn construct_doubling(a: u32, cat: &Catalog) -> Result<ABInstance> {
    if a % 12 != 2 && a % 12 != 6 {
        return unsupported(format!("doubling needs a = 2, 6 mod 12, got {a}"));
    }
    let n = a / 2;
    let q = cat.sqs(n + 1)?;
    let lift = |z: u32, i: u32| z + i * n;
    let yb = |z: u32, i: u32| 2 * n + z + i * n;
    let mut blocks: Vec<Block> = Vec::new();
    for blk in q.blocks() {
        if blk[3] != n {
            let z = [blk[0], blk[1], blk[2], blk[3]];
            for i in even_parities() {
                for out in 0..4 {
                    let mut b: Block = (0..4).filter(|&k| k != out).map(|k| lift(z[k], i[k])).collect();
                    b.push(yb(z[out], i[out]));
                    b.sort_unstable();
                    blocks.push(b);
                }
            }
        } else {
            // For a B point over coordinate u the six A points over the block
            // split into {u, u'} and two parts whose aligned pairs are
            // {w, w'} and {x, x'}; each B point takes a triangle decomposition
            // of the resulting K_{2,2,2}, leaving the two in-part pairs to
            // blocks with two B points.
            for (k, &u) in blk[..3].iter().enumerate() {
                let others: Vec<u32> = blk[..3].iter().copied().filter(|&z| z != u).collect();
                let (w, x) = (others[0], others[1]);
                let (p1, p2) = if k == 0 { ([w, x + n], [w + n, x]) } else { ([w, x], [w + n, x + n]) };
                for side in 0..2 {
                    let (v, vbar) = (u + side * n, u + (1 - side) * n);
                    let y = yb(u, side);
                    for t in [[v, p1[0], p2[0]], [v, p1[1], p2[1]], [vbar, p1[0], p2[1]], [vbar, p1[1], p2[0]]] {
                        blocks.push(with(&t, &[y]));
                    }
                }
                blocks.push(with(&p1, &[yb(u, 0), yb(u, 1)]));
                blocks.push(with(&p2, &[yb(u, 0), yb(u, 1)]));
            }
        }
    }
    for i in 0..n {
        blocks.push(vec![i, i + n, 2 * n + i, 3 * n + i]);
    }
    let a64 = a as u64;
    finish(a, a, blocks, (2 * a64.pow(3) - a64 * a64) / 12, "doubling")
}

/// Completes a system covering every triple inside A: for each A-pair, the
/// points y of B with {x', x'', y} uncovered are joined two at a time, an odd
/// one out taking the smallest filler that gives a new block.
pub fn pair_completion(partial: &BlockSystem, a: u32, b: u32) -> Result<ABInstance> {
    let n = a + b;
    if partial.n() != n || partial.r() != 4 {
        return Err(Error::Shape(format!("partial system must have n = {n}, r = 4")));
    }
    let covered = partial.covered_triples();
    if let Some(t) = (0..a).tuple_combinations().find(|&(x, y, z)| !covered.get(rank(&[x, y, z]))) {
        return Err(Error::PreconditionFailed(format!("triple {:?} inside A is not covered", [t.0, t.1, t.2])));
    }
    let mut present: HashSet<Block> = partial.blocks().iter().cloned().collect();
    let mut blocks = partial.blocks().to_vec();
    let mut expected = partial.len() as u64;
    for (x, y) in (0..a).tuple_combinations() {
        let u: Vec<u32> = (a..n).filter(|&z| !covered.get(rank(&[x, y, z]))).collect();
        expected += u.len().div_ceil(2) as u64;
        for c in u.chunks(2) {
            let blk = match *c {
                [p, q] => vec![x, y, p, q],
                [p] => (0..n)
                    .filter(|z| ![x, y, p].contains(z))
                    .map(|z| with(&[x, y, p], &[z]))
                    .find(|blk| !present.contains(blk))
                    .ok_or_else(|| Error::PreconditionFailed("no filler for odd completion".into()))?,
                _ => unreachable!(),
            };
            let blk = with(&blk, &[]);
            present.insert(blk.clone());
            blocks.push(blk);
        }
    }
    finish(a, b, blocks, expected, "pair completion")
}

/// f(a,a-1) for a = 0 mod 12 (a > 12) and a = 4 mod 12, from n-1 disjoint
/// STS(n+1) (n = a/2). B is {2n, ..., 4n-2}.
pub fn construct_0_4_mod12(a: u32, cat: &Catalog) -> Result<ABInstance> {
    let zero = a % 12 == 0 && a > 12;
    if !zero && a % 12 != 4 {
        return unsupported(format!("needs a = 0 mod 12 with a > 12, or a = 4 mod 12; got {a}"));
    }
    let n = a / 2;
    let b = a - 1;
    let ls = cat.large_set_sts(n + 1)?;
    let mut blocks: Vec<Block> = Vec::new();
    for (j, t) in ls.payload.iter().enumerate() {
        let y = [2 * n + j as u32, 3 * n - 1 + j as u32];
        for blk in t.blocks() {
            if blk[2] != n {
                for i in even_parities() {
                    blocks.push(with(&[blk[0] + i[0] * n, blk[1] + i[1] * n, blk[2] + i[2] * n], &[y[i[3] as usize]]));
                }
            } else {
                let (z1, z2) = (blk[0], blk[1]);
                blocks.push(with(&[z1, z1 + n, z2], &[y[0]]));
                blocks.push(with(&[z1, z1 + n, z2 + n], &[y[0]]));
                blocks.push(with(&[z2, z2 + n, z1], &[y[1]]));
                blocks.push(with(&[z2, z2 + n, z1 + n], &[y[1]]));
            }
        }
    }
    let (kind, pairs) = if zero { (LeaveKind::PerfectMatching, n) } else { (LeaveKind::NearOnePairShort, n - 1) };
    let target: Vec<[u32; 2]> = (0..pairs).map(|i| [i, i + n]).collect();
    let pack = construct_packing_with_leave(a, kind)?;
    let pack = pack.map(a, &align_perm(&leave(&pack), &target, a)?)?;
    if leave(&pack) != target {
        return Err(Error::PreconditionFailed("packing leave did not align".into()));
    }
    for t in pack.blocks() {
        blocks.push(with(t, &[4 * n - 2]));
    }
    let partial = BlockSystem::new(a + b, 4, blocks)?;
    let inst = pair_completion(&partial, a, b)?;
    let a64 = a as u64;
    let expected = (4 * a64.pow(3) - 5 * a64 * a64 + if zero { 0 } else { 16 }) / 24;
    if inst.len() as u64 != expected {
        return Err(Error::PreconditionFailed(format!("mod-12 built {}, expected {expected}", inst.len())));
    }
    Ok(inst)
}

/// (a-3)·C(a) blocks on A and a-3 points of B covering everything except the
/// triple {a-3, a-2, a-1}, for a = 2, 4 mod 6, a != 8. Returns that triple.
pub fn construct_partial_2_4_mod6(a: u32, cat: &Catalog) -> Result<(ABInstance, [u32; 3])> {
    if !(a % 6 == 2 || a % 6 == 4) || a == 8 || a < 4 {
        return unsupported(format!("needs a = 2, 4 mod 6, a >= 4, a != 8; got {a}"));
    }
    let b = a - 3;
    let fam = cat.covering_family(a - 1)?;
    if fam.len() as u32 > b {
        return Err(Error::MissingIngredient(format!("covering family for a={} too large", a - 1)));
    }
    let x = |i: u32| i - 1;
    let yy = |i: u32| a + i - 1;
    let m = a - 3;
    let idx = |k: i64| (k.rem_euclid(m as i64) as u32) + 1;
    let mut blocks: Vec<Block> = Vec::new();
    for i in 1..=b {
        for t in fam[(i - 1) as usize % fam.len()].blocks() {
            blocks.push(with(t, &[yy(i)]));
        }
    }
    for i in 1..=m {
        blocks.push(with(&[yy(i), x(a), x(a - 1)], &[x(i)]));
        blocks.push(with(&[yy(i), x(a), x(a - 2)], &[x(i)]));
        for j in 1..=(a - 4) / 2 {
            let (p, q) = (idx(i as i64 + j as i64 - 1), idx(i as i64 - j as i64 - 1));
            blocks.push(with(&[yy(i), x(a), x(p)], &[x(q)]));
        }
    }
    let missing = [a - 3, a - 2, a - 1];
    let inst = ABInstance::from_blocks(a, b, blocks)?;
    let covered = inst.system.covered_triples();
    let uncovered: Vec<Vec<u32>> = (0..a)
        .tuple_combinations()
        .map(|(p, q, r)| vec![p, q, r])
        .chain((0..a).tuple_combinations().flat_map(|(p, q)| (a..a + b).map(move |z| vec![p, q, z])))
        .filter(|t| !covered.get(rank(t)))
        .collect();
    if uncovered != [missing.to_vec()] {
        return Err(Error::PreconditionFailed(format!("partial system misses {uncovered:?}")));
    }
    let expected = m as u64 * (a as u64 * a as u64 + 2) / 6;
    if inst.len() as u64 != expected {
        return Err(Error::PreconditionFailed(format!("partial built {}, expected {expected}", inst.len())));
    }
    Ok((inst, missing))
}

/// f(a, a-3+2j) <= (a-3)(a²+2)/6 + j·⌈(2a²-a)/6⌉ for a = 2, 4 mod 6, a != 8.
pub fn construct_2_4_mod6(a: u32, j: u32, cat: &Catalog) -> Result<ABInstance> {
    if j == 0 {
        return domain("j must be at least 1");
    }
    let (partial, missing) = construct_partial_2_4_mod6(a, cat)?;
    let b = a - 3 + 2 * j;
    let pack = construct_max_packing(a)?;
    let first = &pack.blocks()[0];
    let mut perm = vec![u32::MAX; a as usize];
    for (s, t) in first.iter().zip(missing) {
        perm[*s as usize] = t;
    }
    let mut free = 0..;
    for p in perm.iter_mut().filter(|p| **p == u32::MAX) {
        *p = free.next().expect("unbounded");
    }
    let pack = pack.map(a, &perm)?;
    let lv = leave(&pack);
    let mut blocks = partial.system.into_blocks();
    for k in 0..j {
        let (y1, y2) = (2 * a - 3 + 2 * k, 2 * a - 2 + 2 * k);
        for t in pack.blocks() {
            blocks.push(with(t, &[y1]));
            blocks.push(with(t, &[y2]));
        }
        for [p, q] in &lv {
            blocks.push(vec![*p, *q, y1, y2]);
        }
    }
    let a64 = a as u64;
    let expected = (a64 - 3) * (a64 * a64 + 2) / 6 + j as u64 * (2 * a64 * a64 - a64).div_ceil(6);
    finish(a, b, blocks, expected, "mod-6")
}

/// f(a,a) <= C(a+1,3) with blocks {i,j,k,y_{i+j+k}} and {i,j,y_{2i+j},y_{i+2j}} over Z_a.
pub fn construct_cyclic(a: u32) -> Result<ABInstance> {
    if a < 3 {
        return domain(format!("cyclic construction needs a >= 3, got {a}"));
    }
    let y = |s: u32| a + s % a;
    let mut blocks: Vec<Block> = (0..a).tuple_combinations().map(|(i, j, k)| vec![i, j, k, y(i + j + k)]).collect();
    for (i, j) in (0..a).tuple_combinations() {
        blocks.push(with(&[i, j], &[y(2 * i + j), y(i + 2 * j)]));
    }
    finish(a, a, blocks, binom(a as u64 + 1, 3), "cyclic")
}

/// f(a, a-3+2j) <= (a-3)a²/6 + j(2a²-a)/6 for a = 0 mod 6, a >= 12, from an
/// aligned covering family (a-3 coverings plus a closing STS(a+1) whose extra
/// point is `a`).
pub fn construct_6t(a: u32, j: u32, family: &IngredientRecord) -> Result<ABInstance> {
    if a % 6 != 0 || a < 12 {
        return unsupported(format!("needs a = 0 mod 6, a >= 12; got {a}"));
    }
    if j == 0 {
        return domain("j must be at least 1");
    }
    if family.kind != IngredientKind::AlignedCoveringFamily || family.n != a + 1 || !family.verified {
        return Err(Error::InvalidIngredient(format!(
            "expected a verified aligned covering family on {} points",
            a + 1
        )));
    }
    let (sts, covers) = family.payload.split_last().expect("verified family is non-empty");
    let b = a - 3 + 2 * j;
    let mut blocks: Vec<Block> = Vec::new();
    for (i, c) in covers.iter().enumerate() {
        for t in c.blocks() {
            blocks.push(with(t, &[a + i as u32]));
        }
    }
    for k in 0..j {
        let (y1, y2) = (2 * a - 3 + 2 * k, 2 * a - 2 + 2 * k);
        for t in sts.blocks() {
            if t[2] == a {
                blocks.push(vec![t[0], t[1], y1, y2]);
            } else {
                blocks.push(with(t, &[y1]));
                blocks.push(with(t, &[y2]));
            }
        }
    }
    let a64 = a as u64;
    let expected = (a64 - 3) * a64 * a64 / 6 + j as u64 * (2 * a64 * a64 - a64) / 6;
    finish(a, b, blocks, expected, "6t")
}

/// f(a, 2a-2) <= (2a-2)·C_*(a) for even a. For a = 0, 2 mod 6 (a != 6) this
/// punctures a large set of STS(a+1) at the point `a`; a = 6 goes through the
/// doubling and two b+2 extensions.
pub fn construct_large_b(a: u32, cat: &Catalog) -> Result<ABInstance> {
    if a % 2 != 0 || a < 2 {
        return unsupported(format!("needs even a, got {a}"));
    }
    if a == 6 {
        let d = construct_doubling(6, cat)?;
        return extend_b_plus_2(&extend_b_plus_2(&d)?);
    }
    if a % 6 == 4 {
        return Err(Error::MissingIngredient(format!(
            "{} disjoint optimal packings on {} points covering every triple",
            a - 1,
            a + 1
        )));
    }
    let ls = cat.large_set_sts(a + 1)?;
    let mut blocks: Vec<Block> = Vec::new();
    let mut uncovered_in = vec![0u32; binom(a as u64, 2) as usize];
    for (i, t) in ls.payload.iter().enumerate() {
        let (y1, y2) = (a + 2 * i as u32, a + 2 * i as u32 + 1);
        for blk in t.blocks() {
            if blk[2] == a {
                uncovered_in[rank(&blk[..2])] += 1;
                blocks.push(vec![blk[0], blk[1], y1, y2]);
            } else {
                blocks.push(with(blk, &[y1]));
                blocks.push(with(blk, &[y2]));
            }
        }
    }
    if let Some(p) = uncovered_in.iter().position(|&c| c != 1) {
        return Err(Error::PreconditionFailed(format!(
            "pair with colex rank {p} is missed by {} punctured systems, expected exactly one",
            uncovered_in[p]
        )));
    }
    let expected = (a as u64 - 1) * c_star(a)?.halves() as u64;
    finish(a, 2 * a - 2, blocks, expected, "large-b")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> &'static Catalog {
        Catalog::bundled()
    }

    #[test]
    fn mu_examples() {
        assert_eq!(construct_mu(3, 1, cat()).unwrap().len(), 1);
        assert_eq!(construct_mu(9, 7, cat()).unwrap().len(), 84);
        assert!(construct_mu(5, 2, cat()).is_err());
        assert_eq!(construct_mu(7, 8, cat()).unwrap().len(), 56);
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(construct_lambda(12, 9, cat()).unwrap().len(), 220);
        assert!(construct_lambda(6, 1, cat()).unwrap().len() <= 20);
        assert!(construct_lambda(12, 10, cat()).is_err());
    }

    #[test]
    fn extensions() {
        let d = construct_doubling(6, cat()).unwrap();
        assert_eq!(d.len(), 33);
        assert_eq!(extend_b_plus_1(&d).unwrap().len(), 39);
        assert_eq!(extend_b_plus_2(&d).unwrap().len(), 44);
        let one = construct_mu(3, 1, cat()).unwrap();
        assert_eq!(extend_b_plus_2(&one).unwrap().len(), 3);
    }

    #[test]
    fn doubling_sizes() {
        assert_eq!(construct_doubling(2, cat()).unwrap().len(), 1);
        assert_eq!(construct_doubling(14, cat()).unwrap().len(), 441);
        assert!(construct_doubling(10, cat()).is_err());
    }

    #[test]
    fn pair_completion_counts() {
        let full = BlockSystem::new(5, 4, vec![vec![0, 1, 2, 3], vec![0, 1, 2, 4]]).unwrap();
        assert_eq!(pair_completion(&full, 3, 2).unwrap().len(), 2);
        let partial = BlockSystem::new(6, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        // pairs 01, 02, 12 each miss {4, 5}
        assert_eq!(pair_completion(&partial, 3, 3).unwrap().len(), 4);
        let odd = BlockSystem::new(6, 4, vec![vec![0, 1, 2, 5]]).unwrap();
        assert_eq!(pair_completion(&odd, 3, 3).unwrap().len(), 1 + 3);
        let bad = BlockSystem::new(6, 4, vec![vec![0, 1, 3, 4]]).unwrap();
        assert!(matches!(pair_completion(&bad, 3, 3), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn mod12_sizes() {
        assert_eq!(construct_0_4_mod12(4, cat()).unwrap().len(), 8);
        assert_eq!(construct_0_4_mod12(16, cat()).unwrap().len(), 630);
        assert!(construct_0_4_mod12(12, cat()).is_err());
    }

    #[test]
    fn mod6_sizes() {
        let (p, missing) = construct_partial_2_4_mod6(4, cat()).unwrap();
        assert_eq!((p.len(), missing), (3, [1, 2, 3]));
        assert_eq!(construct_partial_2_4_mod6(10, cat()).unwrap().0.len(), 119);
        assert!(construct_partial_2_4_mod6(8, cat()).is_err());
        assert_eq!(construct_2_4_mod6(4, 1, cat()).unwrap().len(), 8);
        assert_eq!(construct_2_4_mod6(4, 2, cat()).unwrap().len(), 13);
        assert_eq!(construct_2_4_mod6(10, 1, cat()).unwrap().len(), 151);
    }

    #[test]
    fn cyclic_sizes() {
        for a in 3..=10 {
            assert_eq!(construct_cyclic(a).unwrap().len() as u64, binom(a as u64 + 1, 3));
        }
        assert!(construct_cyclic(2).is_err());
    }

    #[test]
    fn six_t_sizes() {
        let fam = cat().aligned_family(12).unwrap();
        assert_eq!(construct_6t(12, 1, &fam).unwrap().len(), 262);
        assert_eq!(construct_6t(12, 2, &fam).unwrap().len(), 308);
        assert!(construct_6t(10, 1, &fam).is_err());
    }

    #[test]
    fn large_b_sizes() {
        assert_eq!(construct_large_b(2, cat()).unwrap().len(), 1);
        assert_eq!(construct_large_b(6, cat()).unwrap().len(), 55);
        assert_eq!(construct_large_b(8, cat()).unwrap().len(), 140);
        assert!(matches!(construct_large_b(4, cat()), Err(Error::MissingIngredient(_))));
    }
}
