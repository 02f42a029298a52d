//! Exact minimum covers for desk-scale instances, as ground truth for the
//! closed forms and constructions.
//!
//! The search is iterative deepening on total cost. Each round branches on
//! the first uncovered target and tries its candidates in order, pruned by a
//! bound from targets that no single candidate can cover together. The
//! feasibility test of a round runs its first branching level in parallel;
//! the witness is then re-found sequentially, so the reported optimum and
//! witness do not depend on the thread count.

use crate::block::Block;
use crate::combin::{binom, Bits};
use crate::designs::HalfInt;
use crate::error::{Error, Result};
use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    pub nodes: u64,
    pub secs: f64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { nodes: 10_000_000, secs: 60.0 }
    }
}

/// Targets to cover and candidate blocks with costs; `covers[c]` is the set
/// of targets candidate `c` covers.
#[derive(Clone, Debug)]
pub struct CoverInstance {
    pub targets: Vec<Block>,
    pub candidates: Vec<Block>,
    pub costs: Vec<u64>,
    pub covers: Vec<Bits>,
}

impl CoverInstance {
    /// Builds the cover relation from a predicate on (target, candidate).
    pub fn new(
        targets: Vec<Block>,
        candidates: Vec<Block>,
        costs: Vec<u64>,
        covers: impl Fn(&[u32], &[u32]) -> bool,
    ) -> Self {
        let cov = candidates
            .iter()
            .map(|c| {
                let mut bits = Bits::new(targets.len());
                for (i, t) in targets.iter().enumerate() {
                    if covers(t, c) {
                        bits.set(i);
                    }
                }
                bits
            })
            .collect();
        CoverInstance { targets, candidates, costs, covers: cov }
    }

    /// Relabels every point through `perm` and re-sorts targets and
    /// candidates, so the search meets them in a different order.
    pub fn relabel(&self, perm: &[u32]) -> Self {
        let map = |b: &Block| {
            let mut v: Block = b.iter().map(|&x| perm[x as usize]).collect();
            v.sort_unstable();
            v
        };
        let sorted = |blocks: &[Block]| {
            let mapped: Vec<Block> = blocks.iter().map(map).collect();
            let mut order: Vec<usize> = (0..mapped.len()).collect();
            order.sort_by(|&x, &y| mapped[x].cmp(&mapped[y]));
            let mut pos = vec![0; mapped.len()];
            for (new, &old) in order.iter().enumerate() {
                pos[old] = new;
            }
            (order.iter().map(|&i| mapped[i].clone()).collect::<Vec<_>>(), order, pos)
        };
        let (targets, _, tpos) = sorted(&self.targets);
        let (candidates, corder, _) = sorted(&self.candidates);
        let covers = corder
            .iter()
            .map(|&c| {
                let mut bits = Bits::new(targets.len());
                self.covers[c].iter().for_each(|t| bits.set(tpos[t]));
                bits
            })
            .collect();
        CoverInstance { targets, candidates, costs: corder.iter().map(|&c| self.costs[c]).collect(), covers }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleStatus {
    Optimal,
    TimeoutWithBounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub millis: u64,
    pub bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    /// The optimum when `status` is optimal, else the best cost found.
    pub optimum: u64,
    /// Proven lower bound (equals `optimum` when optimal).
    pub lower: u64,
    pub witness: Vec<Block>,
    pub status: OracleStatus,
    pub stats: SearchStats,
}

impl OracleResult {
    pub fn is_optimal(&self) -> bool {
        self.status == OracleStatus::Optimal
    }

    pub fn summary(&self) -> String {
        match self.status {
            OracleStatus::Optimal => format!("optimal {}", self.optimum),
            OracleStatus::TimeoutWithBounds => format!("bounds {}..{}", self.lower, self.optimum),
        }
    }
}

struct Search<'a> {
    inst: &'a CoverInstance,
    by_target: Vec<Vec<usize>>,
    /// Per target, its candidates as a bitset, for the independence bound.
    cand_bits: Vec<Bits>,
    min_cost: Vec<u64>,
    nodes: AtomicU64,
    stop: AtomicBool,
    budget: Budget,
    start: Instant,
}

impl<'a> Search<'a> {
    fn new(inst: &'a CoverInstance, budget: Budget) -> Result<Self> {
        let nt = inst.targets.len();
        let mut by_target = vec![Vec::new(); nt];
        for (c, bits) in inst.covers.iter().enumerate() {
            for t in bits.iter() {
                by_target[t].push(c);
            }
        }
        if let Some(t) = by_target.iter().position(Vec::is_empty) {
            return Err(Error::PreconditionFailed(format!("target {:?} has no candidate", inst.targets[t])));
        }
        let cand_bits = by_target
            .iter()
            .map(|cs| {
                let mut b = Bits::new(inst.candidates.len());
                cs.iter().for_each(|&c| b.set(c));
                b
            })
            .collect();
        let min_cost = by_target.iter().map(|cs| cs.iter().map(|&c| inst.costs[c]).min().unwrap()).collect();
        Ok(Search {
            inst,
            by_target,
            cand_bits,
            min_cost,
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            budget,
            start: Instant::now(),
        })
    }

    /// Max of two bounds. Targets picked greedily so that no candidate covers
    /// two of them each need their own candidate; and every target pays at
    /// least the cheapest per-target price among candidates covering it.
    fn bound(&self, uncovered: &Bits) -> u64 {
        let mut used = Bits::new(self.inst.candidates.len());
        let mut lb = 0;
        for t in uncovered.iter() {
            if !self.cand_bits[t].intersects(&used) {
                lb += self.min_cost[t];
                used.or_assign(&self.cand_bits[t]);
            }
        }
        let gain: Vec<u64> = self.inst.covers.iter().map(|c| c.and_count(uncovered) as u64).collect();
        let mut share = 0.0f64;
        for t in uncovered.iter() {
            share += self.by_target[t]
                .iter()
                .map(|&c| self.inst.costs[c] as f64 / gain[c] as f64)
                .fold(f64::INFINITY, f64::min);
        }
        lb.max((share - 1e-9).ceil() as u64)
    }

    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget.nodes || (n % 4096 == 0 && self.start.elapsed() > Duration::from_secs_f64(self.budget.secs))
        {
            self.stop.store(true, Ordering::Relaxed);
        }
        !self.stop.load(Ordering::Relaxed)
    }

    /// Depth-first search for a cover of cost at most `limit`.
    fn dfs(&self, uncovered: &Bits, cost: u64, limit: u64, chosen: &mut Vec<usize>) -> bool {
        if !self.tick() {
            return false;
        }
        let Some(t) = uncovered.first() else { return true };
        if cost + self.bound(uncovered) > limit {
            return false;
        }
        for &c in &self.by_target[t] {
            let nc = cost + self.inst.costs[c];
            if nc > limit {
                continue;
            }
            let mut next = uncovered.clone();
            next.and_not_assign(&self.inst.covers[c]);
            chosen.push(c);
            if self.dfs(&next, nc, limit, chosen) {
                return true;
            }
            chosen.pop();
            if self.stop.load(Ordering::Relaxed) {
                return false;
            }
        }
        false
    }

    fn feasible_parallel(&self, all: &Bits, limit: u64) -> bool {
        let Some(t) = all.first() else { return true };
        self.by_target[t].par_iter().any(|&c| {
            let cost = self.inst.costs[c];
            if cost > limit {
                return false;
            }
            let mut next = all.clone();
            next.and_not_assign(&self.inst.covers[c]);
            self.dfs(&next, cost, limit, &mut vec![c])
        })
    }

    fn greedy(&self) -> Vec<usize> {
        let mut unc = Bits::full(self.inst.targets.len());
        let mut out = Vec::new();
        while let Some(t) = unc.first() {
            let c = *self.by_target[t]
                .iter()
                .max_by_key(|&&c| (self.inst.covers[c].and_count(&unc) * 1000) as u64 / self.inst.costs[c])
                .unwrap();
            unc.and_not_assign(&self.inst.covers[c]);
            out.push(c);
        }
        out
    }
}

/// Exact minimum-cost cover within the budget.
pub fn exact_min_cover(inst: &CoverInstance, budget: Budget) -> Result<OracleResult> {
    exact_min_cover_seeded(inst, budget, None)
}

/// As [`exact_min_cover`], with a known cover (blocks from the candidate
/// list) as the starting upper bound. A seed that is not a cover is an error.
pub fn exact_min_cover_seeded(inst: &CoverInstance, budget: Budget, seed: Option<&[Block]>) -> Result<OracleResult> {
    let s = Search::new(inst, budget)?;
    let all = Bits::full(inst.targets.len());
    let cost_of = |w: &[usize]| w.iter().map(|&c| inst.costs[c]).sum::<u64>();
    let mut best = s.greedy();
    if let Some(seed) = seed {
        let mut idx = Vec::with_capacity(seed.len());
        let mut unc = all.clone();
        for b in seed {
            let c = inst
                .candidates
                .iter()
                .position(|c| c == b)
                .ok_or_else(|| Error::Shape(format!("seed block {b:?} is not a candidate")))?;
            unc.and_not_assign(&inst.covers[c]);
            idx.push(c);
        }
        if let Some(t) = unc.first() {
            return Err(Error::PreconditionFailed(format!("seed misses target {:?}", inst.targets[t])));
        }
        if cost_of(&idx) < cost_of(&best) {
            best = idx;
        }
    }
    let mut upper = cost_of(&best);
    let mut k = s.bound(&all);
    let stats = |s: &Search, bound: u64| SearchStats {
        nodes: s.nodes.load(Ordering::Relaxed),
        millis: s.start.elapsed().as_millis() as u64,
        bound: format!("independent targets / price share (root {bound})"),
    };
    let root = k;
    let witness = |idx: &[usize]| {
        let mut w: Vec<Block> = idx.iter().map(|&c| inst.candidates[c].clone()).collect();
        w.sort();
        w
    };
    while k < upper {
        let found = s.feasible_parallel(&all, k);
        if s.stop.load(Ordering::Relaxed) {
            return Ok(OracleResult {
                optimum: upper,
                lower: k,
                witness: witness(&best),
                status: OracleStatus::TimeoutWithBounds,
                stats: stats(&s, root),
            });
        }
        if found {
            let mut chosen = Vec::new();
            let again = s.dfs(&all, 0, k, &mut chosen);
            if !again {
                // Only a budget stop can get here.
                return Ok(OracleResult {
                    optimum: upper,
                    lower: k,
                    witness: witness(&best),
                    status: OracleStatus::TimeoutWithBounds,
                    stats: stats(&s, root),
                });
            }
            upper = cost_of(&chosen);
            best = chosen;
            break;
        }
        k += 1;
    }
    // Either the loop proved k = upper is the least feasible cost or it
    // found a witness at the first feasible k.
    Ok(OracleResult {
        optimum: upper,
        lower: upper,
        witness: witness(&best),
        status: OracleStatus::Optimal,
        stats: stats(&s, root),
    })
}

fn subsets(n: u32, k: usize) -> Vec<Block> {
    (0..n).combinations(k).collect()
}

fn subset_of(t: &[u32], c: &[u32]) -> bool {
    t.iter().all(|x| c.binary_search(x).is_ok())
}

fn meet(t: &[u32], c: &[u32]) -> usize {
    t.iter().filter(|x| c.binary_search(x).is_ok()).count()
}

/// f_r(a,b) as set cover. Blocks with fewer than two points of A cover no
/// target and are left out.
pub fn fr_instance(a: u32, b: u32, r: u32) -> CoverInstance {
    let targets: Vec<Block> = subsets(a + b, 3).into_iter().filter(|t| t[1] < a).collect();
    let cands: Vec<Block> = subsets(a + b, r as usize).into_iter().filter(|c| c.len() >= 2 && c[1] < a).collect();
    let costs = vec![1; cands.len()];
    CoverInstance::new(targets, cands, costs, subset_of)
}

pub fn f_instance(a: u32, b: u32) -> CoverInstance {
    fr_instance(a, b, 4)
}

/// L(n,r,3,4): every 4-subset must meet a block in at least three points.
pub fn l_instance(n: u32, r: u32) -> CoverInstance {
    let targets = subsets(n, 4);
    let cands = subsets(n, r as usize);
    let costs = vec![1; cands.len()];
    CoverInstance::new(targets, cands, costs, |t, c| meet(t, c) >= 3)
}

/// C(a,3,2): triples covering all pairs.
pub fn covering_instance(a: u32) -> CoverInstance {
    let targets = subsets(a, 2);
    let cands = subsets(a, 3);
    let costs = vec![1; cands.len()];
    CoverInstance::new(targets, cands, costs, subset_of)
}

/// Twice the minimum weight: triples cost 2, a pair left to itself costs 1.
pub fn weight_instance(a: u32) -> CoverInstance {
    let targets = subsets(a, 2);
    let mut cands = subsets(a, 3);
    let mut costs = vec![2; cands.len()];
    cands.extend(targets.iter().cloned());
    costs.resize(cands.len(), 1);
    CoverInstance::new(targets, cands, costs, subset_of)
}

pub fn exact_f(a: u32, b: u32, budget: Budget) -> Result<OracleResult> {
    exact_min_cover(&f_instance(a, b), budget)
}

pub fn exact_fr(a: u32, b: u32, r: u32, budget: Budget) -> Result<OracleResult> {
    exact_min_cover(&fr_instance(a, b, r), budget)
}

/// Exact L(n). From n = 9 on, the best assembled lottery system seeds the
/// upper bound.
pub fn exact_l(n: u32, budget: Budget) -> Result<OracleResult> {
    let inst = l_instance(n, 4);
    let seed = if n >= 9 {
        let cat = crate::designs::Catalog::bundled();
        crate::lottery::partition_search(n, cat)?
            .best
            .and_then(|p| crate::lottery::assemble(p.parts, cat).ok())
            .map(|l| l.system.blocks().to_vec())
    } else {
        None
    };
    exact_min_cover_seeded(&inst, budget, seed.as_deref())
}

pub fn exact_covering(a: u32, budget: Budget) -> Result<OracleResult> {
    exact_min_cover(&covering_instance(a), budget)
}

/// Minimum weight of a triple system on `a` points, with the optimum as witness.
pub fn exact_min_weight(a: u32, budget: Budget) -> Result<(HalfInt, OracleResult)> {
    let r = exact_min_cover(&weight_instance(a), budget)?;
    Ok((HalfInt::from_halves(r.optimum as i64), r))
}

/// Maximum packing of triples on `a` points (pairs used at most once).
pub fn exact_packing(a: u32, budget: Budget) -> Result<OracleResult> {
    let triples = subsets(a, 3);
    let pair = |x: u32, y: u32| (binom(y as u64, 2) + x as u64) as usize;
    let start = Instant::now();
    let mut nodes = 0u64;
    let mut used = Bits::new(binom(a as u64, 2) as usize);
    let mut deg = vec![a.saturating_sub(1); a as usize];
    let mut chosen: Vec<usize> = Vec::new();
    let mut best: Vec<usize> = Vec::new();
    let mut stopped = false;

    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        triples: &[Block],
        pair: &dyn Fn(u32, u32) -> usize,
        used: &mut Bits,
        deg: &mut [u32],
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
        nodes: &mut u64,
        budget: &Budget,
        start: &Instant,
        stopped: &mut bool,
    ) {
        *nodes += 1;
        if *nodes > budget.nodes || (*nodes % 4096 == 0 && start.elapsed().as_secs_f64() > budget.secs) {
            *stopped = true;
        }
        if *stopped {
            return;
        }
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        let cap: u32 = deg.iter().map(|d| d / 2).sum::<u32>() / 3;
        if chosen.len() + cap as usize <= best.len() || i == triples.len() {
            return;
        }
        let t = &triples[i];
        let ps = [pair(t[0], t[1]), pair(t[0], t[2]), pair(t[1], t[2])];
        if ps.iter().all(|&p| !used.get(p)) {
            ps.iter().for_each(|&p| used.set(p));
            t.iter().for_each(|&x| deg[x as usize] -= 2);
            chosen.push(i);
            go(i + 1, triples, pair, used, deg, chosen, best, nodes, budget, start, stopped);
            chosen.pop();
            t.iter().for_each(|&x| deg[x as usize] += 2);
            ps.iter().for_each(|&p| used.clear(p));
        }
        go(i + 1, triples, pair, used, deg, chosen, best, nodes, budget, start, stopped);
    }

    go(0, &triples, &pair, &mut used, &mut deg, &mut chosen, &mut best, &mut nodes, &budget, &start, &mut stopped);
    let optimum = best.len() as u64;
    let cap = (0..a).map(|_| a.saturating_sub(1) / 2).sum::<u32>() as u64 / 3;
    Ok(OracleResult {
        optimum,
        lower: optimum,
        witness: best.iter().map(|&i| triples[i].clone()).collect(),
        status: if stopped { OracleStatus::TimeoutWithBounds } else { OracleStatus::Optimal },
        stats: SearchStats {
            nodes,
            millis: start.elapsed().as_millis() as u64,
            bound: format!("half-degree (root {cap})"),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_f_values() {
        let b = Budget::default();
        assert_eq!(exact_f(3, 1, b).unwrap().optimum, 1);
        assert_eq!(exact_f(3, 2, b).unwrap().optimum, 2);
        assert_eq!(exact_f(2, 3, b).unwrap().optimum, 2);
        let r = exact_f(4, 3, b).unwrap();
        assert!(r.is_optimal());
        assert_eq!(r.optimum, 8);
        assert_eq!(r.witness.len(), 8);
    }

    #[test]
    fn tiny_designs() {
        let b = Budget::default();
        assert_eq!(exact_covering(5, b).unwrap().optimum, 4);
        assert_eq!(exact_min_weight(4, b).unwrap().0, HalfInt::from_halves(5));
        assert_eq!(exact_packing(7, b).unwrap().optimum, 7);
        assert_eq!(exact_l(5, b).unwrap().optimum, 1);
    }

    #[test]
    fn exhausted_budget_reports_bounds() {
        let r = exact_l(8, Budget { nodes: 10, secs: 60.0 }).unwrap();
        assert_eq!(r.status, OracleStatus::TimeoutWithBounds);
        assert!(r.lower <= r.optimum);
        assert!(r.summary().starts_with("bounds "));
    }
}
