//! Triangle decompositions of small multigraphs by randomized hill-climbing.
//!
//! The walk is the classical one for Steiner triple systems: pick a point with
//! two unused edges `xy`, `xz`; if `yz` is still free add `xyz`, otherwise evict
//! a triangle through `yz` and add `xyz` in its place. Seeds are fixed, so runs
//! are reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Edge multiplicities on `v` vertices (symmetric, zero diagonal).
#[derive(Clone, Debug)]
pub struct Multigraph {
    v: usize,
    cap: Vec<u8>,
    deg: Vec<u32>,
}

impl Multigraph {
    pub fn empty(v: usize) -> Self {
        Multigraph { v, cap: vec![0; v * v], deg: vec![0; v] }
    }

    pub fn complete(v: usize) -> Self {
        let mut g = Self::empty(v);
        for x in 0..v {
            for y in x + 1..v {
                g.set(x, y, 1);
            }
        }
        g
    }

    pub fn vertices(&self) -> usize {
        self.v
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.cap[x * self.v + y]
    }

    pub fn set(&mut self, x: usize, y: usize, c: u8) {
        let old = self.get(x, y) as u32;
        self.deg[x] = self.deg[x] + c as u32 - old;
        self.deg[y] = self.deg[y] + c as u32 - old;
        self.cap[x * self.v + y] = c;
        self.cap[y * self.v + x] = c;
    }

    pub fn add(&mut self, x: usize, y: usize, d: i8) {
        let c = (self.get(x, y) as i16 + d as i16).max(0) as u8;
        self.set(x, y, c);
    }

    fn degree(&self, x: usize) -> u32 {
        self.deg[x]
    }

    fn edge_count(&self) -> u32 {
        (0..self.v).map(|x| self.degree(x)).sum::<u32>() / 2
    }
}

/// Triangles using every edge exactly as often as its multiplicity, with no
/// triangle repeated. `None` when the step budget runs out or the graph fails
/// the obvious divisibility conditions.
pub fn decompose(g: &Multigraph, seed: u64, max_steps: u64) -> Option<Vec<[u32; 3]>> {
    let v = g.v;
    if g.edge_count() % 3 != 0 || (0..v).any(|x| g.degree(x) % 2 != 0) {
        return None;
    }
    let target = (g.edge_count() / 3) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut free = g.clone();
    let mut tris: Vec<[usize; 3]> = Vec::new();
    let mut present: HashSet<[usize; 3]> = HashSet::new();
    let sort3 = |mut t: [usize; 3]| {
        t.sort_unstable();
        t
    };
    for _ in 0..max_steps {
        if tris.len() == target {
            let mut out: Vec<[u32; 3]> = tris.iter().map(|t| [t[0] as u32, t[1] as u32, t[2] as u32]).collect();
            out.sort_unstable();
            return Some(out);
        }
        let live: Vec<usize> = (0..v).filter(|&x| free.degree(x) > 0).collect();
        let x = *live.choose(&mut rng)?;
        let nbrs: Vec<usize> = (0..v).filter(|&y| free.get(x, y) > 0).collect();
        if nbrs.len() < 2 {
            // x only has parallel copies of one free edge left; evict a triangle at x
            let at_x: Vec<usize> = (0..tris.len()).filter(|&i| tris[i].contains(&x)).collect();
            if !at_x.is_empty() {
                let t = tris.swap_remove(at_x[rng.gen_range(0..at_x.len())]);
                present.remove(&t);
                free.add(t[0], t[1], 1);
                free.add(t[0], t[2], 1);
                free.add(t[1], t[2], 1);
            }
            continue;
        }
        let i = rng.gen_range(0..nbrs.len());
        let mut j = rng.gen_range(0..nbrs.len() - 1);
        if j >= i {
            j += 1;
        }
        let (y, z) = (nbrs[i], nbrs[j]);
        let t = sort3([x, y, z]);
        if present.contains(&t) {
            continue;
        }
        if free.get(y, z) == 0 {
            let through: Vec<usize> =
                (0..tris.len()).filter(|&k| tris[k].contains(&y) && tris[k].contains(&z)).collect();
            if through.is_empty() {
                continue;
            }
            let k = through[rng.gen_range(0..through.len())];
            let old = tris.swap_remove(k);
            present.remove(&old);
            free.add(old[0], old[1], 1);
            free.add(old[0], old[2], 1);
            free.add(old[1], old[2], 1);
        }
        free.add(x, y, -1);
        free.add(x, z, -1);
        free.add(y, z, -1);
        present.insert(t);
        tris.push(t);
    }
    None
}

/// Try a handful of seeds with a generous step budget.
pub fn decompose_with_restarts(g: &Multigraph, base_seed: u64) -> Option<Vec<[u32; 3]>> {
    let steps = 200_000 + 2_000 * (g.vertices() as u64).pow(2);
    (0..64).find_map(|s| decompose(g, base_seed.wrapping_add(s), steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_small_steiner_systems() {
        for v in [7usize, 9, 13, 15, 19] {
            let t = decompose_with_restarts(&Multigraph::complete(v), 1).unwrap();
            assert_eq!(t.len(), v * (v - 1) / 6);
        }
    }

    #[test]
    fn rejects_odd_degrees() {
        assert!(decompose(&Multigraph::complete(6), 0, 1000).is_none());
    }

    #[test]
    fn deterministic_for_a_seed() {
        let g = Multigraph::complete(13);
        assert_eq!(decompose(&g, 5, 100_000), decompose(&g, 5, 100_000));
    }
}
