//! Steiner quadruple systems: Boolean ones on 2^m points, the bundled SQS(10),
//! and the doubling 2v from v.

use super::ingredients::bundled_sqs10;
use super::verify::verify_sqs;
use crate::block::BlockSystem;
use crate::error::{unsupported, Result};
use itertools::Itertools;

/// Orders reachable from {2, 4, 8, 10} by doubling.
pub fn sqs_supported(v: u32) -> bool {
    let mut v = v;
    while v > 10 && v % 2 == 0 {
        v /= 2;
    }
    matches!(v, 2 | 4 | 8 | 10)
}

pub fn construct_sqs(v: u32) -> Result<BlockSystem> {
    if !sqs_supported(v) {
        return unsupported(format!("SQS({v}) is outside the supported family (powers of two and 10*2^k)"));
    }
    let sys = build(v)?;
    verify_sqs(&sys)?;
    Ok(sys)
}

fn build(v: u32) -> Result<BlockSystem> {
    if v.is_power_of_two() {
        return Ok(boolean(v));
    }
    if v == 10 {
        return bundled_sqs10();
    }
    double(&build(v / 2)?)
}

/// All 4-subsets of F_2^m with zero sum.
pub fn boolean(v: u32) -> BlockSystem {
    let blocks = (0..v)
        .combinations(3)
        .filter_map(|t| {
            let d = t[0] ^ t[1] ^ t[2];
            (d > t[2]).then(|| vec![t[0], t[1], t[2], d])
        })
        .collect();
    BlockSystem::new(v, 4, blocks).expect("boolean blocks are well formed")
}

/// SQS(2v) from SQS(v): each block lifts to its 8 even-parity copies, and each
/// pair {x, y} gives {x, x+v, y, y+v}.
pub fn double(q: &BlockSystem) -> Result<BlockSystem> {
    let v = q.n();
    let mut blocks = Vec::with_capacity(8 * q.len() + (v * (v - 1) / 2) as usize);
    for b in q.blocks() {
        for bits in 0u32..16 {
            if bits.count_ones() % 2 == 0 {
                blocks.push((0..4).map(|k| b[k] + ((bits >> k) & 1) * v).collect());
            }
        }
    }
    for (x, y) in (0..v).tuple_combinations() {
        blocks.push(vec![x, y, x + v, y + v]);
    }
    BlockSystem::new(2 * v, 4, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supported_family() {
        for v in [2, 4, 8, 10, 16, 20, 32, 40] {
            let s = construct_sqs(v).unwrap();
            assert_eq!(s.len() as u32, v * (v - 1) * (v - 2) / 24, "v={v}");
        }
        for v in [7, 14, 22, 26] {
            assert!(construct_sqs(v).is_err(), "v={v}");
        }
    }

    #[test]
    fn doubling_matches_count() {
        let d = double(&boolean(4)).unwrap();
        assert_eq!(d.len(), 14);
        verify_sqs(&d).unwrap();
    }
}
